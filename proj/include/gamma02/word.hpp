#pragma once

#include "gamma02/mat2.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace gamma02 {

// One letter of a generator word: T^e, W^e, or a certified matrix (or its
// inverse) referenced by canonical key.
struct Token {
  enum class Kind { T, W, Cert };

  Kind kind = Kind::T;
  Integer exponent = 1;  // +-1 for Cert
  std::string key;       // Cert only

  static Token T(const Integer& e = 1) { return {Kind::T, e, {}}; }
  static Token W(const Integer& e = 1) { return {Kind::W, e, {}}; }
  static Token cert(std::string key, bool inverse = false) {
    return {Kind::Cert, inverse ? -1 : 1, std::move(key)};
  }

  Token inverse() const { return {kind, -exponent, key}; }

  // "T", "T-1", "T^5", "W^-3", "cert:2,-1,-3,2", "cert-1:2,-1,-3,2".
  std::string to_string() const;
  static Token parse(std::string_view text);

  friend bool operator==(const Token& x, const Token& y) {
    return x.kind == y.kind && x.exponent == y.exponent && x.key == y.key;
  }
};

using GeneratorWord = std::vector<Token>;

// Merges adjacent T (resp. W) runs, drops zero exponents and cancels
// adjacent cert/cert-1 pairs with the same key, until stable.
GeneratorWord collapse(const GeneratorWord& w);

GeneratorWord inverse(const GeneratorWord& w);

GeneratorWord concat(GeneratorWord a, const GeneratorWord& b);

std::vector<std::string> to_strings(const GeneratorWord& w);
GeneratorWord parse_word(const std::vector<std::string>& tokens);

// Exact product of a word with no Cert tokens; throws PreconditionError otherwise.
Mat2 replay_tw(const GeneratorWord& w, const LevelContext& ctx);

}  // namespace gamma02
