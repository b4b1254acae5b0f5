#include "gamma02/word.hpp"

#include "gamma02/errors.hpp"

namespace gamma02 {

std::string Token::to_string() const {
  if (kind == Kind::Cert) return (exponent < 0 ? "cert-1:" : "cert:") + key;
  const std::string name = kind == Kind::T ? "T" : "W";
  if (exponent == 1) return name;
  if (exponent == -1) return name + "-1";
  return name + "^" + exponent.get_str();
}

Token Token::parse(std::string_view text) {
  const std::string s(text);
  if (s.rfind("cert:", 0) == 0) return cert(s.substr(5));
  if (s.rfind("cert-1:", 0) == 0) return cert(s.substr(7), true);
  if (s.empty() || (s[0] != 'T' && s[0] != 'W')) throw InputError("bad word token '" + s + "'");
  Token t = s[0] == 'T' ? T() : W();
  const std::string rest = s.substr(1);
  if (rest.empty()) return t;
  if (rest == "-1") {
    t.exponent = -1;
    return t;
  }
  if (rest[0] != '^' || t.exponent.set_str(rest.substr(1), 10) != 0 || t.exponent == 0) {
    throw InputError("bad word token '" + s + "'");
  }
  return t;
}

GeneratorWord collapse(const GeneratorWord& w) {
  GeneratorWord out;
  for (const Token& t : w) {
    if (t.kind != Token::Kind::Cert && t.exponent == 0) continue;
    if (!out.empty()) {
      Token& back = out.back();
      if (t.kind != Token::Kind::Cert && back.kind == t.kind) {
        back.exponent += t.exponent;
        if (back.exponent == 0) out.pop_back();
        continue;
      }
      if (t.kind == Token::Kind::Cert && back.kind == Token::Kind::Cert && back.key == t.key &&
          back.exponent == -t.exponent) {
        out.pop_back();
        continue;
      }
    }
    out.push_back(t);
  }
  return out;
}

GeneratorWord inverse(const GeneratorWord& w) {
  GeneratorWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

GeneratorWord concat(GeneratorWord a, const GeneratorWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<std::string> to_strings(const GeneratorWord& w) {
  std::vector<std::string> out;
  out.reserve(w.size());
  for (const Token& t : w) out.push_back(t.to_string());
  return out;
}

GeneratorWord parse_word(const std::vector<std::string>& tokens) {
  GeneratorWord out;
  out.reserve(tokens.size());
  for (const auto& s : tokens) out.push_back(Token::parse(s));
  return out;
}

Mat2 replay_tw(const GeneratorWord& w, const LevelContext& ctx) {
  Mat2 acc = Mat2::identity();
  for (const Token& t : w) {
    switch (t.kind) {
      case Token::Kind::T:
        acc = acc * T_pow(t.exponent);
        break;
      case Token::Kind::W:
        acc = acc * W_pow(t.exponent, ctx);
        break;
      case Token::Kind::Cert:
        throw PreconditionError("word contains a certificate token");
    }
  }
  return acc;
}

}  // namespace gamma02
