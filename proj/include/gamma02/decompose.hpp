#pragma once

#include "gamma02/knowledge_base.hpp"
#include "gamma02/subgroups.hpp"

#include <optional>
#include <string>

namespace gamma02 {

// Word [W^k, cert(L), T^l] (runs of length zero omitted) replaying to psi,
// with L in L02. For top-left 1 the word is [W^beta, T^b]. Missing L
// certificates are derived on demand, or reported as MissingCertificate.
GeneratorWord decompose_G02(const Mat2& psi, KnowledgeBase& kb, bool certify_on_demand = true);

struct DecomposeBounds {
  std::int64_t k_max = 64;      // |k| for the W shift before the first factor
  unsigned long n_cap = 256;    // largest power of two allowed in either factor
  bool certify_on_demand = true;
};

// g = W^k * delta1 * delta2 * W^l, each delta in G02 or the inverse of a G02 element.
struct NormalForm {
  Integer k;
  GeneratorWord delta1;
  GeneratorWord delta2;
  Integer l;
};

struct Gamma02Decomposition {
  GeneratorWord word;  // collapsed
  NormalForm normal_form;
  std::string route;
  unsigned long level = 0;  // largest G02 level among the two factors
};

// Throws PreconditionError unless in_gamma02(g); SearchExhausted when no
// factorisation exists within bounds; VerificationFailure if the assembled
// word does not replay to g.
Gamma02Decomposition decompose_Gamma02(const Mat2& g, KnowledgeBase& kb,
                                       const DecomposeBounds& bounds = {});

bool in_G02_or_inverse(const Mat2& m, const LevelContext& ctx);

// Splits a collapsed word as W^k | u | v | W^l with replay(u), replay(v) in
// G02 or G02^-1.
std::optional<NormalForm> match_normal_form(const GeneratorWord& word, const KnowledgeBase& kb);

}  // namespace gamma02
