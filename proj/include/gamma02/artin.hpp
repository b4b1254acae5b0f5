#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gamma02 {

// b = 2^n (mod d + kM) with d + kM > 1.
struct ArtinWitness {
  std::int64_t d = 0;
  std::int64_t b = 0;
  std::int64_t M = 0;
  std::uint64_t k = 0;
  std::uint64_t n = 0;
  std::uint64_t modulus = 0;  // d + kM
};

// Smallest k in [0, k_max] admitting an exponent n <= n_cap, then the
// smallest such n. Requires d, b, M >= 1 and gcd(d, bM) = 1 (PreconditionError).
// Throws SearchExhausted naming the scanned range when no k works.
ArtinWitness artin_search(std::int64_t d, std::int64_t b, std::int64_t M, std::uint64_t k_max,
                          std::uint64_t n_cap);

// Recomputes 2^n mod (d + kM) by square-and-multiply.
bool verify_witness(const ArtinWitness& w);

struct ArtinSurvey {
  std::int64_t bound = 0;  // 1 <= d, b, M <= bound
  std::uint64_t k_max = 0;
  std::uint64_t n_cap = 0;
  std::size_t triples = 0;  // with gcd(d, bM) = 1
  std::size_t found = 0;
  std::uint64_t max_k = 0;
  std::uint64_t max_n = 0;
  ArtinWitness argmax_k;
  ArtinWitness argmax_n;
  std::vector<std::string> exhausted;  // "(d,b,M)"
  std::vector<std::uint64_t> k_histogram;  // k_histogram[k] = number of triples with that k
};

}  // namespace gamma02
