#pragma once

#include "gamma02/mat2.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gamma02 {

// (2^n, alpha; beta*N, (alpha*beta*N + 1) / 2^n) with n >= 1, alpha and beta
// odd, |alpha|, |beta| <= 2^(n-1), alpha*beta*N = -1 (mod 2^n).
struct LElementDescriptor {
  unsigned long n = 1;
  Integer alpha;
  Integer beta;

  Mat2 matrix(const LevelContext& ctx) const;
  std::string to_string() const;  // "(n,alpha,beta)"

  friend bool operator==(const LElementDescriptor& x, const LElementDescriptor& y) {
    return x.n == y.n && x.alpha == y.alpha && x.beta == y.beta;
  }
  friend bool operator<(const LElementDescriptor& x, const LElementDescriptor& y);
};

bool in_gamma0(const Mat2& m, const LevelContext& ctx);
bool in_gamma02(const Mat2& m, const LevelContext& ctx);
bool in_G02(const Mat2& m, const LevelContext& ctx);
bool in_L02(const Mat2& m, const LevelContext& ctx);

// Exponent n of the top-left entry 2^n of a G02 member; throws PreconditionError otherwise.
unsigned long G02_level(const Mat2& m, const LevelContext& ctx);

// Throws PreconditionError unless in_L02(m).
LElementDescriptor descriptor_of(const Mat2& m, const LevelContext& ctx);

// All admissible descriptors with 1 <= n <= n_max, ordered by (n, alpha, beta).
std::vector<LElementDescriptor> enumerate_L_descriptors(const LevelContext& ctx,
                                                        unsigned long n_max);

// Dirichlet characters mod N kept as exponent vectors over the cyclic factors
// (Z/p^e Z)*, each generated by a primitive root. chi(x) is an element of
// Q/Z stored as a numerator over the lcm of the factor orders.
class CharacterOracle {
 public:
  explicit CharacterOracle(const LevelContext& ctx);

  // True iff chi(residue) = 1 for every chi with chi(2) = 1.
  bool annihilated_by_characters_trivial_on_two(const Integer& residue) const;

  std::size_t group_order() const noexcept { return group_order_; }
  std::size_t kernel_size() const noexcept { return trivial_on_two_.size(); }

 private:
  struct Factor {
    std::int64_t modulus;         // p^e
    std::int64_t order;           // phi(p^e)
    std::vector<std::int64_t> log;  // discrete log base the primitive root, -1 if not a unit
  };

  // Per-factor logs of the residue; empty if the residue is not a unit.
  std::vector<std::int64_t> logs_of(const Integer& residue) const;

  std::int64_t N_;
  std::int64_t exponent_lcm_ = 1;
  std::size_t group_order_ = 1;
  std::vector<Factor> factors_;
  std::vector<std::vector<std::int64_t>> trivial_on_two_;  // exponent vectors
};

// Requires in_gamma0(m); throws PreconditionError otherwise.
bool in_gamma02_by_characters(const Mat2& m, const LevelContext& ctx);
bool in_gamma02_by_characters(const Mat2& m, const LevelContext& ctx,
                              const CharacterOracle& oracle);

}  // namespace gamma02
