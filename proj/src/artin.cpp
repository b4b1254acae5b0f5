#include "gamma02/artin.hpp"

#include "gamma02/errors.hpp"
#include "gamma02/number_theory.hpp"

#include <numeric>

namespace gamma02 {

ArtinWitness artin_search(std::int64_t d, std::int64_t b, std::int64_t M, std::uint64_t k_max,
                          std::uint64_t n_cap) {
  if (d < 1 || b < 1 || M < 1) throw PreconditionError("artin_search needs d, b, M >= 1");
  if (std::gcd(d, b * M) != 1) {
    throw PreconditionError("artin_search needs gcd(d, bM) = 1 (d=" + std::to_string(d) +
                            ", b=" + std::to_string(b) + ", M=" + std::to_string(M) + ")");
  }
  const auto ud = static_cast<std::uint64_t>(d);
  const auto uM = static_cast<std::uint64_t>(M);
  if (k_max > (std::uint64_t{1} << 62) / uM) throw PreconditionError("k_max too large");
  for (std::uint64_t k = 0; k <= k_max; ++k) {
    const std::uint64_t m = ud + k * uM;
    if (m <= 1) continue;
    if (const auto n = nt::smallest_pow2_exponent(static_cast<std::uint64_t>(b), m, n_cap)) {
      return {d, b, M, k, *n, m};
    }
  }
  throw SearchExhausted("no k in [0, " + std::to_string(k_max) + "] with n <= " +
                        std::to_string(n_cap) + " for (d,b,M) = (" + std::to_string(d) + "," +
                        std::to_string(b) + "," + std::to_string(M) + ")");
}

bool verify_witness(const ArtinWitness& w) {
  const std::uint64_t m = static_cast<std::uint64_t>(w.d) + w.k * static_cast<std::uint64_t>(w.M);
  if (m != w.modulus || m <= 1) return false;
  return nt::pow2_mod(w.n, m) == static_cast<std::uint64_t>(w.b) % m;
}

}  // namespace gamma02
