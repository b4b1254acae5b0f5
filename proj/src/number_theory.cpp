#include "gamma02/number_theory.hpp"

#include "gamma02/errors.hpp"

namespace gamma02::nt {

std::uint64_t pow2_mod(std::uint64_t n, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  std::uint64_t base = 2 % m;
  while (n > 0) {
    if (n & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    n >>= 1U;
  }
  return result;
}

std::optional<std::uint64_t> smallest_pow2_exponent(std::uint64_t target, std::uint64_t m,
                                                    std::uint64_t n_cap) {
  if (m == 0) throw PreconditionError("modulus must be positive");
  target %= m;
  // For m = 2^s * o with o odd the sequence 2^n mod m is periodic from n = s,
  // so it has repeated once the value at n = s shows up again.
  const auto s = static_cast<std::uint64_t>(__builtin_ctzll(m));
  std::uint64_t x = 1 % m;
  std::uint64_t anchor = 0;
  for (std::uint64_t n = 0; n <= n_cap; ++n) {
    if (x == target) return n;
    if (n == s) {
      anchor = x;
    } else if (n > s && x == anchor) {
      return std::nullopt;
    }
    x = (x * 2) % m;  // m < 2^63 by caller contract
  }
  return std::nullopt;
}

std::optional<std::uint64_t> smallest_positive_pow2_exponent(const Integer& target,
                                                             const Integer& m,
                                                             std::uint64_t n_cap) {
  if (m <= 0) throw PreconditionError("modulus must be positive");
  const Integer t = mod_floor(target, m);
  if (m.fits_ulong_p() && m < (Integer(1) << 62)) {
    const std::uint64_t mm = m.get_ui();
    const std::uint64_t tt = t.get_ui();
    std::uint64_t x = 1 % mm;
    for (std::uint64_t n = 1; n <= n_cap; ++n) {
      x = (x * 2) % mm;
      if (x == tt) return n;
    }
    return std::nullopt;
  }
  Integer x = 1;
  for (std::uint64_t n = 1; n <= n_cap; ++n) {
    x *= 2;
    if (x >= m) x -= m;
    if (x == t) return n;
  }
  return std::nullopt;
}

Integer mod_floor(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer inverse_mod(const Integer& x, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw PreconditionError(x.get_str() + " is not invertible modulo " + m.get_str());
  }
  return r;
}

Integer centered_residue(const Integer& x, const Integer& m) {
  Integer r = mod_floor(x, m);
  // [-m/2, m/2): for even m the value m/2 maps to -m/2.
  if (2 * r >= m) r -= m;
  return r;
}

Integer pow2(unsigned long n) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, n);
  return r;
}

std::optional<unsigned long> exact_log2(const Integer& x) {
  if (x <= 0) return std::nullopt;
  const unsigned long n = mpz_scan1(x.get_mpz_t(), 0);
  if (mpz_sizeinbase(x.get_mpz_t(), 2) != n + 1) return std::nullopt;
  return n;
}

}  // namespace gamma02::nt
