#pragma once

#include "gamma02/mat2.hpp"

#include <cstdint>
#include <optional>

namespace gamma02::nt {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

// 2^n mod m by square-and-multiply.
std::uint64_t pow2_mod(std::uint64_t n, std::uint64_t m);

// Smallest n in [0, n_cap] with 2^n = target (mod m), found by stepping the
// powers of two until the sequence repeats. m >= 1.
std::optional<std::uint64_t> smallest_pow2_exponent(std::uint64_t target, std::uint64_t m,
                                                    std::uint64_t n_cap);

// Same search restricted to n >= 1, over arbitrary-size moduli.
std::optional<std::uint64_t> smallest_positive_pow2_exponent(const Integer& target,
                                                             const Integer& m,
                                                             std::uint64_t n_cap);

// Non-negative residue of x modulo m > 0.
Integer mod_floor(const Integer& x, const Integer& m);

// Inverse of x modulo m; throws PreconditionError if gcd(x, m) != 1.
Integer inverse_mod(const Integer& x, const Integer& m);

// x - m * round(x / m), chosen in [-m/2, m/2).
Integer centered_residue(const Integer& x, const Integer& m);

// 2^n as an Integer.
Integer pow2(unsigned long n);

// n >= 0 with x = 2^n, if any.
std::optional<unsigned long> exact_log2(const Integer& x);

}  // namespace gamma02::nt
