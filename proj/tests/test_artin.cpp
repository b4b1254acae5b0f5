#include "gamma02/artin.hpp"
#include "gamma02/errors.hpp"

#include <doctest.h>

#include <gmpxx.h>

#include <numeric>
#include <optional>

using namespace gamma02;

namespace {

// Smallest (k, n) by direct big-integer powers: n runs over [0, modulus).
std::optional<std::pair<std::uint64_t, std::uint64_t>> brute(long d, long b, long M, long k_max) {
  for (long k = 0; k <= k_max; ++k) {
    const long m = d + k * M;
    if (m <= 1) continue;
    mpz_class p = 1;
    for (long n = 0; n < m; ++n) {
      if ((p - b) % m == 0) return std::pair<std::uint64_t, std::uint64_t>(k, n);
      p *= 2;
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("artin small witnesses") {
  const ArtinWitness w = artin_search(1, 3, 5, 100, 1000);
  CHECK(w.k == 2);
  CHECK(w.n == 8);
  CHECK(w.modulus == 11);
  const ArtinWitness two = artin_search(1, 2, 5, 100, 1000);
  CHECK(two.k == 1);
  CHECK(two.n == 1);
  const ArtinWitness one = artin_search(3, 1, 5, 100, 1000);
  CHECK(one.k == 0);
  CHECK(one.n == 0);
  CHECK_THROWS_AS(artin_search(2, 3, 4, 10, 100), PreconditionError);
  CHECK_THROWS_AS(artin_search(0, 3, 4, 10, 100), PreconditionError);
}

TEST_CASE("quadratic obstruction exhausts the search") {
  // d + 24k is 7 mod 24: 2 is a square there and 3 is not.
  CHECK_THROWS_AS(artin_search(7, 3, 24, 500, 100000), SearchExhausted);
}

TEST_CASE("artin search against brute force") {
  for (long d = 1; d <= 9; ++d) {
    for (long b = 1; b <= 9; ++b) {
      for (long M = 1; M <= 9; ++M) {
        if (std::gcd(d, b * M) != 1) continue;
        const auto want = brute(d, b, M, 40);
        if (!want) {
          CHECK_THROWS_AS(artin_search(d, b, M, 40, 1u << 20), SearchExhausted);
          continue;
        }
        const ArtinWitness w = artin_search(d, b, M, 40, 1u << 20);
        CHECK_MESSAGE(w.k == want->first, d << "," << b << "," << M);
        CHECK_MESSAGE(w.n == want->second, d << "," << b << "," << M);
        CHECK(verify_witness(w));
      }
    }
  }
}

TEST_CASE("verify_witness rejects forgeries") {
  ArtinWitness w = artin_search(1, 3, 5, 100, 1000);
  CHECK(verify_witness(w));
  w.n += 1;
  CHECK_FALSE(verify_witness(w));
  w = artin_search(1, 3, 5, 100, 1000);
  w.modulus += 1;
  CHECK_FALSE(verify_witness(w));
}
