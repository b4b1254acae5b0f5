#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gamma02 {

using Integer = mpz_class;
using Rational = mpq_class;

// Exact 2x2 matrix over Q, stored row-major as (a b; c d) with every entry in
// lowest terms. The determinant is never zero. Equality is entrywise; there
// is no identification of m with -m.
class Mat2 {
 public:
  // The identity.
  Mat2() : Mat2(Unchecked{}, 1, 0, 0, 1) {}
  // Throws SingularMatrixError when ad - bc = 0.
  Mat2(Rational a, Rational b, Rational c, Rational d);

  static Mat2 identity();

  const Rational& a() const noexcept { return e_[0]; }
  const Rational& b() const noexcept { return e_[1]; }
  const Rational& c() const noexcept { return e_[2]; }
  const Rational& d() const noexcept { return e_[3]; }
  const std::array<Rational, 4>& entries() const noexcept { return e_; }

  Rational det() const;
  Mat2 inverse() const;
  Mat2 scaled(const Rational& s) const;

  bool is_integral() const;
  bool is_identity() const;

  // Integer views of the entries; throw PreconditionError on a fraction.
  Integer int_a() const;
  Integer int_b() const;
  Integer int_c() const;
  Integer int_d() const;

  // Canonical deduplication key: "a,b,c,d" with entries written as decimal
  // integers or p/q with q > 0.
  std::string key() const;
  std::array<std::string, 4> to_strings() const;

  // Parses the key format (also accepts surrounding whitespace).
  static Mat2 parse(std::string_view text);

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2& x, const Mat2& y);
  friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }

 private:
  struct Unchecked {};
  Mat2(Unchecked, Rational a, Rational b, Rational c, Rational d);

  std::array<Rational, 4> e_;
};

Mat2 mat(const Rational& a, const Rational& b, const Rational& c, const Rational& d);
Mat2 mat(long a, long b, long c, long d);

// Level N (odd, >= 3) with the sign of the Fricke relation and the cyclic
// subgroup <2> of (Z/NZ)*.
class LevelContext {
 public:
  // Throws InputError("level must be odd ...") for even N or N < 3, and for
  // epsilon outside {+1, -1}.
  explicit LevelContext(std::int64_t level, int epsilon = 1);

  std::int64_t N() const noexcept { return level_; }
  int epsilon() const noexcept { return epsilon_; }
  int order_of_two() const noexcept { return order_; }

  // Residues {2^j mod N}, ascending.
  std::vector<std::int64_t> pow2_residues() const;
  bool in_pow2_subgroup(const Integer& residue) const;
  // Smallest j >= 0 with 2^j = residue (mod N).
  std::optional<int> log2_residue(const Integer& residue) const;

 private:
  std::int64_t level_;
  int epsilon_;
  int order_ = 0;
  std::vector<int> log_;  // log_[r] = smallest j with 2^j = r, or -1
};

enum class Named { T, W, H, M2 };

Mat2 named(Named which, const LevelContext& ctx);

Mat2 T_pow(const Integer& e);                            // (1 e; 0 1)
Mat2 W_pow(const Integer& e, const LevelContext& ctx);   // (1 0; eN 1)

// The three matrices of the degree-2 Hecke operator.
Mat2 scale_top();           // (2 0; 0 1)
Mat2 scale_bottom();        // (1 0; 0 2)
Mat2 scale_bottom_shift();  // (1 1; 0 2)

}  // namespace gamma02
