#pragma once

#include "gamma02/mat2.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gamma02 {

// Finite Z-linear combination of matrices. Terms are keyed by Mat2::key(),
// so equal matrices are merged and iteration order is deterministic. No
// stored coefficient is zero.
class FormalSum {
 public:
  struct Term {
    Integer coeff;
    Mat2 matrix;
  };

  FormalSum() = default;
  static FormalSum single(const Mat2& m, const Integer& coeff = 1);

  void add_term(const Mat2& m, const Integer& coeff);

  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Integer coeff_of(const Mat2& m) const;
  bool contains(const Mat2& m) const { return terms_.count(m.key()) != 0; }

  // Terms in key order.
  std::vector<Term> terms() const;

  friend bool operator==(const FormalSum& x, const FormalSum& y);
  friend bool operator!=(const FormalSum& x, const FormalSum& y) { return !(x == y); }

 private:
  std::map<std::string, Term> terms_;
};

enum class Side { Left, Right };

// (2,0;0,1) + (1,0;0,2) + (1,1;0,2).
FormalSum hecke_T2();

// Termwise g^-1 * m * g.
FormalSum conjugate_sum(const FormalSum& s, const Mat2& g);

// Termwise g*m (Left) or m*g (Right).
FormalSum mul_sum(const FormalSum& s, const Mat2& g, Side side);

FormalSum add(const FormalSum& s, const FormalSum& t);
FormalSum sub(const FormalSum& s, const FormalSum& t);

// Removes min(coefficient) copies of every matrix present on both sides with
// positive coefficient.
std::pair<FormalSum, FormalSum> cancel_common(const FormalSum& lhs, const FormalSum& rhs);

// 1 - g - d + g*d, merged.
FormalSum expand_second_order(const Mat2& g, const Mat2& d);

}  // namespace gamma02
