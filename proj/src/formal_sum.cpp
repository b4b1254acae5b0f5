#include "gamma02/formal_sum.hpp"

#include <algorithm>

namespace gamma02 {

FormalSum FormalSum::single(const Mat2& m, const Integer& coeff) {
  FormalSum s;
  s.add_term(m, coeff);
  return s;
}

void FormalSum::add_term(const Mat2& m, const Integer& coeff) {
  if (coeff == 0) return;
  auto key = m.key();
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), Term{coeff, m});
    return;
  }
  it->second.coeff += coeff;
  if (it->second.coeff == 0) terms_.erase(it);
}

Integer FormalSum::coeff_of(const Mat2& m) const {
  auto it = terms_.find(m.key());
  return it == terms_.end() ? Integer(0) : it->second.coeff;
}

std::vector<FormalSum::Term> FormalSum::terms() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [key, term] : terms_) out.push_back(term);
  return out;
}

bool operator==(const FormalSum& x, const FormalSum& y) {
  if (x.terms_.size() != y.terms_.size()) return false;
  auto it = y.terms_.begin();
  for (const auto& [key, term] : x.terms_) {
    if (key != it->first || term.coeff != it->second.coeff) return false;
    ++it;
  }
  return true;
}

FormalSum hecke_T2() {
  FormalSum s;
  s.add_term(scale_top(), 1);
  s.add_term(scale_bottom(), 1);
  s.add_term(scale_bottom_shift(), 1);
  return s;
}

FormalSum conjugate_sum(const FormalSum& s, const Mat2& g) {
  const Mat2 g_inv = g.inverse();
  FormalSum out;
  for (const auto& t : s.terms()) out.add_term(g_inv * t.matrix * g, t.coeff);
  return out;
}

FormalSum mul_sum(const FormalSum& s, const Mat2& g, Side side) {
  FormalSum out;
  for (const auto& t : s.terms()) {
    out.add_term(side == Side::Left ? g * t.matrix : t.matrix * g, t.coeff);
  }
  return out;
}

FormalSum add(const FormalSum& s, const FormalSum& t) {
  FormalSum out = s;
  for (const auto& term : t.terms()) out.add_term(term.matrix, term.coeff);
  return out;
}

FormalSum sub(const FormalSum& s, const FormalSum& t) {
  FormalSum out = s;
  for (const auto& term : t.terms()) out.add_term(term.matrix, -term.coeff);
  return out;
}

std::pair<FormalSum, FormalSum> cancel_common(const FormalSum& lhs, const FormalSum& rhs) {
  FormalSum l = lhs;
  FormalSum r = rhs;
  for (const auto& term : lhs.terms()) {
    const Integer other = rhs.coeff_of(term.matrix);
    if (term.coeff <= 0 || other <= 0) continue;
    const Integer common = std::min(term.coeff, other);
    l.add_term(term.matrix, -common);
    r.add_term(term.matrix, -common);
  }
  return {l, r};
}

FormalSum expand_second_order(const Mat2& g, const Mat2& d) {
  FormalSum out;
  out.add_term(Mat2::identity(), 1);
  out.add_term(g, -1);
  out.add_term(d, -1);
  out.add_term(g * d, 1);
  return out;
}

}  // namespace gamma02
