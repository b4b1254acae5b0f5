#include "gamma02/mat2.hpp"

#include "gamma02/errors.hpp"

#include <algorithm>
#include <sstream>

namespace gamma02 {

namespace {

Rational canonical(Rational q) {
  q.canonicalize();
  return q;
}

Integer to_integer(const Rational& q) {
  if (q.get_den() != 1) {
    throw PreconditionError("entry " + q.get_str() + " is not an integer");
  }
  return q.get_num();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
          s.end());
  if (s.empty()) throw InputError("empty matrix entry");
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw InputError("malformed matrix entry '" + s + "'");
  }
  return canonical(q);
}

}  // namespace

Mat2::Mat2(Rational a, Rational b, Rational c, Rational d)
    : e_{canonical(std::move(a)), canonical(std::move(b)), canonical(std::move(c)),
         canonical(std::move(d))} {
  if (det() == 0) {
    throw SingularMatrixError("singular matrix (" + key() + "): determinant is 0");
  }
}

Mat2::Mat2(Unchecked, Rational a, Rational b, Rational c, Rational d)
    : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

Mat2 Mat2::identity() { return Mat2(Unchecked{}, 1, 0, 0, 1); }

Rational Mat2::det() const { return Rational(e_[0] * e_[3] - e_[1] * e_[2]); }

Mat2 Mat2::inverse() const {
  const Rational delta = det();
  return Mat2(Unchecked{}, Rational(e_[3] / delta), Rational(-e_[1] / delta),
              Rational(-e_[2] / delta), Rational(e_[0] / delta));
}

Mat2 Mat2::scaled(const Rational& s) const {
  if (s == 0) throw SingularMatrixError("scaling by zero");
  return Mat2(Unchecked{}, Rational(e_[0] * s), Rational(e_[1] * s), Rational(e_[2] * s),
              Rational(e_[3] * s));
}

bool Mat2::is_integral() const {
  return std::all_of(e_.begin(), e_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

bool Mat2::is_identity() const { return e_[0] == 1 && e_[1] == 0 && e_[2] == 0 && e_[3] == 1; }

Integer Mat2::int_a() const { return to_integer(e_[0]); }
Integer Mat2::int_b() const { return to_integer(e_[1]); }
Integer Mat2::int_c() const { return to_integer(e_[2]); }
Integer Mat2::int_d() const { return to_integer(e_[3]); }

std::array<std::string, 4> Mat2::to_strings() const {
  return {e_[0].get_str(), e_[1].get_str(), e_[2].get_str(), e_[3].get_str()};
}

std::string Mat2::key() const {
  const auto s = to_strings();
  std::string out = s[0];
  for (int i = 1; i < 4; ++i) {
    out += ',';
    out += s[i];
  }
  return out;
}

Mat2 Mat2::parse(std::string_view text) {
  std::array<Rational, 4> parts;
  std::size_t start = 0;
  for (int i = 0; i < 4; ++i) {
    const std::size_t comma = text.find(',', start);
    const bool last = (i == 3);
    if (last != (comma == std::string_view::npos)) {
      throw InputError("expected four comma-separated entries, got '" + std::string(text) + "'");
    }
    parts[i] = parse_rational(text.substr(start, last ? std::string_view::npos : comma - start));
    start = comma + 1;
  }
  return Mat2(parts[0], parts[1], parts[2], parts[3]);
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return Mat2(Mat2::Unchecked{}, Rational(x.e_[0] * y.e_[0] + x.e_[1] * y.e_[2]),
              Rational(x.e_[0] * y.e_[1] + x.e_[1] * y.e_[3]),
              Rational(x.e_[2] * y.e_[0] + x.e_[3] * y.e_[2]),
              Rational(x.e_[2] * y.e_[1] + x.e_[3] * y.e_[3]));
}

bool operator==(const Mat2& x, const Mat2& y) { return x.e_ == y.e_; }

Mat2 mat(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return Mat2(a, b, c, d);
}

Mat2 mat(long a, long b, long c, long d) { return Mat2(a, b, c, d); }

LevelContext::LevelContext(std::int64_t level, int epsilon) : level_(level), epsilon_(epsilon) {
  if (level < 3 || level % 2 == 0) {
    throw InputError("level must be odd and at least 3 (got " + std::to_string(level) + ")");
  }
  if (epsilon != 1 && epsilon != -1) {
    throw InputError("epsilon must be +1 or -1");
  }
  log_.assign(static_cast<std::size_t>(level), -1);
  std::int64_t r = 1;
  int j = 0;
  while (log_[static_cast<std::size_t>(r)] < 0) {
    log_[static_cast<std::size_t>(r)] = j++;
    r = (2 * r) % level;
  }
  order_ = j;
}

std::vector<std::int64_t> LevelContext::pow2_residues() const {
  std::vector<std::int64_t> out;
  for (std::size_t r = 0; r < log_.size(); ++r) {
    if (log_[r] >= 0) out.push_back(static_cast<std::int64_t>(r));
  }
  return out;
}

std::optional<int> LevelContext::log2_residue(const Integer& residue) const {
  Integer r = residue % level_;
  if (r < 0) r += level_;
  const int j = log_[r.get_ui()];
  if (j < 0) return std::nullopt;
  return j;
}

bool LevelContext::in_pow2_subgroup(const Integer& residue) const {
  return log2_residue(residue).has_value();
}

Mat2 named(Named which, const LevelContext& ctx) {
  const long n = static_cast<long>(ctx.N());
  switch (which) {
    case Named::T:
      return mat(1, 1, 0, 1);
    case Named::W:
      return mat(1, 0, n, 1);
    case Named::H:
      return mat(0, -1, n, 0);
    case Named::M2:
      return mat(2, -1, -n, (n + 1) / 2);
  }
  throw InternalConsistencyError("unhandled named matrix");
}

Mat2 T_pow(const Integer& e) { return Mat2(1, Rational(e), 0, 1); }

Mat2 W_pow(const Integer& e, const LevelContext& ctx) {
  return Mat2(1, 0, Rational(Integer(e * static_cast<long>(ctx.N()))), 1);
}

Mat2 scale_top() { return mat(2, 0, 0, 1); }
Mat2 scale_bottom() { return mat(1, 0, 0, 2); }
Mat2 scale_bottom_shift() { return mat(1, 1, 0, 2); }

}  // namespace gamma02
