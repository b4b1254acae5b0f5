#include "gamma02/subgroups.hpp"

#include "gamma02/errors.hpp"
#include "gamma02/number_theory.hpp"

#include <numeric>

namespace gamma02 {

Mat2 LElementDescriptor::matrix(const LevelContext& ctx) const {
  const Integer two_n = nt::pow2(n);
  const Integer c = beta * static_cast<long>(ctx.N());
  const Integer num = alpha * c + 1;
  if (num % two_n != 0) {
    throw PreconditionError("descriptor " + to_string() + " violates alpha*beta*N = -1 mod 2^n");
  }
  return Mat2(Rational(two_n), Rational(alpha), Rational(c), Rational(Integer(num / two_n)));
}

std::string LElementDescriptor::to_string() const {
  return "(" + std::to_string(n) + "," + alpha.get_str() + "," + beta.get_str() + ")";
}

bool operator<(const LElementDescriptor& x, const LElementDescriptor& y) {
  if (x.n != y.n) return x.n < y.n;
  if (x.alpha != y.alpha) return x.alpha < y.alpha;
  return x.beta < y.beta;
}

bool in_gamma0(const Mat2& m, const LevelContext& ctx) {
  if (!m.is_integral() || m.det() != 1) return false;
  return m.c().get_num() % static_cast<long>(ctx.N()) == 0;
}

bool in_gamma02(const Mat2& m, const LevelContext& ctx) {
  return in_gamma0(m, ctx) && ctx.in_pow2_subgroup(m.a().get_num());
}

bool in_G02(const Mat2& m, const LevelContext& ctx) {
  return in_gamma0(m, ctx) && nt::exact_log2(m.a().get_num()).has_value();
}

unsigned long G02_level(const Mat2& m, const LevelContext& ctx) {
  if (!in_gamma0(m, ctx)) throw PreconditionError("matrix " + m.key() + " is not in Gamma0(N)");
  const auto n = nt::exact_log2(m.a().get_num());
  if (!n) throw PreconditionError("top-left entry of " + m.key() + " is not a power of 2");
  return *n;
}

bool in_L02(const Mat2& m, const LevelContext& ctx) {
  if (!in_gamma0(m, ctx)) return false;
  const auto n = nt::exact_log2(m.a().get_num());
  if (!n || *n == 0) return false;
  const Integer bound = nt::pow2(*n - 1);
  const Integer alpha = m.b().get_num();
  const Integer beta = m.c().get_num() / static_cast<long>(ctx.N());
  return abs(alpha) <= bound && abs(beta) <= bound;
}

LElementDescriptor descriptor_of(const Mat2& m, const LevelContext& ctx) {
  if (!in_L02(m, ctx)) {
    throw PreconditionError("matrix " + m.key() + " is not in L02(" + std::to_string(ctx.N()) +
                            ")");
  }
  LElementDescriptor out;
  out.n = *nt::exact_log2(m.a().get_num());
  out.alpha = m.b().get_num();
  out.beta = m.c().get_num() / static_cast<long>(ctx.N());
  return out;
}

std::vector<LElementDescriptor> enumerate_L_descriptors(const LevelContext& ctx,
                                                        unsigned long n_max) {
  if (n_max < 1) throw PreconditionError("n_max must be at least 1");
  std::vector<LElementDescriptor> out;
  const Integer N = static_cast<long>(ctx.N());
  for (unsigned long n = 1; n <= n_max; ++n) {
    const Integer mod = nt::pow2(n);
    const Integer h = nt::pow2(n - 1);
    for (Integer alpha = -h + ((h % 2 == 0) ? 1 : 0); alpha <= h; alpha += 2) {
      // beta = -(alpha*N)^(-1) mod 2^n, then every lift inside [-h, h].
      const Integer base = nt::mod_floor(-nt::inverse_mod(alpha * N, mod), mod);
      for (Integer beta = base - mod * ((base + h) / mod); beta <= h; beta += mod) {
        if (beta < -h) continue;
        out.push_back({n, alpha, beta});
      }
    }
  }
  return out;
}

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

CharacterOracle::CharacterOracle(const LevelContext& ctx) : N_(ctx.N()) {
  std::int64_t rest = N_;
  for (std::int64_t p = 3; p * p <= rest || rest > 1; p += 2) {
    if (p * p > rest) p = rest;
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    Factor f;
    f.modulus = ipow(p, e);
    f.order = ipow(p, e - 1) * (p - 1);
    // (Z/p^e)* is cyclic for odd p; take the smallest generator.
    for (std::int64_t g = 2;; ++g) {
      if (g % p == 0) continue;
      std::vector<std::int64_t> log(static_cast<std::size_t>(f.modulus), -1);
      std::int64_t x = 1;
      std::int64_t k = 0;
      while (log[static_cast<std::size_t>(x)] < 0) {
        log[static_cast<std::size_t>(x)] = k++;
        x = x * g % f.modulus;
      }
      if (k == f.order) {
        f.log = std::move(log);
        break;
      }
    }
    exponent_lcm_ = std::lcm(exponent_lcm_, f.order);
    group_order_ *= static_cast<std::size_t>(f.order);
    factors_.push_back(std::move(f));
  }

  const auto two = logs_of(Integer(2));
  std::vector<std::int64_t> t(factors_.size(), 0);
  for (std::size_t count = 0; count < group_order_; ++count) {
    std::int64_t value = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      value += t[i] * two[i] * (exponent_lcm_ / factors_[i].order);
      value %= exponent_lcm_;
    }
    if (value == 0) trivial_on_two_.push_back(t);
    for (std::size_t i = 0; i < t.size(); ++i) {  // odometer increment
      if (++t[i] < factors_[i].order) break;
      t[i] = 0;
    }
  }
}

std::vector<std::int64_t> CharacterOracle::logs_of(const Integer& residue) const {
  std::vector<std::int64_t> out;
  for (const Factor& f : factors_) {
    const Integer r = nt::mod_floor(residue, Integer(static_cast<long>(f.modulus)));
    const std::int64_t l = f.log[r.get_ui()];
    if (l < 0) return {};
    out.push_back(l);
  }
  return out;
}

bool CharacterOracle::annihilated_by_characters_trivial_on_two(const Integer& residue) const {
  const auto logs = logs_of(residue);
  if (logs.size() != factors_.size()) return false;
  for (const auto& t : trivial_on_two_) {
    std::int64_t value = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      value += t[i] * logs[i] * (exponent_lcm_ / factors_[i].order);
      value %= exponent_lcm_;
    }
    if (value != 0) return false;
  }
  return true;
}

bool in_gamma02_by_characters(const Mat2& m, const LevelContext& ctx,
                              const CharacterOracle& oracle) {
  if (!in_gamma0(m, ctx)) {
    throw PreconditionError("matrix " + m.key() + " is not in Gamma0(" + std::to_string(ctx.N()) +
                            ")");
  }
  return oracle.annihilated_by_characters_trivial_on_two(m.a().get_num());
}

bool in_gamma02_by_characters(const Mat2& m, const LevelContext& ctx) {
  return in_gamma02_by_characters(m, ctx, CharacterOracle(ctx));
}

}  // namespace gamma02
