#include "gamma02/decompose.hpp"

#include "gamma02/errors.hpp"
#include "gamma02/number_theory.hpp"
#include "gamma02/process.hpp"

#include <algorithm>
#include <limits>

namespace gamma02 {

GeneratorWord decompose_G02(const Mat2& psi, KnowledgeBase& kb, bool certify_on_demand) {
  const LevelContext& ctx = kb.ctx();
  if (!in_G02(psi, ctx)) throw PreconditionError("matrix " + psi.key() + " is not in G02");
  const unsigned long n = G02_level(psi, ctx);
  if (n == 0) {
    // (1, b; beta N, d) = W^beta T^b
    const Integer beta = psi.int_c() / static_cast<long>(ctx.N());
    return collapse({Token::W(beta), Token::T(psi.int_b())});
  }
  const Reduction r = reduce_to_L(psi, ctx);
  if (!kb.contains(r.reduced)) {
    if (!certify_on_demand) {
      throw MissingCertificate("L02 element " + r.reduced.key() + " is not certified");
    }
    certify_descriptor(kb, descriptor_of(r.reduced, ctx));
  }
  return collapse(r.word());
}

bool in_G02_or_inverse(const Mat2& m, const LevelContext& ctx) {
  return in_G02(m, ctx) || in_G02(m.inverse(), ctx);
}

namespace {

// g = W^k1 * X * Y * W^k2 with X, Y in G02 or G02^-1.
struct Factorization {
  Integer k1;
  Mat2 X;
  Mat2 Y;
  Integer k2;
  unsigned long cost = std::numeric_limits<unsigned long>::max();
  std::string route;
};

unsigned long level_pm(const Mat2& m, const LevelContext& ctx) {
  return in_G02(m, ctx) ? G02_level(m, ctx) : G02_level(m.inverse(), ctx);
}

Factorization inverted(const Factorization& f, const std::string& route) {
  // g^-1 = W^k1 X Y W^k2  =>  g = W^-k2 Y^-1 X^-1 W^-k1
  return {-f.k2, f.Y.inverse(), f.X.inverse(), -f.k1, f.cost, route};
}

// Top-right entry 1: g W^k' lands in G02 for 2^j = a (mod N).
Factorization unit_top_right(const Mat2& g, const LevelContext& ctx) {
  const Integer a = g.int_a();
  const auto j = ctx.log2_residue(a);
  if (!j) throw InternalConsistencyError("top-left of " + g.key() + " is not a power of 2 mod N");
  const Integer target = nt::pow2(static_cast<unsigned long>(*j));
  const Integer kp = (target - a) / static_cast<long>(ctx.N());
  const Mat2 delta2 = g * W_pow(kp, ctx);
  if (delta2.a() != Rational(target)) {
    throw InternalConsistencyError("W shift did not reach a power of 2 for " + g.key());
  }
  return {0, Mat2(), delta2, -kp, static_cast<unsigned long>(*j), "unit"};
}

// delta * W^k * g has top-right 1 for delta = (2^n, alpha; beta N, e) with
// 2^n b + alpha (d + kNb) = 1; then the unit case finishes.
std::optional<Factorization> shift_route(const Mat2& g, const LevelContext& ctx,
                                         const DecomposeBounds& bounds) {
  const Integer b = g.int_b();
  const Integer d = g.int_d();
  const Integer N = static_cast<long>(ctx.N());
  std::optional<Factorization> best;
  unsigned long best_n = std::numeric_limits<unsigned long>::max();
  Integer best_alpha;
  Integer best_k;

  for (std::int64_t step = 0; step <= 2 * bounds.k_max; ++step) {
    // k = 0, 1, -1, 2, -2, ...
    const Integer k = (step % 2 == 1) ? Integer((step + 1) / 2) : Integer(-(step / 2));
    const Integer m = d + k * N * b;
    if (m == 0) continue;
    const Integer am = abs(m);
    if ((1 - b) % m == 0) {
      best_n = 0;
      best_alpha = (1 - b) / m;
      best_k = k;
      break;
    }
    if (best_n <= 1 || m % 2 == 0) continue;
    std::optional<std::uint64_t> n;
    if (am == 1) {
      n = 1;
    } else {
      const unsigned long cap = std::min<unsigned long>(bounds.n_cap, best_n - 1);
      n = nt::smallest_positive_pow2_exponent(nt::inverse_mod(b, am), am, cap);
    }
    if (!n || *n >= best_n) continue;
    best_n = *n;
    best_alpha = (1 - nt::pow2(*n) * b) / m;
    best_k = k;
  }
  if (best_n == std::numeric_limits<unsigned long>::max()) return std::nullopt;

  Mat2 delta;
  if (best_n == 0) {
    delta = T_pow(best_alpha);
  } else {
    const Integer two_n = nt::pow2(best_n);
    const Integer beta = nt::centered_residue(-nt::inverse_mod(best_alpha * N, two_n), two_n);
    const Integer e = (1 + best_alpha * beta * N) / two_n;
    delta = Mat2(Rational(two_n), Rational(best_alpha), Rational(Integer(beta * N)), Rational(e));
  }
  const Mat2 g1 = delta * W_pow(best_k, ctx) * g;
  if (g1.b() != 1) throw InternalConsistencyError("shift route did not reach top-right 1");
  Factorization unit = unit_top_right(g1, ctx);
  // g = W^-k delta^-1 g1 = W^-k delta^-1 delta2 W^-k'
  Factorization f{-best_k, delta.inverse(), unit.Y, unit.k2,
                  std::max(best_n, unit.cost), "shift"};
  return f;
}

// g = delta1 * delta2 with delta1 top-left 2^p and delta2^-1 = (2^q, -u; -vN, f)
// where a 2^q - 2^p = v N b.
std::optional<Factorization> product_route(const Mat2& g, const LevelContext& ctx,
                                           const DecomposeBounds& bounds) {
  const Integer a = g.int_a();
  const Integer b = g.int_b();
  if (b == 0) return std::nullopt;
  const Integer N = static_cast<long>(ctx.N());
  const Integer M = abs(N * b);
  if (M >= (Integer(1) << 62)) return std::nullopt;
  const std::uint64_t um = M.get_ui();

  std::optional<Factorization> best;
  for (unsigned long q = 0; q <= bounds.n_cap; ++q) {
    if (best && q >= best->cost) break;
    const Integer t = nt::mod_floor(a * nt::pow2(q), M);
    const unsigned long cap = best ? std::min(bounds.n_cap, best->cost - 1) : bounds.n_cap;
    const auto p = nt::smallest_pow2_exponent(t.get_ui(), um, cap);
    if (!p) continue;
    const Integer num = a * nt::pow2(q) - nt::pow2(*p);
    const Integer v = num / (N * b);
    if (q >= 1 && v % 2 == 0) continue;
    Mat2 delta2;
    if (q == 0) {
      delta2 = W_pow(v, ctx);
    } else {
      const Integer two_q = nt::pow2(q);
      const Integer u = nt::centered_residue(-nt::inverse_mod(v * N, two_q), two_q);
      const Integer f = (1 + u * v * N) / two_q;
      delta2 = Mat2(Rational(f), Rational(u), Rational(Integer(v * N)), Rational(two_q));
    }
    const Mat2 delta1 = g * delta2.inverse();
    if (delta1.a() != Rational(nt::pow2(*p))) {
      throw InternalConsistencyError("product route did not reach top-left 2^p");
    }
    best = Factorization{0, delta1, delta2, 0, std::max<unsigned long>(*p, q), "product"};
  }
  return best;
}

GeneratorWord word_pm(const Mat2& m, KnowledgeBase& kb, bool certify) {
  if (in_G02(m, kb.ctx())) return decompose_G02(m, kb, certify);
  return inverse(decompose_G02(m.inverse(), kb, certify));
}

}  // namespace

Gamma02Decomposition decompose_Gamma02(const Mat2& g, KnowledgeBase& kb,
                                       const DecomposeBounds& bounds) {
  const LevelContext& ctx = kb.ctx();
  if (!in_gamma02(g, ctx)) throw PreconditionError("matrix " + g.key() + " is not in Gamma02(N)");

  std::optional<Factorization> best;
  auto consider = [&](std::optional<Factorization> f) {
    if (f && (!best || f->cost < best->cost)) best = std::move(f);
  };

  const Integer b = g.int_b();
  if (b == 0 && g.a() == 1) {
    consider(Factorization{g.int_c() / static_cast<long>(ctx.N()), Mat2(), Mat2(), 0, 0,
                           "W-power"});
  }
  if (in_G02(g, ctx)) consider(Factorization{0, g, Mat2(), 0, G02_level(g, ctx), "G02"});
  if (b == 1) consider(unit_top_right(g, ctx));

  const Mat2 g_inv = g.inverse();
  if (!best || best->cost > 0) {
    consider(shift_route(g, ctx, bounds));
    if (auto f = shift_route(g_inv, ctx, bounds)) consider(inverted(*f, "shift-inverse"));
    consider(product_route(g, ctx, bounds));
    if (auto f = product_route(g_inv, ctx, bounds)) consider(inverted(*f, "product-inverse"));
  }
  if (!best || best->cost > bounds.n_cap) {
    throw SearchExhausted("no factorisation of " + g.key() + " with |k| <= " +
                          std::to_string(bounds.k_max) + " and exponents <= " +
                          std::to_string(bounds.n_cap));
  }

  const Factorization& f = *best;
  Gamma02Decomposition out;
  out.route = f.route;
  out.level = std::max(level_pm(f.X, ctx), level_pm(f.Y, ctx));
  out.normal_form.k = f.k1;
  out.normal_form.l = f.k2;
  out.normal_form.delta1 = word_pm(f.X, kb, bounds.certify_on_demand);
  out.normal_form.delta2 = word_pm(f.Y, kb, bounds.certify_on_demand);

  GeneratorWord w{Token::W(f.k1)};
  w = concat(std::move(w), out.normal_form.delta1);
  w = concat(std::move(w), out.normal_form.delta2);
  w.push_back(Token::W(f.k2));
  out.word = collapse(w);
  if (replay(out.word, kb) != g) {
    throw VerificationFailure("decomposition of " + g.key() + " does not replay", g.key());
  }
  return out;
}

std::optional<NormalForm> match_normal_form(const GeneratorWord& word, const KnowledgeBase& kb) {
  const LevelContext& ctx = kb.ctx();
  const GeneratorWord w = collapse(word);
  std::size_t lo = 0;
  std::size_t hi = w.size();
  NormalForm nf;
  if (lo < hi && w[lo].kind == Token::Kind::W) nf.k = w[lo++].exponent;
  if (lo < hi && w[hi - 1].kind == Token::Kind::W) nf.l = w[--hi].exponent;
  for (std::size_t split = lo; split <= hi; ++split) {
    const GeneratorWord u(w.begin() + static_cast<std::ptrdiff_t>(lo),
                          w.begin() + static_cast<std::ptrdiff_t>(split));
    const GeneratorWord v(w.begin() + static_cast<std::ptrdiff_t>(split),
                          w.begin() + static_cast<std::ptrdiff_t>(hi));
    if (in_G02_or_inverse(replay(u, kb), ctx) && in_G02_or_inverse(replay(v, kb), ctx)) {
      nf.delta1 = u;
      nf.delta2 = v;
      return nf;
    }
  }
  return std::nullopt;
}

}  // namespace gamma02
