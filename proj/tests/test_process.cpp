#include "gamma02/errors.hpp"
#include "gamma02/process.hpp"

#include <doctest.h>

using namespace gamma02;

TEST_CASE("base case") {
  for (std::int64_t N : {3, 5, 7, 99}) {
    const LevelContext ctx(N);
    KnowledgeBase kb = seed_kb(ctx);
    const BaseCase b = derive_base_case(kb);
    CHECK(b.m2 == mat(2, -1, -N, (N + 1) / 2));
    const Mat2 W = named(Named::W, ctx), T = named(Named::T, ctx);
    CHECK(b.variants[0] == W * b.m2);
    CHECK(b.variants[1] == b.m2 * T);
    CHECK(b.variants[2] == W * b.m2 * T);
    CHECK(kb.size() == 6);
    CHECK(audit(kb).failed == 0);
  }
  CHECK(base_case_chain(LevelContext(5)).variants[2] == mat(2, 1, 5, 3));
  const BaseCase plus = base_case_chain(LevelContext(3, 1));
  const BaseCase minus = base_case_chain(LevelContext(3, -1));
  CHECK(plus.m2 == minus.m2);
  CHECK(plus.variants == minus.variants);
  CHECK(plus.lhs_after_cancel == minus.lhs_after_cancel);
}

TEST_CASE("pairing candidates at N = 3") {
  const LevelContext ctx(3);
  const Mat2 P = named(Named::M2, ctx);
  const auto c = pairing_candidates(scale_top() * P, scale_bottom_shift() * P, ctx);
  CHECK(c.p1.first == mat(4, -1, -3, 1));
  CHECK(reduce_to_L(c.p1.second, ctx).reduced == mat(4, 1, 3, 1));
  CHECK_FALSE((c.p2.first.is_integral() && c.p2.second.is_integral()));
  bool half = false;
  for (const Mat2& m : {c.p2.first, c.p2.second}) {
    if (m.d() == Rational(5, 2)) half = true;
  }
  CHECK(half);
  CHECK(c.p2.first * T_pow(1) == mat(4, 1, -3, Rational(-1, 2)));
  for (const Mat2& m : {c.p1.first, c.p1.second, c.p2.first, c.p2.second}) CHECK(m.det() == 1);
  CHECK(select_integral_pairing(c, P) == Pairing::P1);
}

TEST_CASE("pairing selection follows the parent's bottom-right parity") {
  for (std::int64_t N : {5, 7, 9, 11}) {
    const LevelContext ctx(N);
    const Mat2 P = named(Named::M2, ctx);
    const auto c = pairing_candidates(scale_top() * P, scale_bottom_shift() * P, ctx);
    CHECK(select_integral_pairing(c, P) == (N % 4 == 3 ? Pairing::P1 : Pairing::P2));
  }
}

TEST_CASE("reduce_to_L") {
  const LevelContext ctx(3);
  const Reduction r = reduce_to_L(mat(4, 5, 3, 4), ctx);
  CHECK(r.l == -1);
  CHECK(r.k == 0);
  CHECK(r.reduced == mat(4, 1, 3, 1));
  const Reduction same = reduce_to_L(mat(4, 1, 3, 1), ctx);
  CHECK(same.word() == GeneratorWord{Token::cert(mat(4, 1, 3, 1).key())});
  CHECK(same.pre().empty());
  CHECK(same.post().empty());
  // Top-right -9 moves to -9 + 4*2 = -1.
  const Reduction r2 = reduce_to_L(mat(4, -9, -3, 7), ctx);
  CHECK(r2.l == 2);
  CHECK(r2.reduced == mat(4, -1, -3, 1));
  CHECK_THROWS_AS(reduce_to_L(mat(3, 1, 14, 5), LevelContext(7)), PreconditionError);
}

TEST_CASE("property: reduction recovers every shifted L element") {
  for (std::int64_t N : {3, 5, 11}) {
    const LevelContext ctx(N);
    for (const auto& d : enumerate_L_descriptors(ctx, 6)) {
      if (d.n < 2) continue;
      const Mat2 L = d.matrix(ctx);
      for (int i = -3; i <= 3; ++i) {
        for (int j = -3; j <= 3; ++j) {
          const Mat2 g = W_pow(i, ctx) * L * T_pow(j);
          const Reduction r = reduce_to_L(g, ctx);
          CHECK(r.reduced == L);
          CHECK(W_pow(-r.k, ctx) * r.reduced * T_pow(-r.l) == g);
        }
      }
    }
  }
}

TEST_CASE("process step") {
  {
    const LevelContext ctx(3);
    KnowledgeBase kb = seed_kb(ctx);
    derive_base_case(kb);
    const ProcessStepOutcome o = process_step(kb, kb.get(named(Named::M2, ctx).key()));
    CHECK(o.chosen == Pairing::P1);
    CHECK(o.gamma[0].matrix == mat(4, -1, -3, 1));
    CHECK(o.gamma[1].matrix == mat(4, 1, 3, 1));
    CHECK(o.lhs_after_cancel.size() == 2);
    CHECK(o.rhs_after_cancel.size() == 2);
    for (const auto& g : o.gamma) {
      const auto d = descriptor_of(g.matrix, ctx);
      CHECK(d.n == 2);
      CHECK(abs(d.alpha) <= 2);
      CHECK(abs(d.beta) <= 2);
      CHECK(g.depth == 2);
      CHECK_NOTHROW(verify_certificate(kb, kb.get(g.key())));
    }
  }
  {
    const LevelContext ctx(5);
    KnowledgeBase kb = seed_kb(ctx);
    derive_base_case(kb);
    const ProcessStepOutcome o = process_step(kb, kb.get(named(Named::M2, ctx).key()));
    CHECK(o.chosen == Pairing::P2);
    for (const auto& g : o.gamma) CHECK(g.matrix.a() == 4);
  }
  const LevelContext ctx(3);
  KnowledgeBase kb = seed_kb(ctx);
  Certificate t = kb.certificates().front();
  CHECK_THROWS_AS(compute_process_step(kb, t), PreconditionError);
}

TEST_CASE("enumeration covers every admissible descriptor") {
  for (std::int64_t N : {3, 5, 7, 9, 15, 21}) {
    const LevelContext ctx(N);
    KnowledgeBase kb = seed_kb(ctx);
    EnumerationStats stats;
    const auto got = enumerate_certified_L(kb, 6, Execution::Serial, &stats);
    const auto want = enumerate_L_descriptors(ctx, 6);
    CHECK(got.size() == want.size());
    for (const auto& d : want) {
      REQUIRE(got.count(d) == 1);
      const Certificate& c = kb.get(got.at(d));
      CHECK(c.matrix == d.matrix(ctx));
      CHECK(c.depth <= d.n);
    }
    CHECK(audit(kb).failed == 0);
    CHECK(stats.half_level_adjustments == kb.half_level_adjustments().size());
  }
  const LevelContext c3(3);
  KnowledgeBase kb = seed_kb(c3);
  CHECK(enumerate_certified_L(kb, 1, Execution::Serial).size() == 4);
  CHECK(enumerate_certified_L(kb, 2, Execution::Serial).size() ==
        enumerate_L_descriptors(c3, 2).size());
}

TEST_CASE("lazy certification agrees with breadth-first enumeration") {
  for (std::int64_t N : {3, 7, 13}) {
    const LevelContext ctx(N);
    KnowledgeBase full = seed_kb(ctx);
    const auto bfs = enumerate_certified_L(full, 7, Execution::Serial);
    KnowledgeBase lazy = seed_kb(ctx);
    for (const auto& d : enumerate_L_descriptors(ctx, 7)) {
      if (d.n != 7) continue;
      const Certificate& c = certify_descriptor(lazy, d);
      CHECK(c.matrix == d.matrix(ctx));
      CHECK_NOTHROW(verify_certificate(lazy, c));
    }
    CHECK(lazy.size() <= full.size());
    CHECK(audit(lazy).failed == 0);
  }
}
