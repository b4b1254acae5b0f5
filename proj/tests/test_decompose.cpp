#include "gamma02/decompose.hpp"
#include "gamma02/errors.hpp"
#include "gamma02/process.hpp"
#include "gamma02/random_words.hpp"

#include <doctest.h>

using namespace gamma02;

TEST_CASE("decompose_G02 basic cases") {
  {
    const LevelContext ctx(5);
    KnowledgeBase kb = seed_kb(ctx);
    derive_base_case(kb);
    const std::string m2 = named(Named::M2, ctx).key();
    CHECK(decompose_G02(mat(2, 1, 5, 3), kb) ==
          GeneratorWord{Token::W(), Token::cert(m2), Token::T()});
    CHECK(decompose_G02(named(Named::T, ctx), kb) == GeneratorWord{Token::T()});
    CHECK(decompose_G02(W_pow(4, ctx), kb) == GeneratorWord{Token::W(4)});
    CHECK_THROWS_AS(decompose_G02(mat(3, 1, 5, 2), kb), PreconditionError);
  }
  {
    const LevelContext ctx(3);
    KnowledgeBase kb = seed_kb(ctx);
    enumerate_certified_L(kb, 2, Execution::Serial);
    CHECK(decompose_G02(mat(4, 5, 3, 4), kb) ==
          GeneratorWord{Token::cert(mat(4, 1, 3, 1).key()), Token::T()});
    KnowledgeBase bare = seed_kb(ctx);
    CHECK_THROWS_AS(decompose_G02(mat(8, 1, 3, Rational(1, 2)), bare), InputError);
    CHECK_THROWS_AS(decompose_G02(mat(8, 1, 15, 2), bare, false), MissingCertificate);
    CHECK(replay(decompose_G02(mat(8, 1, 15, 2), bare), bare) == mat(8, 1, 15, 2));
  }
}

TEST_CASE("property: decompose_G02 is a W run, one certificate, a T run") {
  for (std::int64_t N : {3, 7, 9}) {
    const LevelContext ctx(N);
    KnowledgeBase kb = seed_kb(ctx);
    for (const auto& d : enumerate_L_descriptors(ctx, 5)) {
      const Mat2 L = d.matrix(ctx);
      for (int i = -2; i <= 2; ++i) {
        for (int j = -2; j <= 2; ++j) {
          const Mat2 g = W_pow(i, ctx) * L * T_pow(j);
          const GeneratorWord w = decompose_G02(g, kb);
          CHECK(replay(w, kb) == g);
          CHECK(w.size() <= 3);
          int certs = 0;
          for (const auto& t : w) certs += t.kind == Token::Kind::Cert;
          CHECK(certs == 1);
        }
      }
    }
  }
}

TEST_CASE("decompose_Gamma02 direct routes") {
  const LevelContext ctx(7);
  KnowledgeBase kb = seed_kb(ctx);
  const auto w = decompose_Gamma02(W_pow(-3, ctx), kb);
  CHECK(w.word == GeneratorWord{Token::W(-3)});
  const auto g = decompose_Gamma02(mat(2, 1, 7, 4), kb);
  CHECK(replay(g.word, kb) == mat(2, 1, 7, 4));
  CHECK(g.route == "G02");
  const auto u = decompose_Gamma02(mat(9, 1, 35, 4), kb);
  CHECK(replay(u.word, kb) == mat(9, 1, 35, 4));
  CHECK(u.route == "unit");
  CHECK(decompose_Gamma02(Mat2::identity(), kb).word.empty());
  CHECK_THROWS_AS(decompose_Gamma02(mat(3, 1, 14, 5), kb), PreconditionError);
}

TEST_CASE("decompose_Gamma02 general routes") {
  const LevelContext ctx(5);
  KnowledgeBase kb = seed_kb(ctx);
  for (const Mat2& g : {mat(3, 1, 5, 2), mat(3, 2, 10, 7), mat(-1, 0, 15, -1), mat(7, 3, 30, 13),
                        mat(-1, 0, 0, -1)}) {
    REQUIRE(in_gamma02(g, ctx));
    const auto d = decompose_Gamma02(g, kb);
    CHECK(replay(d.word, kb) == g);
    const auto nf = match_normal_form(d.word, kb);
    REQUIRE(nf.has_value());
    CHECK(in_G02_or_inverse(replay(nf->delta1, kb), ctx));
    CHECK(in_G02_or_inverse(replay(nf->delta2, kb), ctx));
    CHECK(W_pow(nf->k, ctx) * replay(nf->delta1, kb) * replay(nf->delta2, kb) * W_pow(nf->l, ctx) ==
          g);
  }
}

TEST_CASE("exhaustion is a research event") {
  const LevelContext ctx(5);
  KnowledgeBase kb = seed_kb(ctx);
  const Mat2 g = mat(3, 1, 5, 2);
  DecomposeBounds tight;
  tight.k_max = 0;
  tight.n_cap = 0;
  CHECK_THROWS_AS(decompose_Gamma02(g, kb, tight), SearchExhausted);
}

TEST_CASE("property: random short words round trip when the search succeeds") {
  for (std::int64_t N : {3, 5, 7}) {
    const LevelContext ctx(N);
    KnowledgeBase kb = seed_kb(ctx);
    RandomWordGenerator gen(certified_L_pool(kb, 3), 11, 6);
    int ok = 0;
    for (int i = 0; i < 150; ++i) {
      const Mat2 g = replay(gen.next(), kb);
      REQUIRE(in_gamma02(g, ctx));
      try {
        const auto d = decompose_Gamma02(g, kb);
        CHECK(replay(d.word, kb) == g);
        CHECK(match_normal_form(d.word, kb).has_value());
        ++ok;
      } catch (const SearchExhausted&) {
      }
    }
    MESSAGE("N=" << N << ": " << ok << "/150 decomposed");
    CHECK(ok >= 100);
  }
}
