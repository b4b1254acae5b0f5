#include "gamma02/errors.hpp"
#include "gamma02/knowledge_base.hpp"
#include "gamma02/process.hpp"

#include <doctest.h>

using namespace gamma02;

TEST_CASE("seed knowledge base") {
  const LevelContext ctx(5);
  const KnowledgeBase kb = seed_kb(ctx);
  CHECK(kb.size() == 2);
  CHECK(kb.contains(named(Named::T, ctx)));
  CHECK(kb.contains(named(Named::W, ctx)));
  for (const auto& c : kb.certificates()) {
    CHECK(c.kind == Certificate::Kind::Seed);
    CHECK(replay(c.word, kb) == c.matrix);
  }
  CHECK_THROWS_AS(kb.get("9,9,9,9"), UnknownKeyError);
  CHECK(kb.find("9,9,9,9") == nullptr);
}

TEST_CASE("insert keeps the first derivation") {
  const LevelContext ctx(3);
  KnowledgeBase kb = seed_kb(ctx);
  Certificate c;
  c.matrix = mat(4, 1, 3, 1);
  c.kind = Certificate::Kind::Word;
  c.word = {Token::T()};
  CHECK(kb.insert(c));
  c.word = {Token::W()};
  CHECK_FALSE(kb.insert(c));
  CHECK(kb.get(c.key()).word == GeneratorWord{Token::T()});
  Certificate bad;
  bad.matrix = mat(2, -1, -5, 3);
  CHECK_THROWS_AS(kb.insert(bad), PreconditionError);
}

TEST_CASE("replay") {
  const LevelContext ctx(5);
  KnowledgeBase kb = seed_kb(ctx);
  derive_base_case(kb);
  CHECK(replay({}, kb) == Mat2::identity());
  CHECK(replay({Token::T(), Token::T(-1)}, kb) == Mat2::identity());
  const std::string m2 = named(Named::M2, ctx).key();
  CHECK(replay({Token::W(), Token::cert(m2), Token::T()}, kb) == mat(2, 1, 5, 3));
  CHECK(replay({Token::cert(m2, true), Token::cert(m2)}, kb) == Mat2::identity());
  CHECK_THROWS_AS(replay({Token::cert("1,2,3,7")}, kb), UnknownKeyError);
}

TEST_CASE("word tokens") {
  CHECK(Token::parse("T^5") == Token::T(5));
  CHECK(Token::parse("W-1") == Token::W(-1));
  CHECK(Token::parse("cert-1:2,-1,-3,2") == Token::cert("2,-1,-3,2", true));
  CHECK(Token::T(-3).to_string() == "T^-3");
  CHECK(Token::T(-1).to_string() == "T-1");
  CHECK(Token::cert("4,1,3,1").to_string() == "cert:4,1,3,1");
  CHECK_THROWS_AS(Token::parse("X"), InputError);
  const GeneratorWord w{Token::T(), Token::T(2), Token::W(), Token::W(-1), Token::T(-3),
                        Token::cert("k"), Token::cert("k", true)};
  CHECK(collapse(w).empty());
  const LevelContext ctx(3);
  const GeneratorWord v{Token::W(2), Token::T(-1), Token::W()};
  CHECK(replay_tw(concat(v, inverse(v)), ctx) == Mat2::identity());
  CHECK(parse_word(to_strings(v)) == v);
}

TEST_CASE("equivalent_to") {
  const LevelContext ctx(3);
  KnowledgeBase kb = seed_kb(ctx);
  derive_base_case(kb);
  const auto w = equivalent_to(kb, mat(2, -1, -6, 4), scale_top());
  REQUIRE(w.has_value());
  CHECK(*w == GeneratorWord{Token::W(-1), Token::T(-1)});
  const auto e = equivalent_to(kb, scale_top(), scale_top());
  REQUIRE(e.has_value());
  CHECK(e->empty());
  // (2^n, alpha; 2 beta N, .) = parent * (2,0;0,1) for the parent M2.
  const Mat2 m2 = named(Named::M2, ctx);
  const auto p = equivalent_to(kb, m2 * scale_top(), scale_top());
  REQUIRE(p.has_value());
  CHECK(*p == GeneratorWord{Token::cert(m2.key())});
  CHECK(replay(*p, kb) * scale_top() == m2 * scale_top());
}

TEST_CASE("audit detects tampering") {
  const LevelContext ctx(3);
  KnowledgeBase kb = seed_kb(ctx);
  enumerate_certified_L(kb, 3, Execution::Serial);
  const AuditReport ok = audit(kb);
  CHECK(ok.checked == kb.size());
  CHECK(ok.failed == 0);

  KnowledgeBase forged(ctx);
  for (auto c : kb.certificates()) {
    if (c.kind == Certificate::Kind::ProcessStep && c.step.slot == 1) c.step.post = {Token::T(7)};
    forged.insert(c);
  }
  const AuditReport bad = audit(forged);
  CHECK(bad.failed > 0);

  KnowledgeBase orphan(ctx);
  for (const auto& c : kb.certificates()) {
    if (c.kind == Certificate::Kind::ProcessStep) {
      orphan.insert(c);
      break;
    }
  }
  CHECK_THROWS_AS(verify_certificate(orphan, orphan.certificates().front()), VerificationFailure);
}
