#include "gamma02/process.hpp"

#include "gamma02/errors.hpp"
#include "gamma02/kernels.hpp"
#include "gamma02/number_theory.hpp"

#include <algorithm>

namespace gamma02 {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InternalConsistencyError(what);
}

LElementDescriptor parent_descriptor(const LElementDescriptor& d) {
  const Integer mod = nt::pow2(d.n - 1);
  return {d.n - 1, nt::centered_residue(d.alpha, mod), nt::centered_residue(d.beta, mod)};
}

}  // namespace

BaseCase base_case_chain(const LevelContext& ctx) {
  const long N = static_cast<long>(ctx.N());
  BaseCase out;
  const Mat2 H = named(Named::H, ctx).scaled(ctx.epsilon());
  out.conjugated = conjugate_sum(hecke_T2(), H);

  FormalSum expected;
  expected.add_term(mat(1, 0, 0, 2), 1);
  expected.add_term(mat(2, 0, 0, 1), 1);
  expected.add_term(mat(2, 0, -N, 1), 1);
  require(out.conjugated == expected, "Hecke conjugation identity failed at N=" + std::to_string(N));

  auto [lhs, rhs] = cancel_common(out.conjugated, hecke_T2());
  out.lhs_after_cancel = lhs;
  out.rhs_after_cancel = rhs;
  require(lhs == FormalSum::single(mat(2, 0, -N, 1)) &&
              rhs == FormalSum::single(scale_bottom_shift()),
          "base-case cancellation left unexpected terms");

  out.m2 = lhs.terms().front().matrix * rhs.terms().front().matrix.inverse();
  require(out.m2 == named(Named::M2, ctx), "base case did not produce M2");

  const Mat2 W = named(Named::W, ctx);
  const Mat2 T = named(Named::T, ctx);
  out.variants = {W * out.m2, out.m2 * T, W * out.m2 * T};
  return out;
}

BaseCase derive_base_case(KnowledgeBase& kb) {
  BaseCase bc = base_case_chain(kb.ctx());
  Certificate m2{bc.m2, Certificate::Kind::BaseM2, {}, {}, 1};
  const std::string key = m2.key();
  kb.insert(std::move(m2));
  const std::array<GeneratorWord, 3> words = {
      GeneratorWord{Token::W(), Token::cert(key)},
      GeneratorWord{Token::cert(key), Token::T()},
      GeneratorWord{Token::W(), Token::cert(key), Token::T()},
  };
  for (std::size_t i = 0; i < 3; ++i) {
    kb.insert(Certificate{bc.variants[i], Certificate::Kind::Word, words[i], {}, 1});
  }
  return bc;
}

PairingCandidates pairing_candidates(const Mat2& A, const Mat2& B, const LevelContext& ctx) {
  const Mat2 C_inv = scale_bottom().inverse();
  const Mat2 D_inv = scale_bottom_shift().inverse();
  const Mat2 M2 = named(Named::M2, ctx);
  return {{A * C_inv, M2 * (B * D_inv)}, {A * D_inv, M2 * (B * C_inv)}};
}

Pairing select_integral_pairing(const PairingCandidates& c, const Mat2& parent) {
  const bool first = c.p1.first.is_integral() && c.p1.second.is_integral();
  const bool second = c.p2.first.is_integral() && c.p2.second.is_integral();
  if (first == second) {
    throw UniquenessViolation(std::string(first ? "both" : "neither") +
                              " pairings integral for parent " + parent.key());
  }
  const bool parity_says_first = parent.d().get_den() == 1 && parent.d().get_num() % 2 == 0;
  if (parity_says_first != first) {
    throw UniquenessViolation("parity rule disagrees with integrality for parent " + parent.key());
  }
  return first ? Pairing::P1 : Pairing::P2;
}

GeneratorWord Reduction::pre() const {
  return k == 0 ? GeneratorWord{} : GeneratorWord{Token::W(k)};
}

GeneratorWord Reduction::post() const {
  return l == 0 ? GeneratorWord{} : GeneratorWord{Token::T(l)};
}

GeneratorWord Reduction::word() const {
  GeneratorWord w;
  if (k != 0) w.push_back(Token::W(-k));
  w.push_back(Token::cert(reduced.key()));
  if (l != 0) w.push_back(Token::T(-l));
  return w;
}

Reduction reduce_to_L(const Mat2& m, const LevelContext& ctx) {
  const unsigned long s = G02_level(m, ctx);
  if (s == 0) throw PreconditionError("reduce_to_L needs top-left 2^s with s >= 1");
  const Integer mod = nt::pow2(s);
  const Integer b = m.int_b();
  const Integer beta = m.int_c() / static_cast<long>(ctx.N());
  Reduction r;
  r.l = (nt::centered_residue(b, mod) - b) / mod;
  r.k = (nt::centered_residue(beta, mod) - beta) / mod;
  r.reduced = W_pow(r.k, ctx) * m * T_pow(r.l);
  return r;
}

HalfLevel half_level_of(const Mat2& parent, const KnowledgeBase& kb) {
  const LevelContext& ctx = kb.ctx();
  const LElementDescriptor d = descriptor_of(parent, ctx);
  const Integer c = d.beta * static_cast<long>(ctx.N());
  const Integer top = nt::pow2(d.n - 1);
  HalfLevel out;
  out.matrix = Mat2(Rational(top), Rational(d.alpha), Rational(c),
                    Rational(Integer((d.alpha * c + 1) / top)));
  if (d.n == 1) {
    // (1, alpha; beta N, alpha beta N + 1) = W^beta T^alpha
    out.word = collapse({Token::W(d.beta), Token::T(d.alpha)});
    return out;
  }
  if (in_L02(out.matrix, ctx)) {
    if (!kb.contains(out.matrix)) {
      throw MissingCertificate("half-level matrix " + out.matrix.key() + " of parent " +
                               parent.key() + " is not certified");
    }
    out.word = {Token::cert(out.matrix.key())};
    return out;
  }
  const Reduction r = reduce_to_L(out.matrix, ctx);
  if (!kb.contains(r.reduced)) {
    throw MissingCertificate("reduced half-level matrix " + r.reduced.key() + " of parent " +
                             parent.key() + " is not certified");
  }
  out.word = r.word();
  out.adjusted = true;
  return out;
}

Mat2 raw_candidate(const Mat2& parent, Pairing pairing, int slot, const LevelContext& ctx) {
  const auto c = pairing_candidates(scale_top() * parent, scale_bottom_shift() * parent, ctx);
  const auto& p = c.get(pairing);
  return slot == 0 ? p.first : p.second;
}

ProcessStepOutcome compute_process_step(const KnowledgeBase& kb, const Certificate& parent) {
  const LevelContext& ctx = kb.ctx();
  const Mat2& P = parent.matrix;
  if (!in_L02(P, ctx)) throw PreconditionError("parent " + P.key() + " is not in L02");

  ProcessStepOutcome out;
  out.parent = parent.key();
  out.half_level = half_level_of(P, kb);

  // T2 * P = A0 + A1 + A2 with A1 = half-level * (2,0;0,1), so A1 = (2,0;0,1) mod the relations.
  const FormalSum lhs = mul_sum(hecke_T2(), P, Side::Right);
  const Mat2 A0 = scale_top() * P;
  const Mat2 A1 = scale_bottom() * P;
  const Mat2 A2 = scale_bottom_shift() * P;
  require(replay(out.half_level.word, kb) == out.half_level.matrix,
          "half-level word does not replay for parent " + P.key());
  require(out.half_level.matrix * scale_top() == A1,
          "half-level factorisation failed for parent " + P.key());

  const FormalSum substituted =
      add(sub(lhs, FormalSum::single(A1)), FormalSum::single(scale_top()));
  auto [l, r] = cancel_common(substituted, hecke_T2());
  FormalSum expected_rhs;
  expected_rhs.add_term(scale_bottom(), 1);
  expected_rhs.add_term(scale_bottom_shift(), 1);
  FormalSum expected_lhs;
  expected_lhs.add_term(A0, 1);
  expected_lhs.add_term(A2, 1);
  require(l == expected_lhs && r == expected_rhs,
          "cancellation did not leave A0 + A2 = C + D for parent " + P.key());
  out.lhs_after_cancel = l;
  out.rhs_after_cancel = r;

  out.candidates = pairing_candidates(A0, A2, ctx);
  out.chosen = select_integral_pairing(out.candidates, P);
  out.rejected = out.candidates.get(out.chosen == Pairing::P1 ? Pairing::P2 : Pairing::P1);

  const auto& chosen = out.candidates.get(out.chosen);
  for (int slot = 0; slot < 2; ++slot) {
    const Mat2& raw = slot == 0 ? chosen.first : chosen.second;
    const Reduction red = reduce_to_L(raw, ctx);
    require(in_L02(red.reduced, ctx), "process output " + red.reduced.key() + " is not in L02");
    Certificate cert;
    cert.matrix = red.reduced;
    cert.kind = Certificate::Kind::ProcessStep;
    cert.step = {out.parent, out.chosen, slot, out.half_level.word, red.pre(), red.post()};
    cert.depth = parent.depth + 1;
    out.gamma[static_cast<std::size_t>(slot)] = std::move(cert);
  }
  return out;
}

void commit(KnowledgeBase& kb, const ProcessStepOutcome& outcome) {
  if (outcome.half_level.adjusted) kb.record_half_level_adjustment(outcome.parent);
  for (const Certificate& c : outcome.gamma) kb.insert(c);
}

ProcessStepOutcome process_step(KnowledgeBase& kb, const Certificate& parent) {
  ProcessStepOutcome out = compute_process_step(kb, parent);
  commit(kb, out);
  return out;
}

std::map<LElementDescriptor, std::string> enumerate_certified_L(KnowledgeBase& kb,
                                                                unsigned long n_max,
                                                                Execution exec,
                                                                EnumerationStats* stats) {
  const LevelContext& ctx = kb.ctx();
  if (!kb.contains(named(Named::M2, ctx))) derive_base_case(kb);
  EnumerationStats local;
  std::map<LElementDescriptor, std::string> out;
  std::vector<std::string> frontier;

  for (unsigned long n = 1; n <= n_max; ++n) {
    if (n > 1) {
      std::vector<const Certificate*> parents;
      parents.reserve(frontier.size());
      for (const auto& key : frontier) parents.push_back(&kb.get(key));
      const auto outcomes = kernels::process_level(kb, parents, exec);
      for (const auto& o : outcomes) {
        if (o.half_level.adjusted) ++local.half_level_adjustments;
        for (const Certificate& c : o.gamma) {
          if (kb.contains(c.key())) ++local.duplicates;
        }
        commit(kb, o);
        ++local.steps;
      }
    }
    frontier.clear();
    std::vector<std::string> missing;
    for (const auto& d : enumerate_L_descriptors(ctx, n)) {
      if (d.n != n) continue;
      const std::string key = d.matrix(ctx).key();
      if (!kb.contains(key)) {
        missing.push_back(d.to_string());
        continue;
      }
      out.emplace(d, key);
      frontier.push_back(key);
    }
    if (!missing.empty()) {
      throw CoverageGap("level " + std::to_string(n) + " has " + std::to_string(missing.size()) +
                            " uncertified descriptors",
                        std::move(missing));
    }
  }
  if (stats) *stats = local;
  return out;
}

const Certificate& certify_descriptor(KnowledgeBase& kb, const LElementDescriptor& target) {
  const LevelContext& ctx = kb.ctx();
  const Mat2 m = target.matrix(ctx);
  if (!in_L02(m, ctx)) throw PreconditionError("descriptor " + target.to_string() + " is not in L02");
  if (const Certificate* c = kb.find(m.key())) return *c;
  if (!kb.contains(named(Named::M2, ctx))) derive_base_case(kb);

  std::vector<LElementDescriptor> chain;  // target first, uncertified ancestors after it
  LElementDescriptor cur = target;
  while (!kb.contains(cur.matrix(ctx))) {
    if (cur.n == 1) {
      throw CoverageGap("level-1 descriptor missing after base case",
                        std::vector<std::string>{cur.to_string()});
    }
    chain.push_back(cur);
    cur = parent_descriptor(cur);
  }
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const std::string parent_key = parent_descriptor(*it).matrix(ctx).key();
    const Certificate parent = kb.get(parent_key);  // copy: insertion may reallocate
    process_step(kb, parent);
    if (!kb.contains(it->matrix(ctx))) {
      throw CoverageGap("process step from " + parent_key + " did not produce " +
                            it->to_string(),
                        std::vector<std::string>{it->to_string()});
    }
  }
  return kb.get(m.key());
}

}  // namespace gamma02
