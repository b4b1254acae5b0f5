#include "gamma02/knowledge_base.hpp"

#include "gamma02/errors.hpp"
#include "gamma02/process.hpp"
#include "gamma02/subgroups.hpp"

#include <algorithm>
#include <functional>

namespace gamma02 {

const char* to_string(Pairing p) { return p == Pairing::P1 ? "P1" : "P2"; }

const char* to_string(Certificate::Kind k) {
  switch (k) {
    case Certificate::Kind::Seed:
      return "seed";
    case Certificate::Kind::Word:
      return "word";
    case Certificate::Kind::BaseM2:
      return "base-M2";
    case Certificate::Kind::ProcessStep:
      return "process-step";
  }
  return "?";
}

KnowledgeBase::KnowledgeBase(LevelContext ctx, unsigned rewrite_depth)
    : ctx_(std::move(ctx)), rewrite_depth_(rewrite_depth) {}

const Certificate& KnowledgeBase::get(const std::string& key) const {
  const Certificate* c = find(key);
  if (!c) throw UnknownKeyError(key);
  return *c;
}

const Certificate* KnowledgeBase::find(const std::string& key) const {
  auto it = index_.find(key);
  return it == index_.end() ? nullptr : &certs_[it->second];
}

std::optional<std::size_t> KnowledgeBase::index_of(const std::string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool KnowledgeBase::insert(Certificate cert) {
  if (!in_gamma0(cert.matrix, ctx_)) {
    throw PreconditionError("certified matrix " + cert.key() + " is not in Gamma0(" +
                            std::to_string(ctx_.N()) + ")");
  }
  std::string key = cert.key();
  if (index_.count(key)) return false;
  index_.emplace(std::move(key), certs_.size());
  certs_.push_back(std::move(cert));
  return true;
}

void KnowledgeBase::record_half_level_adjustment(const std::string& parent_key) {
  if (std::find(adjusted_.begin(), adjusted_.end(), parent_key) == adjusted_.end()) {
    adjusted_.push_back(parent_key);
  }
}

KnowledgeBase seed_kb(const LevelContext& ctx, unsigned rewrite_depth) {
  KnowledgeBase kb(ctx, rewrite_depth);
  kb.insert(Certificate{named(Named::T, ctx), Certificate::Kind::Seed, {Token::T()}, {}, 0});
  kb.insert(Certificate{named(Named::W, ctx), Certificate::Kind::Seed, {Token::W()}, {}, 0});
  return kb;
}

Mat2 replay(const GeneratorWord& w, const KnowledgeBase& kb) {
  Mat2 acc;
  for (const Token& t : w) {
    switch (t.kind) {
      case Token::Kind::T:
        acc = acc * T_pow(t.exponent);
        break;
      case Token::Kind::W:
        acc = acc * W_pow(t.exponent, kb.ctx());
        break;
      case Token::Kind::Cert: {
        const Mat2& m = kb.get(t.key).matrix;
        acc = acc * (t.exponent < 0 ? m.inverse() : m);
        break;
      }
    }
  }
  return acc;
}

namespace {

struct Letter {
  Token token;
  Mat2 matrix;
  Mat2 inverse;
};

// Reduced words over T^+-1, W^+-1 of each length up to max_len, with their
// products and inverse products.
struct TWWord {
  GeneratorWord tokens;
  Mat2 product;
  Mat2 inverse;
};

std::vector<std::vector<TWWord>> tw_words(const LevelContext& ctx, unsigned max_len) {
  const Mat2 T = named(Named::T, ctx);
  const Mat2 W = named(Named::W, ctx);
  const std::array<Letter, 4> letters = {Letter{Token::T(1), T, T.inverse()},
                                         Letter{Token::T(-1), T.inverse(), T},
                                         Letter{Token::W(1), W, W.inverse()},
                                         Letter{Token::W(-1), W.inverse(), W}};
  std::vector<std::vector<TWWord>> by_len(max_len + 1);
  by_len[0].push_back({{}, Mat2(), Mat2()});
  for (unsigned len = 1; len <= max_len; ++len) {
    for (const TWWord& w : by_len[len - 1]) {
      for (const Letter& l : letters) {
        if (!w.tokens.empty() && w.tokens.back() == l.token.inverse()) continue;
        TWWord next{w.tokens, w.product * l.matrix, l.inverse * w.inverse};
        next.tokens.push_back(l.token);
        by_len[len].push_back(std::move(next));
      }
    }
  }
  return by_len;
}

}  // namespace

std::optional<GeneratorWord> equivalent_to(const KnowledgeBase& kb, const Mat2& m,
                                           const Mat2& target) {
  const LevelContext& ctx = kb.ctx();
  const unsigned depth = kb.rewrite_depth();
  const Mat2 x = m * target.inverse();  // need replay(w) = x
  const auto words = tw_words(ctx, depth);
  const std::string t_key = named(Named::T, ctx).key();
  const std::string w_key = named(Named::W, ctx).key();

  auto verified = [&](GeneratorWord w) -> std::optional<GeneratorWord> {
    if (replay(w, kb) * target != m) {
      throw InternalConsistencyError("equivalence witness failed to replay");
    }
    return w;
  };

  // Seed-only witnesses first, then words through one certified matrix.
  for (unsigned len = 0; len <= depth; ++len) {
    for (const TWWord& w : words[len]) {
      if (w.product == x) return verified(w.tokens);
    }
  }
  for (unsigned len = 1; len <= depth; ++len) {
    for (unsigned i = 0; i + 1 <= len; ++i) {
      const unsigned j = len - 1 - i;
      for (const TWWord& u : words[i]) {
        const Mat2 left = u.inverse * x;
        for (const TWWord& v : words[j]) {
          const Mat2 y = left * v.inverse;  // x = u * y * v
          const std::string yk = y.key();
          if (yk != t_key && yk != w_key && kb.contains(yk)) {
            return verified(concat(concat(u.tokens, {Token::cert(yk)}), v.tokens));
          }
          const std::string yi = y.inverse().key();
          if (yi != t_key && yi != w_key && kb.contains(yi)) {
            return verified(concat(concat(u.tokens, {Token::cert(yi, true)}), v.tokens));
          }
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

void fail(const Certificate& c, const std::string& why) {
  throw VerificationFailure(c.key() + ": " + why, c.key());
}

void check_references(const KnowledgeBase& kb, const Certificate& c, std::size_t self,
                      const GeneratorWord& w) {
  for (const Token& t : w) {
    if (t.kind != Token::Kind::Cert) continue;
    const auto idx = kb.index_of(t.key);
    if (!idx) fail(c, "references uncertified key " + t.key);
    if (*idx >= self) fail(c, "references later certificate " + t.key);
  }
}

bool only(const GeneratorWord& w, Token::Kind kind) {
  return std::all_of(w.begin(), w.end(), [kind](const Token& t) { return t.kind == kind; });
}

}  // namespace

void verify_certificate(const KnowledgeBase& kb, const Certificate& c) {
  const LevelContext& ctx = kb.ctx();
  const auto self = kb.index_of(c.key());
  if (!self || &kb.certificates()[*self] != &c) fail(c, "not stored under its own key");
  if (!in_gamma0(c.matrix, ctx)) fail(c, "not an integral det-1 element of Gamma0(N)");

  switch (c.kind) {
    case Certificate::Kind::Seed: {
      const bool shape = c.word.size() == 1 && c.word[0].exponent == 1 &&
                         c.word[0].kind != Token::Kind::Cert;
      if (!shape || replay_tw(c.word, ctx) != c.matrix) fail(c, "seed does not replay");
      return;
    }
    case Certificate::Kind::Word:
      check_references(kb, c, *self, c.word);
      if (replay(c.word, kb) != c.matrix) fail(c, "word does not replay");
      return;
    case Certificate::Kind::BaseM2:
      if (base_case_chain(ctx).m2 != c.matrix) fail(c, "base-case chain does not produce it");
      return;
    case Certificate::Kind::ProcessStep:
      break;
  }

  const ProcessStepReason& s = c.step;
  const auto parent_idx = kb.index_of(s.parent);
  if (!parent_idx) fail(c, "parent " + s.parent + " is not certified");
  if (*parent_idx >= *self) fail(c, "parent " + s.parent + " is certified later");
  const Mat2& parent = kb.certificates()[*parent_idx].matrix;
  if (!in_L02(parent, ctx)) fail(c, "parent " + s.parent + " is not in L02");

  check_references(kb, c, *self, s.half_level);
  const Mat2 half = half_level_of(parent, kb).matrix;
  if (replay(s.half_level, kb) != half) fail(c, "half-level word does not replay");
  if (half * scale_top() != scale_bottom() * parent) fail(c, "half-level factorisation fails");

  if (s.slot != 0 && s.slot != 1) fail(c, "slot out of range");
  const auto cands = pairing_candidates(scale_top() * parent, scale_bottom_shift() * parent, ctx);
  if (select_integral_pairing(cands, parent) != s.pairing) fail(c, "recorded pairing is not integral");
  if (!only(s.pre, Token::Kind::W) || !only(s.post, Token::Kind::T)) {
    fail(c, "normalisation words must be W^k on the left and T^l on the right");
  }
  const auto& pair = cands.get(s.pairing);
  const Mat2& raw = s.slot == 0 ? pair.first : pair.second;
  if (replay_tw(s.pre, ctx) * raw * replay_tw(s.post, ctx) != c.matrix) {
    fail(c, "normalised candidate does not reproduce the matrix");
  }
}

AuditReport audit(const KnowledgeBase& kb) {
  AuditReport r;
  for (const Certificate& c : kb.certificates()) {
    ++r.checked;
    try {
      verify_certificate(kb, c);
    } catch (const VerificationFailure& e) {
      ++r.failed;
      r.failures.push_back(e.what());
    } catch (const Error& e) {
      ++r.failed;
      r.failures.push_back(c.key() + ": " + e.what());
    }
  }
  return r;
}

}  // namespace gamma02
