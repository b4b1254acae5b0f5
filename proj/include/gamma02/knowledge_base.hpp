#pragma once

#include "gamma02/mat2.hpp"
#include "gamma02/word.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace gamma02 {

enum class Pairing { P1, P2 };
const char* to_string(Pairing p);

struct ProcessStepReason {
  std::string parent;        // key of the certified parent
  Pairing pairing = Pairing::P1;
  int slot = 0;              // 0: A*C^-1 or A*D^-1, 1: the M2-corrected partner
  GeneratorWord half_level;  // word certifying the half-level matrix of the parent
  GeneratorWord pre;         // W^k applied on the left of the raw candidate
  GeneratorWord post;        // T^l applied on the right
};

// Why a matrix is equivalent to 1.
struct Certificate {
  enum class Kind { Seed, Word, BaseM2, ProcessStep };

  Mat2 matrix;
  Kind kind = Kind::Seed;
  GeneratorWord word;  // Seed: [T] or [W]; Word: product equal to matrix
  ProcessStepReason step;
  unsigned depth = 0;  // 0 for seeds, BaseM2 at 1, one more per process step

  std::string key() const { return matrix.key(); }
};

const char* to_string(Certificate::Kind k);

// Certified matrices in insertion order. Every entry is an integral det-1
// Gamma0(N) element whose reason only references earlier entries.
class KnowledgeBase {
 public:
  explicit KnowledgeBase(LevelContext ctx, unsigned rewrite_depth = 4);

  const LevelContext& ctx() const noexcept { return ctx_; }
  unsigned rewrite_depth() const noexcept { return rewrite_depth_; }
  void set_rewrite_depth(unsigned d) noexcept { rewrite_depth_ = d; }

  bool contains(const std::string& key) const { return index_.count(key) != 0; }
  bool contains(const Mat2& m) const { return contains(m.key()); }
  // Throws UnknownKeyError.
  const Certificate& get(const std::string& key) const;
  const Certificate* find(const std::string& key) const;
  std::optional<std::size_t> index_of(const std::string& key) const;

  // First derivation wins: returns false and keeps the old entry when the key exists.
  // Throws PreconditionError if the matrix is not in Gamma0(N).
  bool insert(Certificate cert);

  const std::vector<Certificate>& certificates() const noexcept { return certs_; }
  std::size_t size() const noexcept { return certs_.size(); }

  // Parent keys whose half-level matrix was outside the L02 range and had to
  // be certified through a T/W adjustment word.
  const std::vector<std::string>& half_level_adjustments() const noexcept { return adjusted_; }
  void record_half_level_adjustment(const std::string& parent_key);

 private:
  LevelContext ctx_;
  unsigned rewrite_depth_;
  std::vector<Certificate> certs_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::string> adjusted_;
};

// KnowledgeBase holding T and W_N with seed certificates.
KnowledgeBase seed_kb(const LevelContext& ctx, unsigned rewrite_depth = 4);

// Exact left-to-right product. Throws UnknownKeyError on a missing cert key.
Mat2 replay(const GeneratorWord& w, const KnowledgeBase& kb);

// Searches a word w over {T^+-1, W^+-1} with at most one certified matrix (or
// inverse) such that m = replay(w) * target, with |w| <= kb.rewrite_depth().
// Pure T/W words of any admissible length are preferred over words that use a
// certificate. Every returned word has been checked by multiplication.
std::optional<GeneratorWord> equivalent_to(const KnowledgeBase& kb, const Mat2& m,
                                           const Mat2& target);

struct AuditReport {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // "key: reason"
};

// Replays the reason of every certificate in insertion order.
AuditReport audit(const KnowledgeBase& kb);

// Throws VerificationFailure carrying the key on the first failure.
void verify_certificate(const KnowledgeBase& kb, const Certificate& cert);

}  // namespace gamma02
