#pragma once

#include "gamma02/formal_sum.hpp"
#include "gamma02/knowledge_base.hpp"
#include "gamma02/subgroups.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>

namespace gamma02 {

struct BaseCase {
  FormalSum conjugated;  // H^-1 T2 H, H = epsilon * H_N
  FormalSum lhs_after_cancel;
  FormalSum rhs_after_cancel;
  Mat2 m2;
  std::array<Mat2, 3> variants;  // W*M2, M2*T, W*M2*T
};

// The conjugation/cancellation chain ending at M2, recomputed from scratch.
// Throws InternalConsistencyError if any intermediate identity fails.
BaseCase base_case_chain(const LevelContext& ctx);

// Runs base_case_chain and certifies M2 plus its three T/W variants in kb.
BaseCase derive_base_case(KnowledgeBase& kb);

struct PairingCandidates {
  std::pair<Mat2, Mat2> p1;  // (A C^-1, M2 (B D^-1))
  std::pair<Mat2, Mat2> p2;  // (A D^-1, M2 (B C^-1))

  const std::pair<Mat2, Mat2>& get(Pairing p) const { return p == Pairing::P1 ? p1 : p2; }
};

// C = (1,0;0,2), D = (1,1;0,2). Raw products; no reduction.
PairingCandidates pairing_candidates(const Mat2& A, const Mat2& B, const LevelContext& ctx);

// The unique pairing with both matrices integral. The parity rule (parent
// bottom-right entry even iff P1) is checked against the direct test; any
// disagreement, or zero or two integral pairings, throws UniquenessViolation.
Pairing select_integral_pairing(const PairingCandidates& c, const Mat2& parent);

// reduced = W^k * m * T^l with b and c/N of reduced in [-2^(s-1), 2^(s-1)),
// where m has top-left 2^s, s >= 1.
struct Reduction {
  Integer k;
  Integer l;
  Mat2 reduced;

  GeneratorWord pre() const;   // [W^k] (empty when k = 0)
  GeneratorWord post() const;  // [T^l]
  // m = W^-k * reduced * T^-l, with reduced as a cert token.
  GeneratorWord word() const;
};

// Throws PreconditionError unless m is in G02 with top-left 2^s, s >= 1.
Reduction reduce_to_L(const Mat2& m, const LevelContext& ctx);

// The half-level matrix (2^(n-1), alpha; beta N, (alpha beta N + 1)/2^(n-1))
// of an L02 parent and a word over certified matrices replaying to it.
struct HalfLevel {
  Mat2 matrix;
  GeneratorWord word;
  bool adjusted = false;  // outside the L02 range at level n-1
};

// Throws MissingCertificate if the needed level n-1 matrix is not in kb.
HalfLevel half_level_of(const Mat2& parent, const KnowledgeBase& kb);

// Raw candidate matrix for (pairing, slot) computed from the parent alone.
Mat2 raw_candidate(const Mat2& parent, Pairing pairing, int slot, const LevelContext& ctx);

struct ProcessStepOutcome {
  std::string parent;
  HalfLevel half_level;
  FormalSum lhs_after_cancel;
  FormalSum rhs_after_cancel;
  PairingCandidates candidates;
  Pairing chosen = Pairing::P1;
  std::pair<Mat2, Mat2> rejected;
  std::array<Certificate, 2> gamma;
};

// Pure: reads kb, inserts nothing.
ProcessStepOutcome compute_process_step(const KnowledgeBase& kb, const Certificate& parent);

// Inserts both outputs (first derivation wins) and records half-level adjustments.
void commit(KnowledgeBase& kb, const ProcessStepOutcome& outcome);

ProcessStepOutcome process_step(KnowledgeBase& kb, const Certificate& parent);

enum class Execution { Serial, Parallel };

struct EnumerationStats {
  std::size_t steps = 0;
  std::size_t duplicates = 0;  // outputs already certified
  std::size_t half_level_adjustments = 0;
};

// Derives the base case if needed, then steps level by level up to n_max.
// Throws CoverageGap listing admissible descriptors that were not reached.
std::map<LElementDescriptor, std::string> enumerate_certified_L(
    KnowledgeBase& kb, unsigned long n_max, Execution exec = Execution::Parallel,
    EnumerationStats* stats = nullptr);

// Certifies a single descriptor through its chain of window-reduced
// ancestors back to M2. Throws CoverageGap if the chain does not produce it.
const Certificate& certify_descriptor(KnowledgeBase& kb, const LElementDescriptor& target);

}  // namespace gamma02
