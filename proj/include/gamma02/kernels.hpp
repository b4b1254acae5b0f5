#pragma once

// Batch kernels with a serial reference and an OpenMP version of each. The
// two must produce identical results; the parallel versions only split
// independent work items and merge in index order.

#include "gamma02/artin.hpp"
#include "gamma02/process.hpp"

#include <cstdint>
#include <vector>

namespace gamma02::kernels {

// compute_process_step for every parent against the same frozen kb.
std::vector<ProcessStepOutcome> process_level(const KnowledgeBase& kb,
                                              const std::vector<const Certificate*>& parents,
                                              Execution exec);

// Artin search over all (d, b, M) in [1, bound]^3 with gcd(d, bM) = 1.
ArtinSurvey artin_survey(std::int64_t bound, std::uint64_t k_max, std::uint64_t n_cap,
                         Execution exec);

// Odd levels in [3, n_max] whose H_N-conjugated T2 differs from the expected
// three matrices.
std::vector<std::int64_t> hecke_conjugation_sweep(std::int64_t n_max, Execution exec);

struct CharacterSweep {
  std::size_t matrices = 0;
  std::size_t in_gamma02 = 0;
  std::size_t disagreements = 0;
};

// Every integral det-1 matrix with entries in [-bound, bound] and N | c,
// compared between in_gamma02 and the character oracle.
CharacterSweep character_agreement_sweep(const LevelContext& ctx, long bound, Execution exec);

}  // namespace gamma02::kernels
