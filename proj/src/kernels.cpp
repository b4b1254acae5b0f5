#include "gamma02/kernels.hpp"

#include "gamma02/errors.hpp"
#include "gamma02/subgroups.hpp"

#include <exception>
#include <numeric>
#include <optional>

namespace gamma02::kernels {

namespace {

// Runs body(i) for i in [0, n). Exceptions are captured per index and the
// lowest-index one is rethrown after the loop, so both modes fail alike.
template <class Body>
void for_each_index(std::size_t n, Execution exec, Body&& body) {
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<std::int64_t>(n);
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  } else {
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

std::vector<ProcessStepOutcome> process_level(const KnowledgeBase& kb,
                                              const std::vector<const Certificate*>& parents,
                                              Execution exec) {
  std::vector<ProcessStepOutcome> out(parents.size());
  for_each_index(parents.size(), exec,
                 [&](std::size_t i) { out[i] = compute_process_step(kb, *parents[i]); });
  return out;
}

ArtinSurvey artin_survey(std::int64_t bound, std::uint64_t k_max, std::uint64_t n_cap,
                         Execution exec) {
  struct Triple {
    std::int64_t d, b, M;
  };
  std::vector<Triple> triples;
  for (std::int64_t d = 1; d <= bound; ++d) {
    for (std::int64_t b = 1; b <= bound; ++b) {
      for (std::int64_t M = 1; M <= bound; ++M) {
        if (std::gcd(d, b * M) == 1) triples.push_back({d, b, M});
      }
    }
  }
  std::vector<std::optional<ArtinWitness>> results(triples.size());
  for_each_index(triples.size(), exec, [&](std::size_t i) {
    const Triple& t = triples[i];
    try {
      results[i] = artin_search(t.d, t.b, t.M, k_max, n_cap);
    } catch (const SearchExhausted&) {
      results[i].reset();
    }
  });

  ArtinSurvey s;
  s.bound = bound;
  s.k_max = k_max;
  s.n_cap = n_cap;
  s.triples = triples.size();
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const auto& r = results[i];
    if (!r) {
      const Triple& t = triples[i];
      s.exhausted.push_back("(" + std::to_string(t.d) + "," + std::to_string(t.b) + "," +
                            std::to_string(t.M) + ")");
      continue;
    }
    ++s.found;
    if (r->k >= s.k_histogram.size()) s.k_histogram.resize(r->k + 1, 0);
    ++s.k_histogram[r->k];
    if (s.found == 1 || r->k > s.max_k) {
      s.max_k = r->k;
      s.argmax_k = *r;
    }
    if (s.found == 1 || r->n > s.max_n) {
      s.max_n = r->n;
      s.argmax_n = *r;
    }
  }
  return s;
}

std::vector<std::int64_t> hecke_conjugation_sweep(std::int64_t n_max, Execution exec) {
  std::vector<std::int64_t> levels;
  for (std::int64_t N = 3; N <= n_max; N += 2) levels.push_back(N);
  std::vector<char> bad(levels.size(), 0);
  const FormalSum t2 = hecke_T2();
  for_each_index(levels.size(), exec, [&](std::size_t i) {
    const LevelContext ctx(levels[i]);
    const long N = static_cast<long>(levels[i]);
    FormalSum expected;
    expected.add_term(mat(1, 0, 0, 2), 1);
    expected.add_term(mat(2, 0, 0, 1), 1);
    expected.add_term(mat(2, 0, -N, 1), 1);
    bad[i] = conjugate_sum(t2, named(Named::H, ctx)) != expected;
  });
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (bad[i]) out.push_back(levels[i]);
  }
  return out;
}

CharacterSweep character_agreement_sweep(const LevelContext& ctx, long bound, Execution exec) {
  const CharacterOracle oracle(ctx);
  const long N = static_cast<long>(ctx.N());
  const auto width = static_cast<std::size_t>(2 * bound + 1);
  std::vector<CharacterSweep> rows(width);
  for_each_index(width, exec, [&](std::size_t i) {
    const long a = static_cast<long>(i) - bound;
    if (a == 0) return;  // a = 0 forces bc = -1, impossible with N | c
    CharacterSweep& row = rows[i];
    for (long c = -(bound / N) * N; c <= bound; c += N) {
      for (long b = -bound; b <= bound; ++b) {
        const long num = 1 + b * c;
        if (num % a != 0) continue;
        const long d = num / a;
        if (d < -bound || d > bound) continue;
        const Mat2 m = mat(a, b, c, d);
        ++row.matrices;
        const bool direct = in_gamma02(m, ctx);
        if (direct) ++row.in_gamma02;
        if (direct != in_gamma02_by_characters(m, ctx, oracle)) ++row.disagreements;
      }
    }
  });
  CharacterSweep total;
  for (const auto& r : rows) {
    total.matrices += r.matrices;
    total.in_gamma02 += r.in_gamma02;
    total.disagreements += r.disagreements;
  }
  return total;
}

}  // namespace gamma02::kernels
