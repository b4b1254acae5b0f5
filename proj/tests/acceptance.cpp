// Acceptance criteria 1-8. One PASS/FAIL line per criterion; the exit status
// is non-zero if any criterion fails.

#include "gamma02/decompose.hpp"
#include "gamma02/errors.hpp"
#include "gamma02/formal_sum.hpp"
#include "gamma02/kernels.hpp"
#include "gamma02/process.hpp"
#include "gamma02/random_words.hpp"

#include <gmpxx.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace gamma02;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("uncaught: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = s < limit_s;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::printf("AC%d %s  %s  [%.2f s / limit %.0f s]%s  %s\n", id, pass ? "PASS" : "FAIL", title, s,
              limit_s, in_time ? "" : " TOO SLOW", o.detail.c_str());
  std::fflush(stdout);
}

Outcome hecke_conjugation() {
  const auto bad = kernels::hecke_conjugation_sweep(999, Execution::Parallel);
  // Independent spot recomputation with explicit products.
  std::size_t checked = 0, wrong = 0;
  for (std::int64_t N = 3; N <= 999; N += 2) {
    const Mat2 H = mat(0, -1, N, 0);
    std::map<std::string, int> got;
    for (const Mat2& t : {mat(2, 0, 0, 1), mat(1, 0, 0, 2), mat(1, 1, 0, 2)}) {
      ++got[(H.inverse() * t * H).key()];
    }
    const std::map<std::string, int> want{
        {mat(1, 0, 0, 2).key(), 1}, {mat(2, 0, 0, 1).key(), 1}, {mat(2, 0, -N, 1).key(), 1}};
    ++checked;
    wrong += got != want;
  }
  std::ostringstream d;
  d << checked << " levels, kernel mismatches " << bad.size() << ", direct mismatches " << wrong;
  return {bad.empty() && wrong == 0, d.str()};
}

Outcome base_case() {
  std::size_t levels = 0, bad = 0;
  for (std::int64_t N = 3; N <= 99; N += 2) {
    const LevelContext ctx(N);
    KnowledgeBase kb = seed_kb(ctx);
    const BaseCase b = derive_base_case(kb);
    const Mat2 W = mat(1, 0, N, 1), T = mat(1, 1, 0, 1);
    const Mat2 m2 = mat(2, -1, -N, (N + 1) / 2);
    bool ok = b.m2 == m2 && b.variants[0] == W * m2 && b.variants[1] == m2 * T &&
              b.variants[2] == W * m2 * T;
    for (const Mat2& m : {m2, W * m2, m2 * T, W * m2 * T}) {
      const Certificate* c = kb.find(m.key());
      if (!c) {
        ok = false;
        continue;
      }
      try {
        verify_certificate(kb, *c);
      } catch (const ResearchEvent&) {
        ok = false;
      }
    }
    ++levels;
    bad += !ok;
  }
  std::ostringstream d;
  d << levels << " levels, " << bad << " failed";
  return {bad == 0, d.str()};
}

Outcome process_coverage() {
  std::size_t certified = 0, admissible = 0, violations = 0, gaps = 0, replay_failures = 0;
  std::size_t adjustments = 0;
  for (std::int64_t N = 3; N <= 29; N += 2) {
    const LevelContext ctx(N);
    KnowledgeBase kb = seed_kb(ctx);
    const auto want = enumerate_L_descriptors(ctx, 10);
    admissible += want.size();
    try {
      const auto got = enumerate_certified_L(kb, 10, Execution::Parallel);
      for (const auto& d : want) {
        const auto it = got.find(d);
        if (it == got.end() || kb.get(it->second).matrix != d.matrix(ctx)) {
          ++gaps;
        } else {
          ++certified;
        }
      }
    } catch (const UniquenessViolation&) {
      ++violations;
    } catch (const CoverageGap& e) {
      gaps += e.missing().size();
    }
    replay_failures += audit(kb).failed;
    adjustments += kb.half_level_adjustments().size();
  }
  std::ostringstream d;
  d << certified << "/" << admissible << " descriptors, uniqueness violations " << violations
    << ", gaps " << gaps << ", replay failures " << replay_failures << ", half-level adjustments "
    << adjustments;
  return {certified == admissible && violations == 0 && gaps == 0 && replay_failures == 0,
          d.str()};
}

Outcome mod4_dichotomy() {
  std::size_t levels = 0, bad = 0;
  for (std::int64_t N = 3; N <= 999; N += 2) {
    const LevelContext ctx(N);
    const Mat2 P = mat(2, -1, -N, (N + 1) / 2);
    const auto c = pairing_candidates(mat(2, 0, 0, 1) * P, mat(1, 1, 0, 2) * P, ctx);
    const bool first = c.p1.first.is_integral() && c.p1.second.is_integral();
    const bool second = c.p2.first.is_integral() && c.p2.second.is_integral();
    ++levels;
    bad += first != (N % 4 == 3) || first == second;
  }
  std::ostringstream d;
  d << levels << " levels, " << bad << " exceptions";
  return {bad == 0, d.str()};
}

Outcome decomposition_round_trip() {
  std::ostringstream d;
  std::size_t total = 0, ok = 0, wrong = 0;
  for (std::int64_t N = 3; N <= 15; N += 2) {
    const LevelContext ctx(N);
    KnowledgeBase kb = seed_kb(ctx);
    RandomWordGenerator gen(certified_L_pool(kb, 3), 20240 + static_cast<std::uint64_t>(N), 12);
    std::size_t here = 0;
    for (int i = 0; i < 1000; ++i) {
      const Mat2 g = replay(gen.next(), kb);
      ++total;
      try {
        const auto r = decompose_Gamma02(g, kb);
        if (replay(r.word, kb) == g && match_normal_form(r.word, kb)) {
          ++here;
        } else {
          ++wrong;
        }
      } catch (const SearchExhausted&) {
      }
    }
    ok += here;
    d << " N=" << N << ":" << here / 10.0 << "%";
  }
  std::ostringstream head;
  head << ok << "/" << total << " decomposed, " << wrong << " wrong;" << d.str();
  return {ok == total && wrong == 0, head.str()};
}

Outcome membership_oracle() {
  std::size_t matrices = 0, disagreements = 0;
  for (std::int64_t N = 3; N <= 15; N += 2) {
    const auto s = kernels::character_agreement_sweep(LevelContext(N), 50, Execution::Parallel);
    matrices += s.matrices;
    disagreements += s.disagreements;
  }
  std::ostringstream d;
  d << matrices << " matrices, " << disagreements << " disagreements";
  return {matrices > 0 && disagreements == 0, d.str()};
}

// True when 2 is a square and b is not, in the Jacobi sense, modulo every
// d + kM with k <= k_max: then b is never a power of 2 modulo d + kM.
bool quadratic_obstruction(std::int64_t d, std::int64_t b, std::int64_t M, std::uint64_t k_max) {
  for (std::uint64_t k = 0; k <= k_max; ++k) {
    const mpz_class m = d + static_cast<std::int64_t>(k) * M;
    if (m <= 1) continue;
    if (mpz_even_p(m.get_mpz_t())) return false;
    if (mpz_jacobi(mpz_class(2).get_mpz_t(), m.get_mpz_t()) != 1) return false;
    if (mpz_jacobi(mpz_class(b).get_mpz_t(), m.get_mpz_t()) != -1) return false;
  }
  return true;
}

Outcome weak_artin() {
  const std::uint64_t k_max = 5000;
  const ArtinSurvey s =
      kernels::artin_survey(30, k_max, std::uint64_t{1} << 32, Execution::Parallel);
  std::ostringstream d;
  d << s.found << "/" << s.triples << " triples; max k " << s.max_k << " at (" << s.argmax_k.d
    << "," << s.argmax_k.b << "," << s.argmax_k.M << "), max n " << s.max_n << " at ("
    << s.argmax_n.d << "," << s.argmax_n.b << "," << s.argmax_n.M << ")";
  if (!s.exhausted.empty()) {
    d << "; research event: " << s.exhausted.size() << " exhausted";
    std::size_t obstructed = 0;
    for (const auto& t : s.exhausted) {
      std::int64_t dd, b, M;
      if (std::sscanf(t.c_str(), "(%ld,%ld,%ld)", &dd, &b, &M) == 3 &&
          quadratic_obstruction(dd, b, M, k_max)) {
        ++obstructed;
      }
      d << " " << t;
    }
    d << " (" << obstructed << " with a quadratic-residue obstruction for every k)";
  }
  return {s.exhausted.empty(), d.str()};
}

Outcome second_order_expansion() {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> e(-6, 6);
  std::uniform_int_distribution<int> pick(0, 9);
  auto random_mat = [&] {
    for (;;) {
      const int a = e(rng), b = e(rng), c = e(rng), d = e(rng);
      if (a * d - b * c != 0) return mat(a, b, c, d);
    }
  };
  std::size_t bad = 0;
  for (int i = 0; i < 10000; ++i) {
    Mat2 g = random_mat();
    Mat2 h = random_mat();
    // Force the merging cases now and then.
    if (pick(rng) == 0) g = Mat2::identity();
    if (pick(rng) == 0) h = g;
    if (pick(rng) == 0) h = g.inverse();
    std::map<std::string, long> want;
    ++want[Mat2::identity().key()];
    --want[g.key()];
    --want[h.key()];
    ++want[(g * h).key()];
    std::map<std::string, long> got;
    for (const auto& t : expand_second_order(g, h).terms()) got[t.matrix.key()] = t.coeff.get_si();
    for (auto it = want.begin(); it != want.end();) {
      it = it->second == 0 ? want.erase(it) : std::next(it);
    }
    bad += got != want;
  }
  std::ostringstream d;
  d << "10000 pairs, " << bad << " mismatches";
  return {bad == 0, d.str()};
}

}  // namespace

int main() {
  criterion(1, "Hecke conjugation identity, odd N <= 999", 1, hecke_conjugation);
  criterion(2, "base case M2 and variants, odd N <= 99", 1, base_case);
  criterion(3, "process coverage, N = 3..29, n_max = 10", 30, process_coverage);
  criterion(4, "mod-4 pairing dichotomy, odd N <= 999", 1, mod4_dichotomy);
  criterion(5, "decomposition round trip, N = 3..15, 1000 words each", 60,
            decomposition_round_trip);
  criterion(6, "membership oracle equivalence, box 50, odd N <= 15", 30, membership_oracle);
  criterion(7, "weak-Artin survey, 1 <= d,b,M <= 30, k <= 5000", 60, weak_artin);
  criterion(8, "second-order expansion, 10000 pairs", 5, second_order_expansion);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
