#include "gamma02/cli.hpp"

#include "gamma02/errors.hpp"
#include "gamma02/json_io.hpp"
#include "gamma02/kernels.hpp"
#include "gamma02/process.hpp"
#include "gamma02/random_words.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

namespace gamma02::cli {

using json::Json;

namespace fs = std::filesystem;

std::string resolve_output_path(const std::string& path) {
  fs::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("GAMMA02_OUTPUT_DIR"); dir && *dir) p = fs::path(dir) / p;
  }
  return p.string();
}

namespace {

void emit(const RunConfig& cfg, const Json& doc, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (!cfg.output_path) {
    out << text;
    return;
  }
  const fs::path target = resolve_output_path(*cfg.output_path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw InputError("cannot write " + tmp.string());
    f << text;
    if (!f.flush()) throw InputError("cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
}

Json header(const char* command, const char* status) {
  Json j;
  j["command"] = command;
  j["status"] = status;
  return j;
}

const char* status_of(const ResearchEvent& e) {
  if (dynamic_cast<const UniquenessViolation*>(&e)) return "uniqueness-violation";
  if (dynamic_cast<const CoverageGap*>(&e)) return "coverage-gap";
  if (dynamic_cast<const SearchExhausted*>(&e)) return "search-exhausted";
  if (dynamic_cast<const MissingCertificate*>(&e)) return "missing-certificate";
  return "verification-failure";
}

LevelContext context(const RunConfig& cfg) { return LevelContext(cfg.N, cfg.epsilon); }

Execution exec_of(const RunConfig& cfg) {
  return cfg.parallel ? Execution::Parallel : Execution::Serial;
}

Json audit_json(const AuditReport& r) {
  return Json{{"checked", r.checked}, {"failed", r.failed}, {"failures", r.failures}};
}

}  // namespace

int cmd_process(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const LevelContext ctx = context(cfg);
  KnowledgeBase kb = seed_kb(ctx, cfg.rewrite_depth);
  Json doc = header("process", "ok");
  doc["N"] = std::to_string(ctx.N());
  doc["epsilon"] = ctx.epsilon();
  doc["n_max"] = cfg.n_max;
  int code = kOk;
  EnumerationStats stats;
  std::size_t descriptors = 0;
  try {
    descriptors = enumerate_certified_L(kb, cfg.n_max, exec_of(cfg), &stats).size();
  } catch (const ResearchEvent& e) {
    err << "research event: " << e.what() << "\n";
    doc["status"] = status_of(e);
    doc["message"] = e.what();
    if (const auto* gap = dynamic_cast<const CoverageGap*>(&e)) doc["missing"] = gap->missing();
    code = kResearchEvent;
  }
  doc["summary"] = Json{{"certificates", kb.size()},
                        {"descriptors", descriptors},
                        {"process_steps", stats.steps},
                        {"duplicate_outputs", stats.duplicates},
                        {"half_level_adjustments", kb.half_level_adjustments().size()}};
  if (cfg.audit) {
    const AuditReport r = audit(kb);
    doc["audit"] = audit_json(r);
    if (r.failed) {
      err << "audit: " << r.failed << " certificate(s) failed to replay\n";
      if (code == kOk) doc["status"] = "verification-failure";
      code = kResearchEvent;
    }
  }
  const Json body = json::knowledge_base(kb);
  doc["rewrite_depth"] = body["rewrite_depth"];
  doc["certificates"] = body["certificates"];
  doc["half_level_adjustments"] = body["half_level_adjustments"];
  emit(cfg, doc, out);
  return code;
}

int cmd_member(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const LevelContext ctx = context(cfg);
  const Mat2 m = Mat2::parse(cfg.matrix);
  Json doc = header("member", "ok");
  doc["N"] = std::to_string(ctx.N());
  doc["matrix"] = json::matrix(m);
  const bool g0 = in_gamma0(m, ctx);
  doc["gamma0"] = g0;
  doc["gamma02"] = in_gamma02(m, ctx);
  doc["G02"] = in_G02(m, ctx);
  doc["L02"] = in_L02(m, ctx);
  doc["gamma02_by_characters"] = g0 ? Json(in_gamma02_by_characters(m, ctx)) : Json(nullptr);
  doc["descriptor"] = in_L02(m, ctx) ? json::descriptor(descriptor_of(m, ctx)) : Json(nullptr);
  emit(cfg, doc, out);
  return kOk;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const LevelContext ctx = context(cfg);
  const Mat2 g = Mat2::parse(cfg.matrix);
  if (!in_gamma02(g, ctx)) {
    throw PreconditionError("matrix " + g.key() + " is not in Gamma02(" + std::to_string(ctx.N()) +
                            ")");
  }
  KnowledgeBase kb = seed_kb(ctx, cfg.rewrite_depth);
  enumerate_certified_L(kb, 1, Execution::Serial);
  Json doc = header("decompose", "ok");
  doc["N"] = std::to_string(ctx.N());
  doc["matrix"] = json::matrix(g);
  try {
    const Gamma02Decomposition d = decompose_Gamma02(g, kb, cfg.bounds);
    doc["word"] = json::word(d.word);
    doc["normal_form"] = Json{{"k", d.normal_form.k.get_str()},
                              {"delta1", json::word(d.normal_form.delta1)},
                              {"delta2", json::word(d.normal_form.delta2)},
                              {"l", d.normal_form.l.get_str()}};
    doc["route"] = d.route;
    doc["level"] = d.level;
    doc["verified"] = replay(d.word, kb) == g && match_normal_form(d.word, kb).has_value();
    Json used = Json::array();
    for (const Token& t : d.word) {
      if (t.kind == Token::Kind::Cert) used.push_back(json::certificate(kb.get(t.key)));
    }
    doc["certificates"] = std::move(used);
  } catch (const ResearchEvent& e) {
    err << "research event: " << e.what() << "\n";
    doc["status"] = status_of(e);
    doc["message"] = e.what();
    emit(cfg, doc, out);
    return kResearchEvent;
  }
  emit(cfg, doc, out);
  return doc["verified"].get<bool>() ? kOk : kResearchEvent;
}

int cmd_artin(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.survey) {
    const ArtinSurvey s = kernels::artin_survey(cfg.survey_bound, cfg.k_max, cfg.n_cap, exec_of(cfg));
    Json doc = header("artin", s.exhausted.empty() ? "ok" : "search-exhausted");
    doc["mode"] = "survey";
    doc["bound"] = s.bound;
    doc["k_max"] = s.k_max;
    doc["n_cap"] = s.n_cap;
    doc["triples"] = s.triples;
    doc["found"] = s.found;
    doc["max_k"] = s.max_k;
    doc["max_n"] = s.max_n;
    if (s.found) {
      doc["argmax_k"] = json::artin_witness(s.argmax_k);
      doc["argmax_n"] = json::artin_witness(s.argmax_n);
    }
    doc["k_histogram"] = s.k_histogram;
    doc["exhausted"] = s.exhausted;
    emit(cfg, doc, out);
    if (!s.exhausted.empty()) {
      err << "research event: " << s.exhausted.size() << " triple(s) exhausted k <= " << cfg.k_max
          << "\n";
      return kResearchEvent;
    }
    return kOk;
  }
  Json doc = header("artin", "ok");
  doc["mode"] = "single";
  try {
    const ArtinWitness w = artin_search(cfg.d, cfg.b, cfg.M, cfg.k_max, cfg.n_cap);
    const Json wj = json::artin_witness(w);
    for (const auto& [k, v] : wj.items()) doc[k] = v;
    doc["verified"] = verify_witness(w);
  } catch (const SearchExhausted& e) {
    err << "research event: " << e.what() << "\n";
    doc["status"] = "search-exhausted";
    doc["message"] = e.what();
    doc["d"] = std::to_string(cfg.d);
    doc["b"] = std::to_string(cfg.b);
    doc["M"] = std::to_string(cfg.M);
    doc["k_max"] = cfg.k_max;
    emit(cfg, doc, out);
    return kResearchEvent;
  }
  emit(cfg, doc, out);
  return kOk;
}

namespace {

struct Tally {
  std::size_t passed = 0;
  std::size_t failed = 0;
  void record(bool ok) { ok ? ++passed : ++failed; }
  Json to_json() const { return Json{{"passed", passed}, {"failed", failed}}; }
};

Json audit_level(const RunConfig& cfg, std::int64_t N, std::size_t& failed, std::size_t& exhausted) {
  const LevelContext ctx(N, cfg.epsilon);
  Json failures = Json::array();
  auto fail = [&](const std::string& what) { failures.push_back(what); };

  Tally hecke, base, mod4, process, replay_t, reduction, decomposition;

  {
    const auto bad = kernels::hecke_conjugation_sweep(N, Execution::Serial);
    const bool ok = std::find(bad.begin(), bad.end(), N) == bad.end();
    if (!ok) fail("T2 conjugation by H_N");
    hecke.record(ok);
  }
  {
    bool ok = true;
    try {
      const BaseCase plus = base_case_chain(LevelContext(N, 1));
      const BaseCase minus = base_case_chain(LevelContext(N, -1));
      ok = plus.m2 == minus.m2 && plus.variants == minus.variants;
    } catch (const Error& e) {
      ok = false;
      fail(std::string("base case: ") + e.what());
    }
    base.record(ok);
  }

  KnowledgeBase kb = seed_kb(ctx, cfg.rewrite_depth);
  derive_base_case(kb);
  {
    const Certificate m2 = kb.get(named(Named::M2, ctx).key());
    const ProcessStepOutcome o = compute_process_step(kb, m2);
    const bool ok = (o.chosen == Pairing::P1) == (N % 4 == 3);
    if (!ok) fail("mod-4 dichotomy fails at parent M2");
    mod4.record(ok);
  }

  EnumerationStats stats;
  try {
    enumerate_certified_L(kb, cfg.n_max, cfg.parallel ? Execution::Parallel : Execution::Serial,
                          &stats);
    process.record(true);
  } catch (const ResearchEvent& e) {
    process.record(false);
    fail(std::string("process: ") + e.what());
  }

  const AuditReport r = audit(kb);
  replay_t.passed = r.checked - r.failed;
  replay_t.failed = r.failed;
  for (const auto& f : r.failures) fail("replay: " + f);

  // Shifting a certified L element by W/T and reducing must give it back.
  std::mt19937_64 rng(cfg.seed ^ static_cast<std::uint64_t>(N));
  std::uniform_int_distribution<int> shift(-5, 5);
  for (const auto& c : kb.certificates()) {
    if (!in_L02(c.matrix, ctx) || G02_level(c.matrix, ctx) < 2) continue;
    const int i = shift(rng);
    const int j = shift(rng);
    const Mat2 shifted = W_pow(i, ctx) * c.matrix * T_pow(j);
    const Reduction red = reduce_to_L(shifted, ctx);
    const bool ok = red.reduced == c.matrix && replay(red.word(), kb) == shifted;
    if (!ok) fail("reduction: " + shifted.key());
    reduction.record(ok);
  }

  std::size_t exhausted_here = 0;
  if (cfg.trials > 0) {
    const auto pool = certified_L_pool(kb, std::min(cfg.pool_level, cfg.n_max));
    RandomWordGenerator gen(pool, cfg.seed + static_cast<std::uint64_t>(N), cfg.word_length);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const Mat2 g = replay(gen.next(), kb);
      try {
        const Gamma02Decomposition d = decompose_Gamma02(g, kb, cfg.bounds);
        const bool ok = replay(d.word, kb) == g && match_normal_form(d.word, kb).has_value();
        if (!ok) fail("decomposition: " + g.key());
        decomposition.record(ok);
      } catch (const SearchExhausted&) {
        ++exhausted_here;
      } catch (const ResearchEvent& e) {
        decomposition.record(false);
        fail(std::string("decomposition: ") + e.what());
      }
    }
  }

  Json checks;
  checks["hecke_conjugation"] = hecke.to_json();
  checks["base_case_sign"] = base.to_json();
  checks["mod4_dichotomy"] = mod4.to_json();
  checks["process_coverage"] = process.to_json();
  checks["certificate_replay"] = replay_t.to_json();
  checks["reduction"] = reduction.to_json();
  checks["decomposition"] = decomposition.to_json();
  for (const Tally* t : {&hecke, &base, &mod4, &process, &replay_t, &reduction, &decomposition}) {
    failed += t->failed;
  }
  exhausted += exhausted_here;

  Json j;
  j["N"] = std::to_string(N);
  j["certificates"] = kb.size();
  j["process_steps"] = stats.steps;
  j["half_level_adjustments"] = kb.half_level_adjustments().size();
  j["checks"] = std::move(checks);
  j["decompositions_exhausted"] = exhausted_here;
  j["failures"] = std::move(failures);
  return j;
}

}  // namespace

int cmd_audit(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.input_path) {
    std::ifstream f(*cfg.input_path);
    if (!f) throw InputError("cannot read " + *cfg.input_path);
    Json input;
    try {
      input = Json::parse(f);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("invalid JSON in ") + *cfg.input_path + ": " + e.what());
    }
    Json doc = header("audit", "ok");
    doc["mode"] = "file";
    doc["input"] = *cfg.input_path;
    try {
      const KnowledgeBase kb = json::knowledge_base_from(input);
      const AuditReport r = audit(kb);
      doc["N"] = std::to_string(kb.ctx().N());
      doc["checked"] = r.checked;
      doc["failed"] = r.failed;
      Json keys = Json::array();
      for (const auto& s : r.failures) keys.push_back(s.substr(0, s.find(": ")));
      doc["offending_keys"] = std::move(keys);
      doc["failures"] = r.failures;
      if (r.failed) doc["status"] = "verification-failure";
    } catch (const VerificationFailure& e) {
      doc["status"] = "verification-failure";
      doc["checked"] = 0;
      doc["failed"] = 1;
      doc["offending_keys"] = Json::array({e.key()});
      doc["failures"] = Json::array({std::string(e.what())});
    }
    emit(cfg, doc, out);
    if (doc["status"] != "ok") {
      for (const auto& k : doc["offending_keys"]) {
        err << "verification failure: " << k.get<std::string>() << "\n";
      }
      return kResearchEvent;
    }
    return kOk;
  }

  if (cfg.N_min > cfg.N_max) throw InputError("empty level range");
  Json doc = header("audit", "ok");
  doc["mode"] = "sweep";
  doc["seed"] = std::to_string(cfg.seed);
  doc["n_max"] = cfg.n_max;
  doc["trials"] = cfg.trials;
  Json levels = Json::array();
  std::size_t failed = 0;
  std::size_t exhausted = 0;
  for (std::int64_t N = cfg.N_min; N <= cfg.N_max; ++N) {
    if (N < 3 || N % 2 == 0) continue;
    levels.push_back(audit_level(cfg, N, failed, exhausted));
  }
  doc["levels"] = std::move(levels);
  doc["totals"] = Json{{"failed", failed}, {"decompositions_exhausted", exhausted}};
  if (failed) {
    doc["status"] = "verification-failure";
  } else if (exhausted) {
    doc["status"] = "search-exhausted";
  }
  emit(cfg, doc, out);
  if (failed || exhausted) {
    err << "audit: " << failed << " failure(s), " << exhausted
        << " decomposition search(es) exhausted\n";
    return kResearchEvent;
  }
  return kOk;
}

int cmd_expand2(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Mat2 g = Mat2::parse(cfg.gamma);
  const Mat2 d = Mat2::parse(cfg.delta);
  Json doc = header("expand2", "ok");
  doc["gamma"] = json::matrix(g);
  doc["delta"] = json::matrix(d);
  doc["terms"] = json::formal_sum(expand_second_order(g, d));
  emit(cfg, doc, out);
  return kOk;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::Process:
        return cmd_process(cfg, out, err);
      case Command::Member:
        return cmd_member(cfg, out, err);
      case Command::Decompose:
        return cmd_decompose(cfg, out, err);
      case Command::Artin:
        return cmd_artin(cfg, out, err);
      case Command::Audit:
        return cmd_audit(cfg, out, err);
      case Command::Expand2:
        return cmd_expand2(cfg, out, err);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResearchEvent& e) {
    err << "research event: " << e.what() << "\n";
    return kResearchEvent;
  } catch (const InternalConsistencyError& e) {
    err << "verification failure: " << e.what() << "\n";
    return kResearchEvent;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace gamma02::cli
