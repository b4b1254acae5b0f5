#include "gamma02/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

using gamma02::cli::Command;
using gamma02::cli::RunConfig;

namespace {

void add_output(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--out", cfg.output_path,
                  "Write JSON here (relative paths resolve against $GAMMA02_OUTPUT_DIR)");
}

void add_level(CLI::App* sub, RunConfig& cfg, bool required) {
  auto* opt = sub->add_option("--N", cfg.N, "Odd level N >= 3");
  if (required) opt->required();
  sub->add_option("--epsilon", cfg.epsilon, "Sign of the Fricke eigenvalue")
      ->check(CLI::IsMember({-1, 1}));
  sub->add_option("--rewrite-depth", cfg.rewrite_depth, "Depth of the T/W rewrite search");
}

void add_exec(CLI::App* sub, RunConfig& cfg) {
  sub->add_flag("!--serial", cfg.parallel, "Use the serial kernels");
}

void add_bounds(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--k-max", cfg.bounds.k_max, "Largest |k| tried per decomposition route");
  sub->add_option("--n-cap", cfg.bounds.n_cap, "Largest power-of-two exponent tried");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Gamma0,2(N) generator certification and decomposition"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* process = app.add_subcommand("process", "Derive and certify L02(N) up to a level");
  add_level(process, cfg, true);
  process->add_option("--n-max", cfg.n_max, "Highest level n");
  process->add_flag("--audit", cfg.audit, "Replay every certificate afterwards");
  add_exec(process, cfg);
  add_output(process, cfg);

  auto* member = app.add_subcommand("member", "Subgroup membership of a matrix");
  add_level(member, cfg, true);
  member->add_option("--matrix", cfg.matrix, "a,b,c,d")->required();
  add_output(member, cfg);

  auto* decompose = app.add_subcommand("decompose", "Write a Gamma0,2(N) element as a word");
  add_level(decompose, cfg, true);
  decompose->add_option("--matrix", cfg.matrix, "a,b,c,d")->required();
  add_bounds(decompose, cfg);
  add_output(decompose, cfg);

  auto* artin = app.add_subcommand("artin", "Weak-Artin witness or survey");
  artin->add_option("--d", cfg.d);
  artin->add_option("--b", cfg.b);
  artin->add_option("--M", cfg.M);
  artin->add_option("--k-max", cfg.k_max, "Largest k tried");
  artin->add_option("--n-cap", cfg.n_cap, "Largest exponent tried");
  artin->add_flag("--survey", cfg.survey, "All triples with entries in [1, bound]");
  artin->add_option("--bound", cfg.survey_bound, "Survey bound");
  add_exec(artin, cfg);
  add_output(artin, cfg);

  auto* audit = app.add_subcommand("audit", "Re-verify identities over a range of levels");
  audit->add_option("--N-min", cfg.N_min);
  audit->add_option("--N-max", cfg.N_max);
  audit->add_option("--n-max", cfg.n_max, "Highest level n per N");
  audit->add_option("--epsilon", cfg.epsilon)->check(CLI::IsMember({-1, 1}));
  audit->add_option("--rewrite-depth", cfg.rewrite_depth);
  audit->add_option("--trials", cfg.trials, "Random decompositions per N");
  audit->add_option("--word-length", cfg.word_length, "Maximum random word length");
  audit->add_option("--pool-level", cfg.pool_level, "Highest L02 level in random words");
  audit->add_option("--seed", cfg.seed);
  audit->add_option("--in", cfg.input_path, "Audit a certificate file instead");
  add_bounds(audit, cfg);
  add_exec(audit, cfg);
  add_output(audit, cfg);

  auto* expand2 = app.add_subcommand("expand2", "Expand (1 - gamma)(1 - delta)");
  expand2->add_option("--gamma", cfg.gamma, "a,b,c,d")->required();
  expand2->add_option("--delta", cfg.delta, "a,b,c,d")->required();
  add_output(expand2, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : gamma02::cli::kUsage;
  }

  if (*process) cfg.command = Command::Process;
  else if (*member) cfg.command = Command::Member;
  else if (*decompose) cfg.command = Command::Decompose;
  else if (*artin) cfg.command = Command::Artin;
  else if (*audit) cfg.command = Command::Audit;
  else cfg.command = Command::Expand2;

  if (*audit && audit->count("--n-max") == 0) cfg.n_max = 8;
  return gamma02::cli::run(cfg, std::cout, std::cerr);
}
