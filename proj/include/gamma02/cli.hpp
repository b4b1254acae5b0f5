#pragma once

#include "gamma02/decompose.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace gamma02::cli {

enum class Command { Process, Member, Decompose, Artin, Audit, Expand2 };

enum ExitCode : int { kOk = 0, kUsage = 1, kResearchEvent = 2 };

struct RunConfig {
  Command command = Command::Process;
  std::int64_t N = 3;
  unsigned long n_max = 2;
  int epsilon = 1;
  unsigned rewrite_depth = 4;
  DecomposeBounds bounds;
  std::optional<std::string> output_path;
  std::uint64_t seed = 1;
  bool parallel = true;

  bool audit = false;  // process: replay every certificate afterwards

  std::string matrix;  // member, decompose
  std::string gamma;   // expand2
  std::string delta;

  // artin
  std::int64_t d = 1;
  std::int64_t b = 1;
  std::int64_t M = 1;
  std::uint64_t k_max = 5000;
  std::uint64_t n_cap = std::uint64_t{1} << 32;
  bool survey = false;
  std::int64_t survey_bound = 30;

  // audit
  std::int64_t N_min = 3;
  std::int64_t N_max = 29;
  std::size_t trials = 20;
  unsigned word_length = 12;
  unsigned long pool_level = 3;
  std::optional<std::string> input_path;
};

// Relative output paths are resolved against $GAMMA02_OUTPUT_DIR when set.
std::string resolve_output_path(const std::string& path);

// Runs one command, writing the JSON document to cfg.output_path (atomically)
// or to `out`, and diagnostics to `err`. Returns the exit code.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int cmd_process(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_member(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_decompose(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_artin(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_audit(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_expand2(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace gamma02::cli
