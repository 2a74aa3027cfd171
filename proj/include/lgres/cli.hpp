#pragma once

#include <iosfwd>
#include <string>

namespace lgres {

enum class Command { Sat, Query, Clausify, Classify };
enum class ModeChoice { Horn, Restricted, Auto };

struct RunConfig {
  Command command = Command::Sat;
  std::string path;
  bool proof = false;
  bool stats = false;
  bool assert_invariants = false;
  bool oracle_check = false;
  std::size_t max_clauses = 200000;
  double max_seconds = 60.0;
  ModeChoice mode = ModeChoice::Auto;
};

// Exit codes.
constexpr int kExitOk = 0;
constexpr int kExitResourceOut = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInternalError = 3;

/// Runs one command on one problem file text. `path` is only used in
/// diagnostics.
int run_text(const RunConfig& cfg, const std::string& text, std::ostream& out, std::ostream& err);

/// Reads cfg.path and runs the command on it.
int run_file(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace lgres
