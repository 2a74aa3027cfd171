#include <atomic>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "lgres/cli.hpp"

namespace {

struct Output {
  std::string out;
  std::string err;
  int rc = 0;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resolution prover for the loosely guarded fragment"};
  app.require_subcommand(1);

  lgres::RunConfig base;
  std::vector<std::string> files;
  unsigned jobs = 1;
  std::string mode = "auto";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("FILE", files, "problem files")->required()->check(CLI::ExistingFile);
    sub->add_flag("--proof", base.proof, "print the refutation");
    sub->add_flag("--stats", base.stats, "print saturation statistics");
    sub->add_flag("--assert-invariants", base.assert_invariants,
                  "check closure invariants on every derived clause");
    sub->add_flag("--oracle-check", base.oracle_check, "cross-check verdicts with the oracles");
    sub->add_option("--max-clauses", base.max_clauses, "clause limit")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-seconds", base.max_seconds, "time limit")->check(CLI::PositiveNumber);
    sub->add_option("--mode", mode, "query answering mode")
        ->check(CLI::IsMember({"horn", "restricted", "auto"}));
    sub->add_option("--jobs", jobs, "input files processed in parallel")
        ->check(CLI::PositiveNumber);
  };

  std::map<CLI::App*, lgres::Command> commands;
  commands[app.add_subcommand("sat", "decide satisfiability")] = lgres::Command::Sat;
  commands[app.add_subcommand("query", "answer the queries of the file")] = lgres::Command::Query;
  commands[app.add_subcommand("clausify", "print the clausal form")] = lgres::Command::Clausify;
  commands[app.add_subcommand("classify", "classify the queries of the file")] =
      lgres::Command::Classify;
  for (auto& [sub, cmd] : commands) add_common(sub);

  CLI11_PARSE(app, argc, argv);

  for (auto& [sub, cmd] : commands) {
    if (sub->parsed()) base.command = cmd;
  }
  base.mode = mode == "horn"         ? lgres::ModeChoice::Horn
              : mode == "restricted" ? lgres::ModeChoice::Restricted
                                     : lgres::ModeChoice::Auto;

  std::vector<Output> results(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      lgres::RunConfig cfg = base;
      cfg.path = files[i];
      std::ostringstream out, err;
      results[i].rc = lgres::run_file(cfg, out, err);
      results[i].out = out.str();
      results[i].err = err.str();
    }
  };
  std::vector<std::thread> pool;
  unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(files.size()));
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int rc = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (files.size() > 1) std::cout << "== " << files[i] << "\n";
    std::cout << results[i].out;
    std::cerr << results[i].err;
    rc = std::max(rc, results[i].rc);
  }
  return rc;
}
