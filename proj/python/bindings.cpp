#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lgres/cli.hpp"
#include "lgres/clause_ops.hpp"
#include "lgres/clausify.hpp"
#include "lgres/io.hpp"
#include "lgres/query.hpp"
#include "lgres/saturation.hpp"

namespace py = pybind11;
using namespace lgres;

namespace {

Problem parse(const std::string& text) {
  try {
    return parse_problem(text);
  } catch (const ParseError& e) {
    throw py::value_error(e.what());
  }
}

std::vector<NamedClause> clauses_of(Problem& p) {
  try {
    return clausify_problem(p);
  } catch (const ClausifyError& e) {
    throw py::value_error(e.what());
  }
}

py::dict stats_dict(const SaturationStats& s) {
  py::dict d;
  d["generated"] = s.generated;
  d["kept"] = s.kept;
  d["deleted"] = s.deleted();
  d["given"] = s.given;
  d["res_top_steps"] = s.res_top_steps;
  d["max_depth"] = s.max_depth;
  d["seconds"] = s.seconds;
  return d;
}

std::vector<std::string> clausify(const std::string& text) {
  Problem p = parse(text);
  std::vector<std::string> out;
  for (const NamedClause& nc : clauses_of(p)) out.push_back(render_clause(p.signature, nc.clause));
  return out;
}

py::dict sat(const std::string& text, std::size_t max_clauses, double max_seconds,
             bool assert_invariants) {
  Problem p = parse(text);
  std::vector<NamedClause> cs = clauses_of(p);
  for (const NamedClause& nc : cs) {
    LgcCheck lgc = check_lgc(nc.clause);
    if (!lgc.is_lgc())
      throw py::value_error("clause " + nc.name + " is not loosely guarded: " + lgc.reason);
  }
  SaturationOptions opts;
  opts.max_clauses = max_clauses;
  opts.max_seconds = max_seconds;
  Saturator s(p.signature, opts);
  for (const NamedClause& nc : cs) s.add_input(nc.clause, nc.name);
  if (assert_invariants) s.set_check(check_lgc_closure);
  Verdict v = s.run();
  if (v.kind == VerdictKind::Aborted) throw std::runtime_error(v.reason);
  py::dict d;
  d["status"] = to_string(v.kind);
  d["reason"] = v.reason;
  d["proof"] = render_proof(p.signature, v.proof);
  d["stats"] = stats_dict(v.stats);
  return d;
}

std::vector<py::dict> query(const std::string& text, const std::string& mode, bool assert_invariants) {
  Problem p = parse(text);
  std::vector<NamedClause> cs = clauses_of(p);
  AnswerOptions opts;
  opts.assert_invariants = assert_invariants;
  if (mode == "horn") {
    opts.mode = AnswerMode::Horn;
  } else if (mode == "restricted") {
    opts.mode = AnswerMode::RestrictedLgf;
  } else if (mode == "auto") {
    bool horn = std::all_of(cs.begin(), cs.end(), [](const NamedClause& c) { return is_horn(c.clause); });
    opts.mode = horn ? AnswerMode::Horn : AnswerMode::RestrictedLgf;
  } else {
    throw py::value_error("mode must be horn, restricted or auto");
  }
  std::vector<py::dict> out;
  for (const Bcq& q : p.queries) {
    AnswerResult r = answer_bcq(p.signature, cs, q, opts);
    py::dict d;
    d["name"] = q.name;
    d["verdict"] = to_string(r.kind);
    d["reason"] = r.reason;
    d["classification"] = to_string(r.classification.kind);
    d["stats"] = stats_dict(r.stats);
    out.push_back(d);
  }
  return out;
}

std::vector<py::tuple> classify(const std::string& text) {
  Problem p = parse(text);
  std::vector<py::tuple> out;
  for (const Bcq& q : p.queries) {
    QueryClassification c = classify_query(q.atoms);
    std::vector<std::string> witness;
    for (VarId v : c.witness) witness.push_back(p.variables.name(v));
    out.push_back(py::make_tuple(q.name, to_string(c.kind), witness));
  }
  return out;
}

py::tuple lgc_check(const std::string& clause_text) {
  Signature sig;
  Clause c;
  try {
    c = parse_clause(clause_text, sig);
  } catch (const ParseError& e) {
    throw py::value_error(e.what());
  }
  LgcCheck r = check_lgc(c);
  const char* verdict = r.verdict == LgcCheck::Verdict::Ground    ? "ground"
                        : r.verdict == LgcCheck::Verdict::Guarded ? "guarded"
                                                                  : "not_lgc";
  return py::make_tuple(verdict, r.guards, r.reason);
}

py::tuple run(const std::string& command, const std::string& text, const std::string& mode,
              bool proof, bool stats, bool assert_invariants, bool oracle_check) {
  RunConfig cfg;
  if (command == "sat") {
    cfg.command = Command::Sat;
  } else if (command == "query") {
    cfg.command = Command::Query;
  } else if (command == "clausify") {
    cfg.command = Command::Clausify;
  } else if (command == "classify") {
    cfg.command = Command::Classify;
  } else {
    throw py::value_error("unknown command " + command);
  }
  cfg.mode = mode == "horn" ? ModeChoice::Horn
             : mode == "restricted" ? ModeChoice::Restricted
                                    : ModeChoice::Auto;
  cfg.proof = proof;
  cfg.stats = stats;
  cfg.assert_invariants = assert_invariants;
  cfg.oracle_check = oracle_check;
  cfg.path = "<input>";
  std::ostringstream out, err;
  int rc = run_text(cfg, text, out, err);
  return py::make_tuple(rc, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_lgres, m) {
  m.doc() = "Resolution prover for the loosely guarded fragment";
  m.def("clausify", &clausify, py::arg("text"), "Clausal form of a problem, one string per clause.");
  m.def("sat", &sat, py::arg("text"), py::arg("max_clauses") = 200000,
        py::arg("max_seconds") = 60.0, py::arg("assert_invariants") = false);
  m.def("query", &query, py::arg("text"), py::arg("mode") = "auto",
        py::arg("assert_invariants") = false);
  m.def("classify", &classify, py::arg("text"));
  m.def("lgc_check", &lgc_check, py::arg("clause"),
        "(verdict, guard positions, reason) for a single clause.");
  m.def("run", &run, py::arg("command"), py::arg("text"), py::arg("mode") = "auto",
        py::arg("proof") = false, py::arg("stats") = false, py::arg("assert_invariants") = false,
        py::arg("oracle_check") = false, "Runs a CLI command on problem text: (exit code, stdout, stderr).");
}
