#include "lgres/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "lgres/clause_ops.hpp"
#include "lgres/clausify.hpp"
#include "lgres/io.hpp"
#include "lgres/oracle.hpp"
#include "lgres/query.hpp"
#include "lgres/saturation.hpp"

namespace lgres {

namespace {

SaturationOptions saturation_options(const RunConfig& cfg) {
  SaturationOptions o;
  o.max_clauses = cfg.max_clauses;
  o.max_seconds = cfg.max_seconds;
  return o;
}

void print_stats(std::ostream& out, const SaturationStats& s) {
  out << "stats:\n"
      << "  clauses generated: " << s.generated << "\n"
      << "  clauses kept: " << s.kept << "\n"
      << "  clauses deleted: " << s.deleted() << " (tautologies " << s.deleted_tautologies
      << ", variants " << s.deleted_variants << ", subsumed " << s.deleted_subsumed << ")\n"
      << "  given clauses: " << s.given << "\n"
      << "  top-variable steps: " << s.res_top_steps << "\n"
      << "  max clause depth: " << s.max_depth << "\n"
      << "  wall time: " << std::fixed << std::setprecision(3) << s.seconds << "s\n";
  out.unsetf(std::ios::fixed);
}

std::string guard_note(const Signature& sig, const Clause& c) {
  LgcCheck lgc = check_lgc(c);
  switch (lgc.verdict) {
    case LgcCheck::Verdict::Ground:
      return "ground";
    case LgcCheck::Verdict::NotLgc:
      return "not loosely guarded: " + lgc.reason;
    case LgcCheck::Verdict::Guarded:
      break;
  }
  return "guards: " + render_literals(sig, c, lgc.guards, ", ");
}

std::string render_vars(const VarTable& vars, const VarSet& vs) {
  std::string out;
  for (VarId v : vs) out += (out.empty() ? "" : ",") + vars.name(v);
  return out;
}

struct Loaded {
  Problem problem;
  std::vector<NamedClause> clauses;
};

int check_all_lgc(const Loaded& l, std::ostream& err) {
  for (const NamedClause& nc : l.clauses) {
    LgcCheck lgc = check_lgc(nc.clause);
    if (!lgc.is_lgc()) {
      err << "error: clause " << nc.name << " is not loosely guarded (" << lgc.reason
          << "): " << render_clause(l.problem.signature, nc.clause) << "\n";
      return kExitInputError;
    }
  }
  return kExitOk;
}

int run_sat(const RunConfig& cfg, Loaded& l, std::ostream& out, std::ostream& err) {
  if (int rc = check_all_lgc(l, err)) return rc;
  const Signature& sig = l.problem.signature;
  Saturator sat(sig, saturation_options(cfg));
  for (const NamedClause& nc : l.clauses) sat.add_input(nc.clause, nc.name);
  if (cfg.assert_invariants) sat.set_check(check_lgc_closure);
  Verdict v = sat.run();

  int rc = kExitOk;
  switch (v.kind) {
    case VerdictKind::Unsatisfiable:
      out << "status: Unsatisfiable\n";
      break;
    case VerdictKind::Satisfiable:
      out << "status: Satisfiable\n";
      break;
    case VerdictKind::ResourceOut:
      out << "status: Unknown(" << v.reason << ")\n";
      rc = kExitResourceOut;
      break;
    case VerdictKind::Aborted:
      err << "internal error: " << v.reason << "\n";
      return kExitInternalError;
  }
  if (cfg.assert_invariants && v.kind == VerdictKind::Unsatisfiable) {
    for (const InferenceRecord& r : v.proof) {
      std::vector<Clause> premises;
      for (ClauseId p : r.premises) premises.push_back(sat.clause(p));
      if (auto problem = replay(r, premises)) {
        err << "internal error: proof step " << r.conclusion << " does not replay: " << *problem
            << "\n";
        return kExitInternalError;
      }
    }
  }
  if (cfg.proof && v.kind == VerdictKind::Unsatisfiable) out << render_proof(sig, v.proof);
  if (cfg.stats) print_stats(out, v.stats);
  if (cfg.oracle_check) {
    std::vector<Clause> cs;
    for (const NamedClause& nc : l.clauses) cs.push_back(nc.clause);
    OracleVerdict o = v.kind == VerdictKind::Unsatisfiable ? naive_resolution(cs)
                                                            : finite_model_search(cs);
    if (v.kind != VerdictKind::Unsatisfiable && o.kind == OracleKind::Inconclusive)
      o = naive_resolution(cs);
    out << "oracle: " << to_string(o.kind) << " (" << o.detail << ")\n";
    bool clash = (v.kind == VerdictKind::Unsatisfiable && o.kind == OracleKind::ConfirmedSat) ||
                 (v.kind == VerdictKind::Satisfiable && o.kind == OracleKind::ConfirmedUnsat);
    if (clash) {
      err << "internal error: the oracle contradicts the verdict\n";
      return kExitInternalError;
    }
  }
  return rc;
}

int run_query(const RunConfig& cfg, Loaded& l, std::ostream& out, std::ostream& err) {
  const Signature& sig = l.problem.signature;
  AnswerOptions opts;
  opts.saturation = saturation_options(cfg);
  opts.assert_invariants = cfg.assert_invariants;
  bool all_horn = std::all_of(l.clauses.begin(), l.clauses.end(),
                              [](const NamedClause& nc) { return is_horn(nc.clause); });
  switch (cfg.mode) {
    case ModeChoice::Horn:
      opts.mode = AnswerMode::Horn;
      break;
    case ModeChoice::Restricted:
      opts.mode = AnswerMode::RestrictedLgf;
      break;
    case ModeChoice::Auto:
      opts.mode = all_horn ? AnswerMode::Horn : AnswerMode::RestrictedLgf;
      break;
  }
  int rc = kExitOk;
  for (const Bcq& q : l.problem.queries) {
    AnswerResult r;
    try {
      r = answer_bcq(sig, l.clauses, q, opts);
    } catch (const std::logic_error& e) {
      err << "internal error: query " << q.name << ": " << e.what() << "\n";
      return kExitInternalError;
    }
    out << "query " << q.name << ": " << to_string(r.kind);
    if (r.kind == AnswerKind::Unsupported || r.kind == AnswerKind::ResourceOut)
      out << "(" << r.reason << ")";
    out << "\n";
    if (r.kind == AnswerKind::ResourceOut) rc = kExitResourceOut;
    if (cfg.proof && r.kind == AnswerKind::Entailed) out << render_proof(sig, r.proof);
    if (cfg.stats) print_stats(out, r.stats);
    if (cfg.oracle_check && (r.kind == AnswerKind::Entailed || r.kind == AnswerKind::NotEntailed)) {
      std::vector<Clause> cs;
      for (const NamedClause& nc : l.clauses) cs.push_back(nc.clause);
      cs.push_back(negate_query(q));
      OracleVerdict o;
      if (all_horn) o = forward_chain(cs);
      if (o.kind == OracleKind::Inconclusive) {
        o = finite_model_search(cs);
        if (o.kind == OracleKind::ConfirmedSat) o.kind = OracleKind::ConfirmedNotEntailed;
      }
      out << "oracle: " << to_string(o.kind) << " (" << o.detail << ")\n";
      bool clash = (r.kind == AnswerKind::Entailed && o.kind == OracleKind::ConfirmedNotEntailed) ||
                   (r.kind == AnswerKind::NotEntailed && o.kind == OracleKind::ConfirmedEntailed);
      if (clash) {
        err << "internal error: the oracle contradicts the answer to " << q.name << "\n";
        return kExitInternalError;
      }
    }
  }
  return rc;
}

int run_clausify(const Loaded& l, std::ostream& out) {
  const Signature& sig = l.problem.signature;
  for (const NamedClause& nc : l.clauses) {
    out << nc.name << ": " << render_clause(sig, nc.clause) << "  % " << guard_note(sig, nc.clause)
        << "\n";
  }
  return kExitOk;
}

int run_classify(const Loaded& l, std::ostream& out) {
  for (const Bcq& q : l.problem.queries) {
    QueryClassification c = classify_query(q.atoms);
    out << "query " << q.name << ": " << to_string(c.kind);
    if (!c.witness.empty()) out << "(" << render_vars(l.problem.variables, c.witness) << ")";
    out << " static_overapprox\n";
  }
  return kExitOk;
}

}  // namespace

int run_text(const RunConfig& cfg, const std::string& text, std::ostream& out, std::ostream& err) {
  Loaded l;
  try {
    l.problem = parse_problem(text);
  } catch (const ParseError& e) {
    err << cfg.path << ":" << e.what() << "\n";
    return kExitInputError;
  }
  if (cfg.command != Command::Classify) {
    try {
      for (const NamedFormula& f : l.problem.formulas) {
        LgfMembership m = check_lgf(f.formula);
        if (!m.in_lgf) {
          err << "error: formula " << f.name << " is not loosely guarded: " << m.reason;
          if (m.witness)
            err << "; offending subformula: "
                << render_formula(l.problem.signature, l.problem.variables, *m.witness);
          err << "\n";
          return kExitInputError;
        }
      }
      l.clauses = clausify_problem(l.problem);
    } catch (const ClausifyError& e) {
      err << "error: " << e.what() << "\n";
      return kExitInputError;
    }
  }
  switch (cfg.command) {
    case Command::Sat:
      return run_sat(cfg, l, out, err);
    case Command::Query:
      return run_query(cfg, l, out, err);
    case Command::Clausify:
      return run_clausify(l, out);
    case Command::Classify:
      return run_classify(l, out);
  }
  return kExitInternalError;
}

int run_file(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ifstream in(cfg.path);
  if (!in) {
    err << "error: cannot read " << cfg.path << "\n";
    return kExitInputError;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return run_text(cfg, buf.str(), out, err);
}

}  // namespace lgres
