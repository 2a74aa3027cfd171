#include "lgres/query.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "lgres/clause_ops.hpp"

namespace lgres {

namespace {

bool co_occur(VarId x, VarId y, std::span<const Atom> atoms) {
  return std::any_of(atoms.begin(), atoms.end(), [&](const Atom& a) {
    VarSet vs = vars_of(a);
    return vs.count(x) && vs.count(y);
  });
}

VarSet all_vars(std::span<const Atom> atoms) { return vars_of(atoms); }

bool covers_all(const VarSet& xs, std::span<const Atom> atoms) {
  VarSet got = partners_of_set(xs, atoms);
  got.insert(xs.begin(), xs.end());
  return got == all_vars(atoms);
}

bool pairwise_co_occur(const std::vector<VarId>& xs, std::span<const Atom> atoms) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (!co_occur(xs[i], xs[j], atoms)) return false;
    }
  }
  return true;
}

Clause clause_of(std::span<const Atom> atoms) {
  Clause c;
  for (const Atom& a : atoms) c.literals.push_back(Literal{false, a});
  return c;
}

std::vector<Atom> atoms_of(const Clause& c) {
  std::vector<Atom> out;
  for (const Literal& l : c.literals) out.push_back(l.atom);
  return out;
}

// Smallest pairwise co-occurring subset of `pool` covering the query.
std::optional<VarSet> cloud_witness(const std::vector<VarId>& pool, std::span<const Atom> atoms) {
  std::size_t n = std::min<std::size_t>(pool.size(), 20);
  std::optional<VarSet> best;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<VarId> xs;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask >> k & 1u) xs.push_back(pool[k]);
    }
    if (best && xs.size() >= best->size()) continue;
    if (!pairwise_co_occur(xs, atoms)) continue;
    VarSet set(xs.begin(), xs.end());
    if (covers_all(set, atoms)) best = set;
  }
  return best;
}

}  // namespace

Clause negate_query(const Bcq& q) {
  for (const Atom& a : q.atoms) {
    if (has_compound_term(a)) throw std::invalid_argument("query atoms may not hold compound terms");
  }
  return normalize_variables(clause_of(q.atoms));
}

VarSet partners(VarId x, std::span<const Atom> atoms) {
  VarSet out;
  bool seen = false;
  for (const Atom& a : atoms) {
    VarSet vs = vars_of(a);
    if (!vs.count(x)) continue;
    seen = true;
    for (VarId y : vs) {
      if (y != x) out.insert(y);
    }
  }
  if (!seen) throw std::invalid_argument("variable does not occur in the query");
  return out;
}

VarSet partners_of_set(const VarSet& xs, std::span<const Atom> atoms) {
  VarSet out;
  for (VarId x : xs) {
    VarSet p = partners(x, atoms);
    out.insert(p.begin(), p.end());
  }
  return out;
}

std::string to_string(QueryClass k) {
  switch (k) {
    case QueryClass::LooselyGuarded:
      return "loosely_guarded";
    case QueryClass::Star:
      return "star";
    case QueryClass::Cloud:
      return "cloud";
    case QueryClass::General:
      return "general";
  }
  return "?";
}

QueryClassification classify_query(std::span<const Atom> atoms) {
  QueryClassification out;
  if (is_lgc(clause_of(atoms))) {
    out.kind = QueryClass::LooselyGuarded;
    return out;
  }
  for (VarId x : all_vars(atoms)) {
    if (covers_all({x}, atoms)) {
      out.kind = QueryClass::Star;
      out.witness = {x};
      return out;
    }
  }
  Clause c = clause_of(atoms);
  VarSet chained = chained_variables(c.literals);
  if (auto w = cloud_witness(std::vector<VarId>(chained.begin(), chained.end()), atoms)) {
    out.kind = QueryClass::Cloud;
    out.witness = *w;
  }
  return out;
}

bool tops_within_witness(const Clause& query_clause, const VarSet& tops) {
  if (is_lgc(query_clause)) return true;
  std::vector<Atom> atoms = atoms_of(query_clause);
  for (VarId x : tops) {
    if (covers_all({x}, atoms)) return true;
  }
  VarSet chained = chained_variables(query_clause.literals);
  std::vector<VarId> pool;
  std::set_intersection(tops.begin(), tops.end(), chained.begin(), chained.end(),
                        std::back_inserter(pool));
  return cloud_witness(pool, atoms).has_value();
}

std::string to_string(AnswerKind k) {
  switch (k) {
    case AnswerKind::Entailed:
      return "Entailed";
    case AnswerKind::NotEntailed:
      return "NotEntailed";
    case AnswerKind::ResourceOut:
      return "ResourceOut";
    case AnswerKind::Unsupported:
      return "Unsupported";
  }
  return "?";
}

AnswerResult answer_bcq(const Signature& sig, std::span<const NamedClause> theory, const Bcq& q,
                        const AnswerOptions& opts) {
  AnswerResult out;
  out.classification = classify_query(q.atoms);
  Clause query = negate_query(q);

  std::size_t widest = 0;
  for (const NamedClause& nc : theory) {
    LgcCheck lgc = check_lgc(nc.clause);
    if (!lgc.is_lgc()) {
      out.kind = AnswerKind::Unsupported;
      out.reason = "clause " + nc.name + " is not loosely guarded (" + lgc.reason + ")";
      return out;
    }
    if (opts.mode == AnswerMode::Horn && !is_horn(nc.clause)) {
      out.kind = AnswerKind::Unsupported;
      out.reason = "clause " + nc.name + " is not Horn: " + render_clause(sig, nc.clause);
      return out;
    }
    widest = std::max(widest, vars_of(nc.clause).size());
  }
  if (opts.mode == AnswerMode::RestrictedLgf && out.classification.kind == QueryClass::General) {
    out.kind = AnswerKind::Unsupported;
    out.reason = "query is neither loosely guarded, star nor cloud";
    return out;
  }

  std::size_t var_bound_q = opts.max_query_vars ? opts.max_query_vars
                                                : vars_of(query).size() + widest;

  Saturator sat(sig, opts.saturation);
  for (const NamedClause& nc : theory) sat.add_input(nc.clause, nc.name);
  sat.add_input(query, q.name.empty() ? "query" : q.name);

  // Shared between the observer and the check: whether the res_top step
  // being committed stayed inside a witness.
  auto step_confirmed = std::make_shared<bool>(true);
  auto all_confirmed = std::make_shared<bool>(true);
  auto downgraded = std::make_shared<std::string>();

  sat.set_res_top_observer([=](const Saturator& s, ClauseId main, const ResTopInfo& info) {
    const Clause& m = s.clause(main);
    *step_confirmed = !is_query_clause(m) || tops_within_witness(m, info.tops);
    if (!*step_confirmed) *all_confirmed = false;
  });

  AnswerMode mode = opts.mode;
  bool asserting = opts.assert_invariants;
  std::size_t max_lits = opts.max_query_literals;
  sat.set_check([=](const Saturator& s, const InferenceRecord& r) -> std::optional<std::string> {
    const Clause& c = r.clause;
    bool query_premise = std::any_of(r.premises.begin(), r.premises.end(), [&](ClauseId p) {
      return is_query_clause(s.clause(p));
    });
    auto fail = [&](const std::string& what) {
      std::string msg = what + ": " + render_clause(s.signature(), c) + " [" + to_string(r.rule);
      for (ClauseId p : r.premises) msg += " " + std::to_string(p);
      return std::optional<std::string>(msg + "]");
    };
    if (mode == AnswerMode::RestrictedLgf) {
      if (!is_lgc(c) && !is_query_clause(c)) {
        *downgraded = "a derived clause is neither loosely guarded nor a query clause: " +
                      render_clause(s.signature(), c);
        return *downgraded;
      }
      if (!asserting) return std::nullopt;
      if (vdp(c) > 1) return fail("invariant violated: conclusion is not simple");
      if (!query_premise) return check_lgc_closure(s, r);
      if (r.rule == Rule::ResTop && *step_confirmed && !is_lgc(c))
        return fail("invariant violated: resolvent of a witnessed query step is not loosely guarded");
      return std::nullopt;
    }
    if (!asserting) return std::nullopt;
    if (query_premise) {
      if (!is_query_clause(c)) return fail("invariant violated: resolvent with a query clause is not a query clause");
      if (c.size() > max_lits || vars_of(c).size() > var_bound_q)
        return fail("invariant violated: derived query clause exceeds the fixed size bound");
      return std::nullopt;
    }
    if (!is_horn(c)) return fail("invariant violated: resolvent of Horn clauses is not Horn");
    return check_lgc_closure(s, r);
  });

  Verdict v = sat.run();
  out.stats = v.stats;
  out.classification.dynamic_confirmed =
      *all_confirmed && opts.mode == AnswerMode::RestrictedLgf;
  switch (v.kind) {
    case VerdictKind::Unsatisfiable:
      out.kind = AnswerKind::Entailed;
      out.proof = std::move(v.proof);
      break;
    case VerdictKind::Satisfiable:
      out.kind = AnswerKind::NotEntailed;
      break;
    case VerdictKind::ResourceOut:
      out.kind = AnswerKind::ResourceOut;
      out.reason = v.reason;
      break;
    case VerdictKind::Aborted:
      if (!downgraded->empty() && v.reason == *downgraded) {
        out.kind = AnswerKind::Unsupported;
      } else {
        throw std::logic_error(v.reason);
      }
      out.reason = v.reason;
      break;
  }
  return out;
}

}  // namespace lgres
