#include "lgres/refine.hpp"

#include <algorithm>

#include "lgres/unify.hpp"

namespace lgres {

std::string to_string(QueryPairFailure f) {
  switch (f) {
    case QueryPairFailure::LengthMismatch:
      return "left and right sequences differ in length";
    case QueryPairFailure::LeftNotFlat:
      return "left atom is not flat";
    case QueryPairFailure::LeftGround:
      return "left atom is ground";
    case QueryPairFailure::RightNotSimple:
      return "right atom is not simple";
    case QueryPairFailure::RightNotWeaklyCovering:
      return "right atom is not weakly covering";
    case QueryPairFailure::RightFlatNonGround:
      return "right atom is neither ground nor non-ground compound";
    case QueryPairFailure::SharedVariables:
      return "atoms are not variable disjoint";
    case QueryPairFailure::NotUnifiable:
      return "no simultaneous unifier";
  }
  return "unknown";
}

std::string to_string(SelectionCase c) {
  switch (c) {
    case SelectionCase::NegativeCompound:
      return "negative-compound";
    case SelectionCase::PositiveCompound:
      return "positive-compound";
    case SelectionCase::TopVariables:
      return "top-variables";
    case SelectionCase::GroundNegative:
      return "ground-negative";
    case SelectionCase::Unrestricted:
      return "unrestricted";
  }
  return "unknown";
}

std::variant<QueryPair, QueryPairFailure> build_query_pair(std::vector<Atom> left,
                                                           std::vector<Atom> right,
                                                           QueryPairOptions opts) {
  if (left.size() != right.size() || left.empty()) return QueryPairFailure::LengthMismatch;
  for (const Atom& a : left) {
    if (!is_flat(a)) return QueryPairFailure::LeftNotFlat;
    if (is_ground(a)) return QueryPairFailure::LeftGround;
  }
  bool degenerate = false;
  for (const Atom& b : right) {
    if (!is_simple(b)) return QueryPairFailure::RightNotSimple;
    if (!is_weakly_covering(Literal{true, b})) return QueryPairFailure::RightNotWeaklyCovering;
    if (!is_ground(b) && !is_nonground_compound(b)) {
      if (!opts.allow_flat_right) return QueryPairFailure::RightFlatNonGround;
      degenerate = true;
    }
  }
  VarSet left_vars = vars_of(std::span<const Atom>(left));
  VarSet seen;
  for (const Atom& b : right) {
    VarSet bv = vars_of(b);
    for (VarId v : bv) {
      if (left_vars.count(v) || seen.count(v)) return QueryPairFailure::SharedVariables;
    }
    seen.insert(bv.begin(), bv.end());
  }
  Unifier u;
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (!u.unify(left[i], right[i])) return QueryPairFailure::NotUnifiable;
  }
  QueryPair qp;
  qp.sigma = u.substitution();
  qp.left = std::move(left);
  qp.right = std::move(right);
  qp.degenerate = degenerate;
  return qp;
}

TopVariableReport variable_ordering(const QueryPair& qp) {
  TopVariableReport report;
  VarSet left_vars = vars_of(std::span<const Atom>(qp.left));
  int deepest = -2;
  for (VarId v : left_vars) {
    int d = vdp(qp.sigma.apply(Term::var(v)));
    report.depth.emplace(v, d);
    deepest = std::max(deepest, d);
  }
  for (const auto& [v, d] : report.depth) {
    if (d == deepest) report.tops.insert(v);
  }
  for (std::size_t i = 0; i < qp.left.size(); ++i) {
    VarSet av = vars_of(qp.left[i]);
    if (std::any_of(av.begin(), av.end(), [&](VarId v) { return report.tops.count(v) > 0; }))
      report.eligible_left_indices.push_back(i);
  }
  return report;
}

std::optional<std::string> check_top_binding_properties(const QueryPair& qp,
                                                        const TopVariableReport& report) {
  if (report.tops.empty()) return "no top variable";
  if (qp.degenerate) return std::nullopt;
  // Matching: a top variable matches a ground or non-ground compound term,
  // and every non-ground compound term matches a top variable.
  for (std::size_t i : report.eligible_left_indices) {
    const Atom& a = qp.left[i];
    const Atom& b = qp.right[i];
    for (std::size_t k = 0; k < a.args.size(); ++k) {
      const Term& s = a.args[k];
      const Term& t = b.args[k];
      if (s.is_var() && report.tops.count(s.var_id()) && t.is_var())
        return "top variable matches a variable";
      if (t.is_compound() && !is_ground(t) &&
          !(s.is_var() && report.tops.count(s.var_id())))
        return "non-ground compound term does not match a top variable";
    }
  }
  // Bindings restricted to the top positions.
  Unifier u;
  for (std::size_t i : report.eligible_left_indices) u.unify(qp.left[i], qp.right[i]);
  Substitution sigma = u.substitution();
  VarSet left_vars = vars_of(std::span<const Atom>(qp.left));
  for (std::size_t i : report.eligible_left_indices) {
    for (VarId v : vars_of(qp.left[i])) {
      Term b = sigma.apply(Term::var(v));
      if (report.tops.count(v)) {
        if (!(is_ground(b) || vdp(b) == 1)) return "top variable binds to a non-simple term";
      } else if (!(b.is_var() || is_ground(b))) {
        return "non-top variable binds to a compound term";
      }
    }
    for (VarId v : vars_of(qp.right[i])) {
      Term b = sigma.apply(Term::var(v));
      if (!(b.is_var() || is_ground(b))) return "side variable binds to a compound term";
    }
  }
  return std::nullopt;
}

namespace {

// Position of an Lpo-greatest literal among `candidates` (first on ties).
std::size_t greatest(const Clause& c, const std::vector<std::size_t>& candidates,
                     const Lpo& lpo) {
  for (std::size_t i : candidates) {
    bool dominated = std::any_of(candidates.begin(), candidates.end(), [&](std::size_t j) {
      return j != i && lpo.compare(c.literals[j], c.literals[i]) == Order::Greater;
    });
    if (!dominated) return i;
  }
  return candidates.front();
}

}  // namespace

ClauseProfile profile_clause(const Clause& c, const Lpo& lpo) {
  ClauseProfile p;
  std::vector<std::size_t> neg_compound, pos_compound, neg_ground, negatives;
  for (std::size_t i = 0; i < c.literals.size(); ++i) {
    const Literal& l = c.literals[i];
    bool ngc = is_nonground_compound(l);
    if (l.negative()) {
      negatives.push_back(i);
      if (ngc) neg_compound.push_back(i);
      if (is_ground(l)) neg_ground.push_back(i);
    } else if (ngc) {
      pos_compound.push_back(i);
    }
  }
  if (is_ground(c)) {
    p.selection = SelectionCase::Unrestricted;
  } else if (!neg_compound.empty()) {
    p.selection = SelectionCase::NegativeCompound;
    p.selected.push_back(greatest(c, neg_compound, lpo));
  } else if (!pos_compound.empty()) {
    p.selection = SelectionCase::PositiveCompound;
  } else if (!neg_ground.empty()) {
    p.selection = SelectionCase::GroundNegative;
    p.selected.push_back(greatest(c, neg_ground, lpo));
  } else if (!negatives.empty()) {
    p.selection = SelectionCase::TopVariables;
    p.query_left = negatives;
  } else {
    p.selection = SelectionCase::Unrestricted;
  }
  if (!p.has_selection()) {
    for (std::size_t i = 0; i < c.literals.size(); ++i) {
      if (lpo.is_maximal(i, c)) p.maximal.push_back(i);
      if (c.literals[i].positive && lpo.is_strictly_maximal(i, c))
        p.strictly_maximal_positive.push_back(i);
    }
  }
  return p;
}

EligibilityDecision select_literals(const Clause& c, const Lpo& lpo, const QueryPair* context) {
  ClauseProfile p = profile_clause(c, lpo);
  EligibilityDecision d;
  d.condition = p.selection;
  if (p.selection == SelectionCase::TopVariables) {
    if (!context) {
      d.mode = EligibilityDecision::Mode::NeedsContext;
      return d;
    }
    d.mode = EligibilityDecision::Mode::Selected;
    TopVariableReport report = variable_ordering(*context);
    for (std::size_t k : report.eligible_left_indices) {
      // Map left atoms back onto clause positions.
      for (std::size_t i : p.query_left) {
        if (c.literals[i].atom == context->left[k] &&
            std::find(d.positions.begin(), d.positions.end(), i) == d.positions.end()) {
          d.positions.push_back(i);
          break;
        }
      }
    }
    std::sort(d.positions.begin(), d.positions.end());
    return d;
  }
  if (!p.selected.empty()) {
    d.mode = EligibilityDecision::Mode::Selected;
    d.positions = p.selected;
  } else {
    d.mode = EligibilityDecision::Mode::Maximal;
    d.positions = p.maximal;
  }
  return d;
}

}  // namespace lgres
