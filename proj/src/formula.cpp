#include "lgres/formula.hpp"

#include <algorithm>

namespace lgres {

namespace {

FormulaPtr make(Formula::Kind k, Atom a, std::vector<FormulaPtr> cs, std::vector<VarId> vs) {
  return std::make_shared<const Formula>(k, std::move(a), std::move(cs), std::move(vs));
}

void free_vars_into(const Formula& f, VarSet& bound, VarSet& out) {
  switch (f.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return;
    case Formula::Kind::Atom:
      for (VarId v : vars_of(f.atom_value())) {
        if (!bound.count(v)) out.insert(v);
      }
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      std::vector<VarId> added;
      for (VarId v : f.bound()) {
        if (bound.insert(v).second) added.push_back(v);
      }
      free_vars_into(*f.child(), bound, out);
      for (VarId v : added) bound.erase(v);
      return;
    }
    default:
      for (const auto& c : f.children()) free_vars_into(*c, bound, out);
  }
}

}  // namespace

FormulaPtr Formula::truth() { return make(Kind::True, {}, {}, {}); }
FormulaPtr Formula::falsity() { return make(Kind::False, {}, {}, {}); }
FormulaPtr Formula::atom(Atom a) { return make(Kind::Atom, std::move(a), {}, {}); }
FormulaPtr Formula::negation(FormulaPtr f) { return make(Kind::Not, {}, {std::move(f)}, {}); }

FormulaPtr Formula::conjunction(std::vector<FormulaPtr> fs) {
  if (fs.empty()) return truth();
  if (fs.size() == 1) return fs.front();
  return make(Kind::And, {}, std::move(fs), {});
}

FormulaPtr Formula::disjunction(std::vector<FormulaPtr> fs) {
  if (fs.empty()) return falsity();
  if (fs.size() == 1) return fs.front();
  return make(Kind::Or, {}, std::move(fs), {});
}

FormulaPtr Formula::implication(FormulaPtr lhs, FormulaPtr rhs) {
  return make(Kind::Implies, {}, {std::move(lhs), std::move(rhs)}, {});
}

FormulaPtr Formula::equivalence(FormulaPtr lhs, FormulaPtr rhs) {
  return make(Kind::Iff, {}, {std::move(lhs), std::move(rhs)}, {});
}

FormulaPtr Formula::forall(std::vector<VarId> vars, FormulaPtr body) {
  if (vars.empty()) return body;
  return make(Kind::Forall, {}, {std::move(body)}, std::move(vars));
}

FormulaPtr Formula::exists(std::vector<VarId> vars, FormulaPtr body) {
  if (vars.empty()) return body;
  return make(Kind::Exists, {}, {std::move(body)}, std::move(vars));
}

VarSet free_vars(const Formula& f) {
  VarSet bound, out;
  free_vars_into(f, bound, out);
  return out;
}

bool formulas_equal(const Formula& a, const Formula& b) {
  if (a.kind() != b.kind() || a.bound() != b.bound() ||
      a.children().size() != b.children().size())
    return false;
  if (a.kind() == Formula::Kind::Atom && !(a.atom_value() == b.atom_value())) return false;
  for (std::size_t i = 0; i < a.children().size(); ++i) {
    if (!formulas_equal(*a.child(i), *b.child(i))) return false;
  }
  return true;
}

bool has_function_symbols(const Formula& f) {
  if (f.kind() == Formula::Kind::Atom) return has_compound_term(f.atom_value());
  return std::any_of(f.children().begin(), f.children().end(),
                     [](const FormulaPtr& c) { return has_function_symbols(*c); });
}

VarId VarTable::intern(const std::string& name) {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it != names_.end()) return static_cast<VarId>(it - names_.begin());
  names_.push_back(name);
  return static_cast<VarId>(names_.size() - 1);
}

VarId VarTable::fresh() {
  auto id = static_cast<VarId>(names_.size());
  names_.push_back("_V" + std::to_string(id));
  return id;
}

}  // namespace lgres
