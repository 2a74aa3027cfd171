#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lgres/term.hpp"

namespace lgres {

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable first-order formula. Conjunction and disjunction are n-ary.
class Formula {
 public:
  enum class Kind { True, False, Atom, Not, And, Or, Implies, Iff, Forall, Exists };

  static FormulaPtr truth();
  static FormulaPtr falsity();
  static FormulaPtr atom(Atom a);
  static FormulaPtr negation(FormulaPtr f);
  static FormulaPtr conjunction(std::vector<FormulaPtr> fs);
  static FormulaPtr disjunction(std::vector<FormulaPtr> fs);
  static FormulaPtr implication(FormulaPtr lhs, FormulaPtr rhs);
  static FormulaPtr equivalence(FormulaPtr lhs, FormulaPtr rhs);
  static FormulaPtr forall(std::vector<VarId> vars, FormulaPtr body);
  static FormulaPtr exists(std::vector<VarId> vars, FormulaPtr body);

  Kind kind() const { return kind_; }
  bool is_quantifier() const { return kind_ == Kind::Forall || kind_ == Kind::Exists; }
  const Atom& atom_value() const { return atom_; }
  const std::vector<FormulaPtr>& children() const { return children_; }
  const FormulaPtr& child(std::size_t i = 0) const { return children_.at(i); }
  const std::vector<VarId>& bound() const { return vars_; }

  Formula(Kind k, Atom a, std::vector<FormulaPtr> children, std::vector<VarId> vars)
      : kind_(k), atom_(std::move(a)), children_(std::move(children)), vars_(std::move(vars)) {}

 private:
  Kind kind_;
  Atom atom_;
  std::vector<FormulaPtr> children_;
  std::vector<VarId> vars_;
};

VarSet free_vars(const Formula& f);
bool formulas_equal(const Formula& a, const Formula& b);
/// True if any atom holds a compound term.
bool has_function_symbols(const Formula& f);

/// Names for formula variables. Parsed names come first; clausification
/// appends fresh variables.
class VarTable {
 public:
  VarId intern(const std::string& name);
  VarId fresh();
  const std::string& name(VarId v) const { return names_.at(v); }
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
};

}  // namespace lgres
