#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lgres/formula.hpp"
#include "lgres/io.hpp"
#include "lgres/signature.hpp"
#include "lgres/term.hpp"

namespace lgres {

class ClausifyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LgfMembership {
  bool in_lgf = true;
  /// The quantified subformula (in negation normal form) that violates the
  /// guard conditions.
  FormulaPtr witness;
  std::string reason;
};

/// Loosely guarded fragment membership. Throws ClausifyError when the
/// formula contains function symbols.
LgfMembership check_lgf(const FormulaPtr& f);

/// Existentially closes the free variables.
FormulaPtr close_free(const FormulaPtr& f);

/// Negation normal form: negations only on atoms; no implications or
/// equivalences; nested conjunctions and disjunctions flattened.
FormulaPtr nnf(const FormulaPtr& f);

/// Replaces each universally quantified subformula that is not a top-level
/// conjunct by a fresh atom `def<N>(free vars)`, free variables listed by
/// first occurrence, and conjoins its definition
/// `forall free (~def<N>(free) | subformula)`. Innermost subformulae are
/// named first. Input must be in NNF.
FormulaPtr structural_transform(const FormulaPtr& f, Signature& sig);

/// Puts every top-level conjunct into prenex form, renaming bound variables
/// apart. Existentials of sibling subformulae are hoisted before universals.
FormulaPtr prenex(const FormulaPtr& f, VarTable& vars);

/// Outer Skolemisation of each prenex conjunct: every existential becomes a
/// Skolem term over the universals preceding it in that conjunct's prefix.
FormulaPtr outer_skolemize(const FormulaPtr& f, Signature& sig);

/// Drops universal quantifiers and distributes disjunction over
/// conjunction. Tautologies and duplicate literals are removed.
std::vector<Clause> cnf(const FormulaPtr& f);

struct ClausifyTrace {
  FormulaPtr closed;
  FormulaPtr negation_normal;
  FormulaPtr structural;
  FormulaPtr prenex;
  FormulaPtr skolemized;
  std::vector<Clause> clauses;
};

/// The whole pipeline. Throws ClausifyError if the input is not loosely
/// guarded.
ClausifyTrace lgf_trans_traced(const FormulaPtr& f, Signature& sig, VarTable& vars);
std::vector<Clause> lgf_trans(const FormulaPtr& f, Signature& sig, VarTable& vars);

/// Clauses of a whole problem: each formula through the pipeline (named
/// `<name>.<k>`), the given clauses, and the facts as unit clauses. Queries
/// are not included.
std::vector<NamedClause> clausify_problem(Problem& p);

}  // namespace lgres
