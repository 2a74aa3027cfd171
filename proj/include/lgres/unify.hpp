#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>

#include "lgres/term.hpp"

namespace lgres {

class UnificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Idempotent most general unifier of two terms, or nullopt on clash or
/// occurs-check failure.
std::optional<Substitution> mgu(const Term& a, const Term& b);

/// Most general unifier of two atoms. Atoms with different predicates do not
/// unify; an arity mismatch under the same predicate is an internal error.
std::optional<Substitution> mgu(const Atom& a, const Atom& b);

using AtomPair = std::pair<Atom, Atom>;

/// Simultaneous unifier of every pair, processed left to right.
std::optional<Substitution> simultaneous_mgu(std::span<const AtomPair> pairs);

/// Incremental unifier: pairs are added one at a time against a solved form.
/// Copying a Unifier snapshots it, which is how backtracking search uses it.
class Unifier {
 public:
  /// Returns false (leaving the state unspecified) if the pair clashes.
  bool unify(const Term& a, const Term& b);
  bool unify(const Atom& a, const Atom& b);

  /// The solved form as an idempotent substitution.
  Substitution substitution() const;

 private:
  Term resolve(const Term& t) const;
  const Term* binding(VarId v) const;
  bool occurs(VarId v, const Term& t) const;

  // Triangular bindings; resolve() chases them.
  std::map<VarId, Term> bindings_;
};

}  // namespace lgres
