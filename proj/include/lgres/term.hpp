#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "lgres/signature.hpp"

namespace lgres {

using VarId = std::uint32_t;
using VarSet = std::set<VarId>;

/// Immutable first-order term: a variable, a constant or a compound term.
class Term {
 public:
  enum class Kind : std::uint8_t { Variable, Constant, Compound };

  static Term var(VarId v) { return Term(Kind::Variable, v, {}); }
  static Term constant(SymbolId c) { return Term(Kind::Constant, c, {}); }
  static Term compound(SymbolId f, std::vector<Term> args) {
    return Term(Kind::Compound, f, std::move(args));
  }

  Kind kind() const { return kind_; }
  bool is_var() const { return kind_ == Kind::Variable; }
  bool is_constant() const { return kind_ == Kind::Constant; }
  bool is_compound() const { return kind_ == Kind::Compound; }

  VarId var_id() const { return id_; }
  /// Head symbol; meaningless for variables.
  SymbolId symbol() const { return id_; }
  std::span<const Term> args() const { return args_; }

  std::strong_ordering operator<=>(const Term&) const = default;
  bool operator==(const Term&) const = default;

 private:
  Term(Kind k, std::uint32_t id, std::vector<Term> args)
      : kind_(k), id_(id), args_(std::move(args)) {}

  Kind kind_;
  std::uint32_t id_;
  std::vector<Term> args_;
};

struct Atom {
  SymbolId predicate = 0;
  std::vector<Term> args;

  std::strong_ordering operator<=>(const Atom&) const = default;
  bool operator==(const Atom&) const = default;
};

struct Literal {
  bool positive = true;
  Atom atom;

  bool negative() const { return !positive; }
  Literal complement() const { return Literal{!positive, atom}; }

  std::strong_ordering operator<=>(const Literal&) const = default;
  bool operator==(const Literal&) const = default;
};

/// A clause is a multiset of literals; the empty clause is falsum.
/// Variables are local to a clause.
struct Clause {
  std::vector<Literal> literals;

  bool empty() const { return literals.empty(); }
  std::size_t size() const { return literals.size(); }

  bool operator==(const Clause&) const = default;
};

/// Finite mapping from variables to terms.
class Substitution {
 public:
  Substitution() = default;

  bool empty() const { return bindings_.empty(); }
  const Term* lookup(VarId v) const;
  /// Adds a binding; a binding of a variable to itself is dropped.
  void bind(VarId v, Term t);
  const std::map<VarId, Term>& bindings() const { return bindings_; }

  Term apply(const Term& t) const;
  Atom apply(const Atom& a) const;
  Literal apply(const Literal& l) const;
  Clause apply(const Clause& c) const;

  /// Keeps only the bindings of the given variables.
  Substitution restricted_to(const VarSet& vars) const;

  bool operator==(const Substitution&) const = default;

 private:
  std::map<VarId, Term> bindings_;
};

// Variable collection.
void collect_vars(const Term& t, VarSet& out);
void collect_vars(const Atom& a, VarSet& out);
VarSet vars_of(const Term& t);
VarSet vars_of(const Atom& a);
VarSet vars_of(const Literal& l);
VarSet vars_of(const Clause& c);
VarSet vars_of(std::span<const Atom> atoms);

bool is_ground(const Term& t);
bool is_ground(const Atom& a);
bool is_ground(const Literal& l);
bool is_ground(const Clause& c);
bool occurs_in(VarId v, const Term& t);

/// Variable depth: -1 for ground terms, 0 for variables, 1 + max over the
/// arguments for non-ground compound terms.
int vdp(const Term& t);
/// Deepest variable depth over all argument terms; -1 when ground or empty.
int vdp(const Atom& a);
int vdp(const Literal& l);
int vdp(const Clause& c);

bool is_flat(const Term& t);
bool is_flat(const Atom& a);
bool is_flat(const Literal& l);
bool is_flat(const Clause& c);
bool is_simple(const Term& t);
bool is_simple(const Atom& a);
bool is_simple(const Literal& l);
bool is_simple(const Clause& c);

/// A literal holding at least one non-ground compound term.
bool is_nonground_compound(const Literal& l);
bool is_nonground_compound(const Atom& a);
bool has_compound_term(const Atom& a);

bool is_weakly_covering_term(const Term& t);
bool is_weakly_covering(const Literal& l);
bool is_weakly_covering(const Clause& c);

/// Variables shared by two literals whose variable sets are incomparable.
/// Throws std::invalid_argument on non-flat input.
VarSet chained_variables(std::span<const Literal> lits);

bool is_horn(const Clause& c);
/// Negative and flat. Ground compound terms are allowed: they enter derived
/// query clauses through bindings to ground side-premise terms.
bool is_query_clause(const Clause& c);

/// Number of symbol occurrences (variables included).
std::size_t symbol_count(const Term& t);
std::size_t symbol_count(const Clause& c);
/// Largest variable index + 1 (0 when ground).
VarId var_bound(const Clause& c);

/// Adds `offset` to every variable index.
Term shift_vars(const Term& t, VarId offset);
Atom shift_vars(const Atom& a, VarId offset);
Clause shift_vars(const Clause& c, VarId offset);

/// Renumbers variables by first occurrence (0, 1, ...). Two variants that
/// list their literals in the same order normalize to the same clause.
Clause normalize_variables(const Clause& c);

}  // namespace lgres
