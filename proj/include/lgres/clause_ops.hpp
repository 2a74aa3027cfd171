#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lgres/term.hpp"

namespace lgres {

/// One-way matching: theta with pattern·theta == target. Variables of the
/// target are treated as rigid.
std::optional<Substitution> match(const Term& pattern, const Term& target);
std::optional<Substitution> match(const Atom& pattern, const Atom& target);

/// True iff some substitution maps every literal of `c` onto a literal of `d`.
bool subsumes(const Clause& c, const Clause& d);

/// Condensation: the smallest sub-multiset `c'` of `c` with `c·theta ⊆ c'`
/// for some theta. Duplicate literals are always merged.
Clause condense(const Clause& c);

/// Equality up to a bijective renaming of variables (literal order ignored).
bool is_variant(const Clause& a, const Clause& b);

/// Contains a complementary pair with identical atoms.
bool is_tautology(const Clause& c);

/// Renaming-invariant key; variants always share it.
std::string variant_key(const Clause& c);

struct LgcCheck {
  enum class Verdict { Ground, Guarded, NotLgc };
  Verdict verdict = Verdict::NotLgc;
  /// Literal positions of the guards when guarded.
  std::vector<std::size_t> guards;
  std::string reason;

  bool is_lgc() const { return verdict != Verdict::NotLgc; }
};

/// Loosely guarded clause recognition. The guard set reported is the
/// maximal one: every flat negative literal.
LgcCheck check_lgc(const Clause& c);

inline bool is_lgc(const Clause& c) { return check_lgc(c).is_lgc(); }

}  // namespace lgres
