#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lgres/ordering.hpp"
#include "lgres/term.hpp"

namespace lgres {

/// Matched main-premise atoms (left) and side-premise atoms (right) with
/// their simultaneous unifier.
struct QueryPair {
  std::vector<Atom> left;
  std::vector<Atom> right;
  Substitution sigma;
  /// Some right atom is flat and non-ground. Depths are still computed from
  /// sigma, but the depth bounds are not asserted for such pairs.
  bool degenerate = false;
};

enum class QueryPairFailure {
  LengthMismatch,
  LeftNotFlat,
  LeftGround,
  RightNotSimple,
  RightNotWeaklyCovering,
  RightFlatNonGround,
  SharedVariables,
  NotUnifiable,
};

std::string to_string(QueryPairFailure f);

struct QueryPairOptions {
  /// Accept flat non-ground right atoms as a degenerate pair instead of
  /// rejecting them.
  bool allow_flat_right = true;
};

std::variant<QueryPair, QueryPairFailure> build_query_pair(std::vector<Atom> left,
                                                           std::vector<Atom> right,
                                                           QueryPairOptions opts = {});

struct TopVariableReport {
  /// vdp of the binding of each left variable.
  std::map<VarId, int> depth;
  VarSet tops;
  std::vector<std::size_t> eligible_left_indices;
};

/// Depth ordering of the left variables under sigma and the resulting top
/// variables; never empty for a valid pair.
TopVariableReport variable_ordering(const QueryPair& qp);

/// Checks the matching and binding properties that hold for a
/// non-degenerate pair restricted to its top positions. Returns a
/// description of the first violation.
std::optional<std::string> check_top_binding_properties(const QueryPair& qp,
                                                        const TopVariableReport& report);

/// Which selection condition governs a clause.
enum class SelectionCase {
  NegativeCompound,  ///< a negative non-ground compound literal is selected
  PositiveCompound,  ///< no selection; maximal literals are eligible
  TopVariables,      ///< selection depends on the partners (top variables)
  GroundNegative,    ///< flat non-ground clause with ground negative literals
  Unrestricted,      ///< ground clauses and positive flat clauses: maximality
};

std::string to_string(SelectionCase c);

/// Static part of the selection function for one clause.
struct ClauseProfile {
  SelectionCase selection = SelectionCase::Unrestricted;
  /// Statically selected negative literal positions.
  std::vector<std::size_t> selected;
  /// Positions of literals that are maximal a priori (only meaningful when
  /// nothing is selected).
  std::vector<std::size_t> maximal;
  /// Positions of positive literals that are strictly maximal a priori.
  std::vector<std::size_t> strictly_maximal_positive;
  /// Negative literal positions forming the left side of a query pair.
  std::vector<std::size_t> query_left;

  bool has_selection() const {
    return !selected.empty() || selection == SelectionCase::TopVariables;
  }
};

ClauseProfile profile_clause(const Clause& c, const Lpo& lpo);

struct EligibilityDecision {
  enum class Mode { Selected, Maximal, NeedsContext };
  Mode mode = Mode::Maximal;
  SelectionCase condition = SelectionCase::Unrestricted;
  std::vector<std::size_t> positions;
};

/// Eligible literals of `c`. For clauses under the top-variable condition a
/// query pair over the clause's negative literals must be supplied;
/// otherwise the decision is NeedsContext.
EligibilityDecision select_literals(const Clause& c, const Lpo& lpo,
                                    const QueryPair* context = nullptr);

}  // namespace lgres
