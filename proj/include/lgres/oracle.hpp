#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lgres/signature.hpp"
#include "lgres/term.hpp"

namespace lgres {

/// A finite interpretation over the domain {0, ..., size-1}. Tables are
/// row-major over the argument tuple.
struct Model {
  std::size_t size = 1;
  std::map<SymbolId, std::size_t> constants;
  std::map<SymbolId, std::vector<std::size_t>> functions;
  std::map<SymbolId, std::vector<bool>> predicates;

  std::size_t eval(const Term& t, const std::vector<std::size_t>& env) const;
  bool holds(const Atom& a, const std::vector<std::size_t>& env) const;
};

/// Every clause is true under every variable assignment.
bool satisfies(const Model& m, std::span<const Clause> clauses);
std::string render_model(const Signature& sig, const Model& m);

enum class OracleKind {
  ConfirmedEntailed,
  ConfirmedNotEntailed,
  ConfirmedUnsat,
  ConfirmedSat,
  Inconclusive,
};

std::string to_string(OracleKind k);

struct OracleVerdict {
  OracleKind kind = OracleKind::Inconclusive;
  std::string detail;
  std::optional<Model> model;
  std::size_t steps = 0;
};

/// Bounded forward chaining over ground instances whose terms have depth at
/// most `depth_bound` (constants have depth 0). Negative clauses are goals:
/// deriving an instance of one of their bodies yields ConfirmedEntailed.
/// Anything else is Inconclusive. Throws std::invalid_argument on non-Horn input.
OracleVerdict forward_chain(std::span<const Clause> horn, unsigned depth_bound = 2,
                            std::size_t atom_budget = 200000);

/// Searches interpretations of sizes 1..max_domain through a propositional
/// encoding. Every model found is checked against the clauses before it is
/// returned.
OracleVerdict finite_model_search(std::span<const Clause> clauses, unsigned max_domain = 3,
                                  std::size_t decision_budget = 2000000);

/// Unrestricted breadth-first binary resolution and factoring with
/// tautology, variant and forward subsumption deletion. Only a derived
/// empty clause is conclusive.
OracleVerdict naive_resolution(std::span<const Clause> clauses, std::size_t step_bound = 50000);

}  // namespace lgres
