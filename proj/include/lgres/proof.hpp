#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lgres/term.hpp"

namespace lgres {

using ClauseId = std::uint32_t;

enum class Rule { Input, OrderedFactoring, OrderedResolution, ResTop };

std::string to_string(Rule r);

/// One derivation step. Premises are renamed apart by adding `offsets[k]`
/// to the variables of premise k; `unifier` lives in that renamed space.
struct InferenceRecord {
  ClauseId conclusion = 0;
  Rule rule = Rule::Input;
  std::vector<ClauseId> premises;
  Substitution unifier;
  /// Factoring: the two merged positive positions. Resolution: the resolved
  /// negative positions of the main premise, in side-premise order.
  std::vector<std::size_t> main_literals;
  /// Resolution: the resolved positive position of each side premise.
  std::vector<std::size_t> side_literals;
  std::vector<VarId> offsets;
  Clause clause;
  /// Input clause name (when rule == Input).
  std::string source;
};

}  // namespace lgres
