#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lgres/io.hpp"
#include "lgres/saturation.hpp"

namespace lgres {

/// The query clause: every atom negated, variables renumbered.
Clause negate_query(const Bcq& q);

/// Variables co-occurring with `x` in some atom. Throws
/// std::invalid_argument when `x` does not occur in the query.
VarSet partners(VarId x, std::span<const Atom> atoms);
/// Union of the partners of each variable in `xs`.
VarSet partners_of_set(const VarSet& xs, std::span<const Atom> atoms);

enum class QueryClass { LooselyGuarded, Star, Cloud, General };

struct QueryClassification {
  QueryClass kind = QueryClass::General;
  /// Star: the single witness variable. Cloud: the witness set.
  VarSet witness;
  /// True once a run confirmed that every top-variable step stayed within
  /// a witness; false for the static over-approximation.
  bool dynamic_confirmed = false;
};

std::string to_string(QueryClass k);

/// Static classification over the query atoms: loosely guarded, then star
/// (some variable whose partners plus itself are all variables), then cloud
/// (a pairwise co-occurring set of chained variables whose partners plus
/// itself are all variables), else general.
QueryClassification classify_query(std::span<const Atom> atoms);

/// Whether a query clause resolved on top variables `tops` keeps the
/// co-occurrence property: the clause is loosely guarded, or some top is a
/// star witness, or some chained subset of the tops is a cloud witness.
bool tops_within_witness(const Clause& query_clause, const VarSet& tops);

enum class AnswerMode { Horn, RestrictedLgf };
enum class AnswerKind { Entailed, NotEntailed, ResourceOut, Unsupported };

std::string to_string(AnswerKind k);

struct AnswerOptions {
  AnswerMode mode = AnswerMode::Horn;
  SaturationOptions saturation;
  bool assert_invariants = false;
  /// Size bounds for derived query clauses in Horn mode. A zero variable
  /// bound means: query variables plus the widest theory clause.
  std::size_t max_query_literals = 64;
  std::size_t max_query_vars = 0;
};

struct AnswerResult {
  AnswerKind kind = AnswerKind::NotEntailed;
  std::string reason;
  std::vector<InferenceRecord> proof;
  SaturationStats stats;
  QueryClassification classification;
};

/// Decides whether the theory clauses (rules already clausified, facts as
/// ground unit clauses) entail the query.
AnswerResult answer_bcq(const Signature& sig, std::span<const NamedClause> theory, const Bcq& q,
                        const AnswerOptions& opts = {});

}  // namespace lgres
