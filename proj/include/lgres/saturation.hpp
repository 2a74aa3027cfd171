#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lgres/ordering.hpp"
#include "lgres/proof.hpp"
#include "lgres/refine.hpp"
#include "lgres/signature.hpp"
#include "lgres/term.hpp"

namespace lgres {

/// A conclusion together with its derivation. `record.premises` index the
/// premise list handed to the rule (main premise first).
struct Conclusion {
  Clause clause;
  InferenceRecord record;
};

/// Ordered factors of `c`. Empty unless nothing is selected in `c`.
std::vector<Conclusion> ordered_factors(const Clause& c, const Lpo& lpo);

/// Ordered resolution of main literal `mi` (negative) against side literal
/// `si` (positive). Eligibility is checked before and after unification.
std::optional<Conclusion> binary_resolvent(const Clause& main, std::size_t mi, const Clause& side,
                                           std::size_t si, const Lpo& lpo);

/// Every binary ordered resolvent with `main` as main premise.
std::vector<Conclusion> binary_resolvents(const Clause& main, const Clause& side, const Lpo& lpo);

struct ResTopInfo {
  VarSet tops;
  /// Negative positions of the main premise that were resolved.
  std::vector<std::size_t> resolved;
};

/// The top-variable rule. `main` must fall under the top-variable
/// selection case; `sides[k]` provides literal `side_pos[k]` as partner of
/// the k-th negative literal of `main`. Only literals holding top variables
/// are resolved.
std::optional<Conclusion> res_top(const Clause& main, std::span<const Clause> sides,
                                  std::span<const std::size_t> side_pos, const Lpo& lpo,
                                  ResTopInfo* info = nullptr);

/// Recomputes a conclusion from its premises, checking that the recorded
/// unifier really unifies the resolved (or factored) atoms. Returns an
/// error description on mismatch.
std::optional<std::string> replay(const InferenceRecord& r, std::span<const Clause> premises);

struct SaturationOptions {
  std::size_t max_clauses = 200000;
  double max_seconds = 60.0;
  unsigned age_picks = 1;
  unsigned weight_picks = 4;
  bool forward_subsumption = false;
};

struct SaturationStats {
  std::size_t generated = 0;
  std::size_t kept = 0;
  std::size_t deleted_tautologies = 0;
  std::size_t deleted_variants = 0;
  std::size_t deleted_subsumed = 0;
  std::size_t given = 0;
  std::size_t res_top_steps = 0;
  int max_depth = -1;
  double seconds = 0.0;

  std::size_t deleted() const {
    return deleted_tautologies + deleted_variants + deleted_subsumed;
  }
};

enum class VerdictKind { Unsatisfiable, Satisfiable, ResourceOut, Aborted };

std::string to_string(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::Satisfiable;
  std::string reason;
  /// Refutation steps in id order, ending with the empty clause.
  std::vector<InferenceRecord> proof;
  SaturationStats stats;
};

/// Given-clause saturation with the ordered resolution calculus.
class Saturator {
 public:
  /// Called on every conclusion before deletion, with the conclusion id
  /// still unset. A returned message aborts the run.
  using Check = std::function<std::optional<std::string>(const Saturator&, const InferenceRecord&)>;
  using ResTopObserver = std::function<void(const Saturator&, ClauseId main, const ResTopInfo&)>;

  /// Symbols interned into `sig` before the run starts are ranked too.
  Saturator(const Signature& sig, SaturationOptions opts = {});

  ClauseId add_input(const Clause& c, std::string name = {});
  Verdict run();

  void set_check(Check c) { check_ = std::move(c); }
  void set_res_top_observer(ResTopObserver o) { observer_ = std::move(o); }

  const Clause& clause(ClauseId id) const { return clauses_.at(id).clause; }
  const InferenceRecord& record(ClauseId id) const { return records_.at(id); }
  std::size_t size() const { return clauses_.size(); }
  /// Clauses of the final active set after a Satisfiable run.
  std::vector<ClauseId> active() const;
  const Lpo& lpo() const { return lpo_; }
  const Signature& signature() const { return sig_; }
  const SaturationStats& stats() const { return stats_; }

  std::vector<InferenceRecord> proof_of(ClauseId id) const;

 private:
  struct Info {
    Clause clause;
    ClauseProfile profile;
    VarId nvars = 0;
    std::size_t weight = 0;
    bool active = false;
    bool passive = false;
  };
  struct Slot {
    ClauseId id;
    std::size_t pos;
  };

  bool keep(Conclusion c, std::vector<ClauseId> premise_ids);
  void activate(ClauseId id);
  void infer(ClauseId given);
  void res_top_as_main(ClauseId main, ClauseId given, std::optional<std::size_t> given_from);
  bool out_of_time() const;
  // Re-ranks the symbols when the signature grew after construction.
  void refresh_precedence();

  const Signature& sig_;
  SaturationOptions opts_;
  Precedence prec_;
  Lpo lpo_;
  Check check_;
  ResTopObserver observer_;

  std::vector<Info> clauses_;
  std::vector<InferenceRecord> records_;
  std::map<std::string, std::vector<ClauseId>> variant_index_;
  std::set<std::pair<ClauseId, ClauseId>> by_age_;
  std::set<std::pair<std::size_t, ClauseId>> by_weight_;
  // Active clause literals eligible as positive side literals, by predicate.
  std::map<SymbolId, std::vector<Slot>> side_index_;
  // Active non-top main literals eligible for binary resolution, by predicate.
  std::map<SymbolId, std::vector<Slot>> main_index_;
  // Active top-variable clauses, by predicate of their negative literals.
  std::map<SymbolId, std::vector<ClauseId>> top_index_;

  std::optional<ClauseId> empty_;
  std::optional<std::string> abort_;
  SaturationStats stats_;
  std::chrono::steady_clock::time_point start_;
};

/// Closure check for runs over loosely guarded clauses: the conclusion is
/// a loosely guarded clause, simple, and has no more variables than its
/// largest premise.
std::optional<std::string> check_lgc_closure(const Saturator& sat, const InferenceRecord& r);

}  // namespace lgres
