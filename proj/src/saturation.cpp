#include "lgres/saturation.hpp"

#include <algorithm>

#include "lgres/clause_ops.hpp"
#include "lgres/io.hpp"
#include "lgres/unify.hpp"

namespace lgres {

namespace {

bool contains(const std::vector<std::size_t>& v, std::size_t x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

Clause finish(std::vector<Literal> lits) {
  return normalize_variables(condense(Clause{std::move(lits)}));
}

Clause without(const Clause& c, std::size_t skip) {
  Clause out;
  for (std::size_t i = 0; i < c.literals.size(); ++i) {
    if (i != skip) out.literals.push_back(c.literals[i]);
  }
  return out;
}

std::vector<std::size_t> main_positions(const Clause& c, const ClauseProfile& p) {
  if (p.selection == SelectionCase::TopVariables) return {};
  if (!p.selected.empty()) return p.selected;
  std::vector<std::size_t> out;
  for (std::size_t i : p.maximal) {
    if (c.literals[i].negative()) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> side_positions(const ClauseProfile& p) {
  if (p.has_selection()) return {};
  return p.strictly_maximal_positive;
}

std::vector<std::size_t> negative_positions(const Clause& c) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.literals.size(); ++i) {
    if (c.literals[i].negative()) out.push_back(i);
  }
  return out;
}

std::vector<Conclusion> factors_impl(const Clause& c, const ClauseProfile& p, const Lpo& lpo) {
  std::vector<Conclusion> out;
  if (p.has_selection()) return out;
  for (std::size_t i : p.maximal) {
    if (!c.literals[i].positive) continue;
    for (std::size_t j = 0; j < c.literals.size(); ++j) {
      if (j == i || !c.literals[j].positive) continue;
      if (j < i && contains(p.maximal, j)) continue;
      if (c.literals[j].atom.predicate != c.literals[i].atom.predicate) continue;
      auto sigma = mgu(c.literals[i].atom, c.literals[j].atom);
      if (!sigma) continue;
      Clause inst = sigma->apply(c);
      if (!lpo.is_maximal_against(inst.literals[i], without(inst, i))) continue;
      Conclusion conc;
      conc.clause = finish(without(inst, j).literals);
      conc.record.rule = Rule::OrderedFactoring;
      conc.record.premises = {0};
      conc.record.unifier = *sigma;
      conc.record.main_literals = {i, j};
      conc.record.offsets = {0};
      conc.record.clause = conc.clause;
      out.push_back(std::move(conc));
    }
  }
  return out;
}

std::optional<Conclusion> binary_impl(const Clause& main, const ClauseProfile& pm, std::size_t mi,
                                      const Clause& side, const ClauseProfile& ps, std::size_t si,
                                      const Lpo& lpo) {
  if (mi >= main.size() || si >= side.size()) return std::nullopt;
  const Literal& neg = main.literals[mi];
  const Literal& pos = side.literals[si];
  if (!neg.negative() || !pos.positive || neg.atom.predicate != pos.atom.predicate)
    return std::nullopt;
  if (!contains(main_positions(main, pm), mi) || !contains(side_positions(ps), si))
    return std::nullopt;
  VarId off = var_bound(main);
  Clause shifted = shift_vars(side, off);
  auto sigma = mgu(neg.atom, shifted.literals[si].atom);
  if (!sigma) return std::nullopt;
  Clause m = sigma->apply(main);
  Clause s = sigma->apply(shifted);
  Clause m_rest = without(m, mi);
  Clause s_rest = without(s, si);
  if (pm.selected.empty() && !lpo.is_maximal_against(m.literals[mi], m_rest)) return std::nullopt;
  if (!lpo.is_strictly_maximal_against(s.literals[si], s_rest)) return std::nullopt;
  std::vector<Literal> lits = m_rest.literals;
  lits.insert(lits.end(), s_rest.literals.begin(), s_rest.literals.end());
  Conclusion conc;
  conc.clause = finish(std::move(lits));
  conc.record.rule = Rule::OrderedResolution;
  conc.record.premises = {0, 1};
  conc.record.unifier = *sigma;
  conc.record.main_literals = {mi};
  conc.record.side_literals = {si};
  conc.record.offsets = {0, off};
  conc.record.clause = conc.clause;
  return conc;
}

std::optional<Conclusion> res_top_impl(const Clause& main, const ClauseProfile& pm,
                                       std::span<const Clause> sides,
                                       std::span<const ClauseProfile> side_profiles,
                                       std::span<const std::size_t> side_pos, const Lpo& lpo,
                                       ResTopInfo* info) {
  if (pm.selection != SelectionCase::TopVariables) return std::nullopt;
  std::vector<std::size_t> left_pos = negative_positions(main);
  if (left_pos.size() != sides.size() || side_pos.size() != sides.size()) return std::nullopt;
  std::vector<VarId> offsets{0};
  VarId next = var_bound(main);
  std::vector<Clause> shifted;
  std::vector<Atom> left, right;
  for (std::size_t k = 0; k < sides.size(); ++k) {
    const Clause& s = sides[k];
    if (side_pos[k] >= s.size() || !contains(side_positions(side_profiles[k]), side_pos[k]))
      return std::nullopt;
    offsets.push_back(next);
    shifted.push_back(shift_vars(s, next));
    next += var_bound(s);
    left.push_back(main.literals[left_pos[k]].atom);
    right.push_back(shifted.back().literals[side_pos[k]].atom);
  }
  auto built = build_query_pair(left, right);
  if (!std::holds_alternative<QueryPair>(built)) return std::nullopt;
  const QueryPair& qp = std::get<QueryPair>(built);
  TopVariableReport report = variable_ordering(qp);
  const std::vector<std::size_t>& T = report.eligible_left_indices;
  if (T.empty()) return std::nullopt;
  std::vector<AtomPair> pairs;
  for (std::size_t k : T) pairs.emplace_back(left[k], right[k]);
  auto sigma = simultaneous_mgu(pairs);
  if (!sigma) return std::nullopt;

  std::vector<Literal> lits;
  for (std::size_t i = 0; i < main.size(); ++i) {
    bool resolved = std::any_of(T.begin(), T.end(), [&](std::size_t k) { return left_pos[k] == i; });
    if (!resolved) lits.push_back(sigma->apply(main.literals[i]));
  }
  Conclusion conc;
  conc.record.rule = Rule::ResTop;
  conc.record.premises = {0};
  conc.record.offsets = {0};
  for (std::size_t k : T) {
    Clause s = sigma->apply(shifted[k]);
    Clause rest = without(s, side_pos[k]);
    if (!lpo.is_strictly_maximal_against(s.literals[side_pos[k]], rest)) return std::nullopt;
    lits.insert(lits.end(), rest.literals.begin(), rest.literals.end());
    conc.record.premises.push_back(static_cast<ClauseId>(k + 1));
    conc.record.offsets.push_back(offsets[k + 1]);
    conc.record.main_literals.push_back(left_pos[k]);
    conc.record.side_literals.push_back(side_pos[k]);
  }
  conc.clause = finish(std::move(lits));
  conc.record.unifier = *sigma;
  conc.record.clause = conc.clause;
  if (info) {
    info->tops = report.tops;
    info->resolved.clear();
    for (std::size_t k : T) info->resolved.push_back(left_pos[k]);
  }
  return conc;
}

}  // namespace

std::vector<Conclusion> ordered_factors(const Clause& c, const Lpo& lpo) {
  return factors_impl(c, profile_clause(c, lpo), lpo);
}

std::optional<Conclusion> binary_resolvent(const Clause& main, std::size_t mi, const Clause& side,
                                           std::size_t si, const Lpo& lpo) {
  return binary_impl(main, profile_clause(main, lpo), mi, side, profile_clause(side, lpo), si, lpo);
}

std::vector<Conclusion> binary_resolvents(const Clause& main, const Clause& side, const Lpo& lpo) {
  ClauseProfile pm = profile_clause(main, lpo);
  ClauseProfile ps = profile_clause(side, lpo);
  std::vector<Conclusion> out;
  for (std::size_t mi : main_positions(main, pm)) {
    for (std::size_t si : side_positions(ps)) {
      if (auto c = binary_impl(main, pm, mi, side, ps, si, lpo)) out.push_back(std::move(*c));
    }
  }
  return out;
}

std::optional<Conclusion> res_top(const Clause& main, std::span<const Clause> sides,
                                  std::span<const std::size_t> side_pos, const Lpo& lpo,
                                  ResTopInfo* info) {
  std::vector<ClauseProfile> profiles;
  for (const Clause& s : sides) profiles.push_back(profile_clause(s, lpo));
  return res_top_impl(main, profile_clause(main, lpo), sides, profiles, side_pos, lpo, info);
}

std::optional<std::string> replay(const InferenceRecord& r, std::span<const Clause> premises) {
  if (r.rule == Rule::Input) return std::nullopt;
  if (premises.size() != r.premises.size() || r.offsets.size() != premises.size())
    return "premise count does not match the record";
  std::vector<Clause> shifted;
  for (std::size_t k = 0; k < premises.size(); ++k)
    shifted.push_back(r.unifier.apply(shift_vars(premises[k], r.offsets[k])));
  std::vector<Literal> lits;
  if (r.rule == Rule::OrderedFactoring) {
    if (r.main_literals.size() != 2) return "factoring record needs two positions";
    const Clause& c = shifted[0];
    std::size_t i = r.main_literals[0], j = r.main_literals[1];
    if (i >= c.size() || j >= c.size()) return "factoring position out of range";
    if (!c.literals[i].positive || c.literals[i] != c.literals[j])
      return "unifier does not identify the factored literals";
    lits = without(c, j).literals;
  } else {
    std::size_t n = premises.size() - 1;
    if (r.main_literals.size() != n || r.side_literals.size() != n)
      return "resolution record positions do not match the side premises";
    const Clause& m = shifted[0];
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t mi = r.main_literals[k], si = r.side_literals[k];
      if (mi >= m.size() || si >= shifted[k + 1].size()) return "resolution position out of range";
      const Literal& a = m.literals[mi];
      const Literal& b = shifted[k + 1].literals[si];
      if (!a.negative() || !b.positive || a.atom != b.atom)
        return "unifier does not identify the resolved atoms";
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!contains(r.main_literals, i)) lits.push_back(m.literals[i]);
    }
    for (std::size_t k = 0; k < n; ++k) {
      Clause rest = without(shifted[k + 1], r.side_literals[k]);
      lits.insert(lits.end(), rest.literals.begin(), rest.literals.end());
    }
  }
  Clause again = finish(std::move(lits));
  if (!is_variant(again, r.clause)) return "replayed conclusion differs from the recorded one";
  return std::nullopt;
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Unsatisfiable:
      return "Unsatisfiable";
    case VerdictKind::Satisfiable:
      return "Satisfiable";
    case VerdictKind::ResourceOut:
      return "ResourceOut";
    case VerdictKind::Aborted:
      return "Aborted";
  }
  return "?";
}

Saturator::Saturator(const Signature& sig, SaturationOptions opts)
    : sig_(sig), opts_(opts), prec_(sig), lpo_(prec_) {
  start_ = std::chrono::steady_clock::now();
}

void Saturator::refresh_precedence() {
  if (prec_.size() == sig_.size()) return;
  prec_ = Precedence(sig_);
  for (Info& info : clauses_) info.profile = profile_clause(info.clause, lpo_);
}

ClauseId Saturator::add_input(const Clause& c, std::string name) {
  refresh_precedence();
  Conclusion conc;
  conc.clause = finish(c.literals);
  conc.record.rule = Rule::Input;
  conc.record.clause = conc.clause;
  conc.record.source = std::move(name);
  std::size_t before = clauses_.size();
  keep(std::move(conc), {});
  return before < clauses_.size() ? static_cast<ClauseId>(before) : static_cast<ClauseId>(-1);
}

bool Saturator::keep(Conclusion c, std::vector<ClauseId> premise_ids) {
  InferenceRecord& r = c.record;
  r.premises = std::move(premise_ids);
  r.conclusion = static_cast<ClauseId>(-1);
  if (r.rule != Rule::Input) {
    ++stats_.generated;
    if (check_ && !abort_) {
      if (auto msg = check_(*this, r)) abort_ = *msg;
    }
  }
  if (is_tautology(c.clause)) {
    ++stats_.deleted_tautologies;
    return false;
  }
  std::string key = variant_key(c.clause);
  auto& bucket = variant_index_[key];
  for (ClauseId other : bucket) {
    if (is_variant(clauses_[other].clause, c.clause)) {
      ++stats_.deleted_variants;
      return false;
    }
  }
  if (opts_.forward_subsumption) {
    for (const Info& other : clauses_) {
      if ((other.active || other.passive) && subsumes(other.clause, c.clause)) {
        ++stats_.deleted_subsumed;
        return false;
      }
    }
  }
  ClauseId id = static_cast<ClauseId>(clauses_.size());
  Info info;
  info.clause = c.clause;
  info.profile = profile_clause(c.clause, lpo_);
  info.nvars = static_cast<VarId>(vars_of(c.clause).size());
  info.weight = symbol_count(c.clause);
  info.passive = true;
  bucket.push_back(id);
  r.conclusion = id;
  r.clause = c.clause;
  stats_.max_depth = std::max(stats_.max_depth, vdp(c.clause));
  ++stats_.kept;
  by_age_.insert({id, id});
  by_weight_.insert({info.weight, id});
  if (c.clause.empty() && !empty_) empty_ = id;
  clauses_.push_back(std::move(info));
  records_.push_back(std::move(r));
  return true;
}

void Saturator::activate(ClauseId id) {
  Info& info = clauses_[id];
  info.passive = false;
  info.active = true;
  by_age_.erase({id, id});
  by_weight_.erase({info.weight, id});
  for (std::size_t i : side_positions(info.profile))
    side_index_[info.clause.literals[i].atom.predicate].push_back({id, i});
  for (std::size_t i : main_positions(info.clause, info.profile))
    main_index_[info.clause.literals[i].atom.predicate].push_back({id, i});
  if (info.profile.selection == SelectionCase::TopVariables) {
    std::set<SymbolId> preds;
    for (std::size_t i : negative_positions(info.clause))
      preds.insert(info.clause.literals[i].atom.predicate);
    for (SymbolId p : preds) top_index_[p].push_back(id);
  }
}

bool Saturator::out_of_time() const {
  std::chrono::duration<double> d = std::chrono::steady_clock::now() - start_;
  return d.count() > opts_.max_seconds;
}

void Saturator::infer(ClauseId given) {
  const Clause g = clauses_[given].clause;
  const ClauseProfile gp = clauses_[given].profile;

  for (Conclusion& c : factors_impl(g, gp, lpo_)) {
    keep(std::move(c), {given});
    if (empty_) return;
  }

  for (std::size_t mi : main_positions(g, gp)) {
    const std::vector<Slot> slots = side_index_[g.literals[mi].atom.predicate];
    for (const Slot& s : slots) {
      const Clause side = clauses_[s.id].clause;
      const ClauseProfile sp = clauses_[s.id].profile;
      if (auto c = binary_impl(g, gp, mi, side, sp, s.pos, lpo_)) {
        keep(std::move(*c), {given, s.id});
        if (empty_) return;
      }
    }
  }

  for (std::size_t si : side_positions(gp)) {
    const std::vector<Slot> slots = main_index_[g.literals[si].atom.predicate];
    for (const Slot& s : slots) {
      if (s.id == given) continue;
      const Clause main = clauses_[s.id].clause;
      const ClauseProfile mp = clauses_[s.id].profile;
      if (auto c = binary_impl(main, mp, s.pos, g, gp, si, lpo_)) {
        keep(std::move(*c), {s.id, given});
        if (empty_) return;
      }
    }
  }

  if (gp.selection == SelectionCase::TopVariables) {
    res_top_as_main(given, given, std::nullopt);
    if (empty_) return;
  }
  std::set<ClauseId> mains;
  for (std::size_t si : side_positions(gp)) {
    auto it = top_index_.find(g.literals[si].atom.predicate);
    if (it != top_index_.end()) mains.insert(it->second.begin(), it->second.end());
  }
  for (ClauseId m : mains) {
    res_top_as_main(m, given, std::size_t{0});
    if (empty_ || abort_) return;
  }
}

void Saturator::res_top_as_main(ClauseId main_id, ClauseId given,
                                std::optional<std::size_t> given_from) {
  const Clause main = clauses_[main_id].clause;
  const ClauseProfile mp = clauses_[main_id].profile;
  std::vector<std::size_t> left = negative_positions(main);
  std::size_t n = left.size();
  bool need_given = given_from.has_value();

  std::vector<std::vector<Slot>> candidates(n);
  for (std::size_t k = 0; k < n; ++k) {
    auto it = side_index_.find(main.literals[left[k]].atom.predicate);
    if (it != side_index_.end()) candidates[k] = it->second;
    if (candidates[k].empty()) return;
  }
  // given_later[k]: the given clause is a candidate at some position >= k.
  std::vector<bool> given_later(n + 1, false);
  for (std::size_t k = n; k-- > 0;) {
    bool here = std::any_of(candidates[k].begin(), candidates[k].end(),
                            [&](const Slot& s) { return s.id == given; });
    given_later[k] = given_later[k + 1] || here;
  }

  std::vector<Slot> chosen;
  std::vector<Clause> sides;
  std::vector<ClauseProfile> profiles;
  std::vector<std::size_t> positions;

  std::function<void(std::size_t, VarId, const Unifier&, bool)> rec =
      [&](std::size_t k, VarId offset, const Unifier& u, bool used_given) {
        if (empty_ || abort_) return;
        if (need_given && !used_given && !given_later[k]) return;
        if (k == n) {
          ResTopInfo info;
          auto c = res_top_impl(main, mp, sides, profiles, positions, lpo_, &info);
          if (!c) return;
          ++stats_.res_top_steps;
          std::vector<ClauseId> ids{main_id};
          for (std::size_t p = 1; p < c->record.premises.size(); ++p)
            ids.push_back(chosen[c->record.premises[p] - 1].id);
          if (observer_) observer_(*this, main_id, info);
          keep(std::move(*c), std::move(ids));
          return;
        }
        for (const Slot& s : candidates[k]) {
          const Clause& side = clauses_[s.id].clause;
          Atom renamed = shift_vars(side.literals[s.pos].atom, offset);
          Unifier next = u;
          if (!next.unify(main.literals[left[k]].atom, renamed)) continue;
          chosen.push_back(s);
          sides.push_back(side);
          profiles.push_back(clauses_[s.id].profile);
          positions.push_back(s.pos);
          rec(k + 1, offset + var_bound(side), next, used_given || s.id == given);
          chosen.pop_back();
          sides.pop_back();
          profiles.pop_back();
          positions.pop_back();
        }
      };
  rec(0, var_bound(main), Unifier{}, false);
}

Verdict Saturator::run() {
  refresh_precedence();
  start_ = std::chrono::steady_clock::now();
  Verdict v;
  std::size_t tick = 0;
  const std::size_t cycle = std::max<std::size_t>(1, opts_.age_picks + opts_.weight_picks);
  while (!empty_ && !abort_) {
    if (by_age_.empty()) break;
    if (out_of_time()) {
      v.kind = VerdictKind::ResourceOut;
      v.reason = "time limit";
      break;
    }
    if (clauses_.size() > opts_.max_clauses) {
      v.kind = VerdictKind::ResourceOut;
      v.reason = "clause limit";
      break;
    }
    ClauseId given = (tick++ % cycle) < opts_.age_picks ? by_age_.begin()->second
                                                         : by_weight_.begin()->second;
    activate(given);
    ++stats_.given;
    infer(given);
  }
  if (empty_) {
    v.kind = VerdictKind::Unsatisfiable;
    v.reason.clear();
    v.proof = proof_of(*empty_);
  } else if (abort_) {
    v.kind = VerdictKind::Aborted;
    v.reason = *abort_;
  }
  std::chrono::duration<double> d = std::chrono::steady_clock::now() - start_;
  stats_.seconds = d.count();
  v.stats = stats_;
  return v;
}

std::vector<ClauseId> Saturator::active() const {
  std::vector<ClauseId> out;
  for (ClauseId i = 0; i < clauses_.size(); ++i) {
    if (clauses_[i].active) out.push_back(i);
  }
  return out;
}

std::vector<InferenceRecord> Saturator::proof_of(ClauseId id) const {
  std::set<ClauseId> seen;
  std::vector<ClauseId> stack{id};
  while (!stack.empty()) {
    ClauseId c = stack.back();
    stack.pop_back();
    if (!seen.insert(c).second) continue;
    for (ClauseId p : records_.at(c).premises) stack.push_back(p);
  }
  std::vector<InferenceRecord> out;
  for (ClauseId c : seen) out.push_back(records_[c]);
  return out;
}

std::optional<std::string> check_lgc_closure(const Saturator& sat, const InferenceRecord& r) {
  std::size_t bound = 0;
  for (ClauseId p : r.premises) bound = std::max(bound, vars_of(sat.clause(p)).size());
  std::string what;
  LgcCheck lgc = check_lgc(r.clause);
  if (!lgc.is_lgc()) {
    what = "conclusion is not a loosely guarded clause (" + lgc.reason + ")";
  } else if (vdp(r.clause) > 1) {
    what = "conclusion is not simple";
  } else if (vars_of(r.clause).size() > bound) {
    what = "conclusion has more variables than any premise";
  }
  if (what.empty()) return std::nullopt;
  std::string msg = what + ": " + render_clause(sat.signature(), r.clause) + " [" + to_string(r.rule);
  for (ClauseId p : r.premises) msg += " " + std::to_string(p);
  return msg + "]";
}

}  // namespace lgres
