#include "lgres/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lgres/clause_ops.hpp"
#include "lgres/unify.hpp"

namespace lgres {

namespace {

std::size_t tuple_index(const std::vector<std::size_t>& args, std::size_t n) {
  std::size_t idx = 0;
  for (std::size_t a : args) idx = idx * n + a;
  return idx;
}

std::size_t power(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= n;
  return r;
}

struct SymbolUse {
  std::map<SymbolId, std::size_t> constants;  // value unused
  std::map<SymbolId, std::size_t> functions;  // arity
  std::map<SymbolId, std::size_t> predicates;  // arity
};

void collect_term(const Term& t, SymbolUse& u) {
  if (t.is_constant()) u.constants[t.symbol()] = 0;
  if (t.is_compound()) {
    u.functions[t.symbol()] = t.args().size();
    for (const Term& a : t.args()) collect_term(a, u);
  }
}

SymbolUse collect_symbols(std::span<const Clause> clauses) {
  SymbolUse u;
  for (const Clause& c : clauses) {
    for (const Literal& l : c.literals) {
      u.predicates[l.atom.predicate] = l.atom.args.size();
      for (const Term& t : l.atom.args) collect_term(t, u);
    }
  }
  return u;
}

int ground_depth(const Term& t) {
  int d = 0;
  for (const Term& a : t.args()) d = std::max(d, 1 + ground_depth(a));
  return d;
}

int ground_depth(const Atom& a) {
  int d = 0;
  for (const Term& t : a.args) d = std::max(d, ground_depth(t));
  return d;
}

// --- a small DPLL solver with two watched literals -------------------------

class Dpll {
 public:
  explicit Dpll(std::size_t nvars) : vals_(nvars, -1), watches_(2 * nvars) {}

  static int lit(std::size_t var, bool positive) { return static_cast<int>(2 * var + (positive ? 0 : 1)); }

  void add_clause(std::vector<int> c) {
    if (unsat_) return;
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      if ((c[i] ^ 1) == c[i + 1]) return;  // tautology
    }
    if (c.empty()) {
      unsat_ = true;
      return;
    }
    if (c.size() == 1) {
      units_.push_back(c[0]);
      return;
    }
    std::size_t id = clauses_.size();
    watches_[c[0]].push_back(id);
    watches_[c[1]].push_back(id);
    clauses_.push_back(std::move(c));
  }

  /// 1 satisfiable, 0 unsatisfiable, -1 budget exhausted.
  int solve(std::size_t budget) {
    if (unsat_) return 0;
    for (int u : units_) {
      int v = value(u);
      if (v == 0) return 0;
      if (v == -1) assign(u);
    }
    if (!propagate()) return 0;
    std::size_t decisions = 0;
    std::size_t next_var = 0;
    for (;;) {
      while (next_var < vals_.size() && vals_[next_var] != -1) ++next_var;
      if (next_var == vals_.size()) return 1;
      if (++decisions > budget) return -1;
      levels_.push_back({trail_.size(), false});
      assign(lit(next_var, false));
      while (!propagate()) {
        if (!backtrack()) return 0;
        next_var = 0;
      }
    }
  }

  bool value_of(std::size_t var) const { return vals_[var] == 1; }

 private:
  struct Level {
    std::size_t start;
    bool flipped;
  };

  int value(int l) const {
    int v = vals_[static_cast<std::size_t>(l >> 1)];
    if (v == -1) return -1;
    return (l & 1) ? 1 - v : v;
  }

  void assign(int l) {
    vals_[static_cast<std::size_t>(l >> 1)] = (l & 1) ? 0 : 1;
    trail_.push_back(l);
  }

  bool propagate() {
    while (qhead_ < trail_.size()) {
      int falselit = trail_[qhead_++] ^ 1;
      auto& ws = watches_[static_cast<std::size_t>(falselit)];
      std::size_t i = 0, j = 0;
      bool ok = true;
      for (; i < ws.size(); ++i) {
        std::size_t ci = ws[i];
        auto& c = clauses_[ci];
        if (c[0] == falselit) std::swap(c[0], c[1]);
        if (value(c[0]) == 1) {
          ws[j++] = ci;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.size(); ++k) {
          if (value(c[k]) != 0) {
            std::swap(c[1], c[k]);
            watches_[static_cast<std::size_t>(c[1])].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = ci;
        if (value(c[0]) == 0) {
          ok = false;
          ++i;
          break;
        }
        assign(c[0]);
      }
      for (; i < ws.size(); ++i) ws[j++] = ws[i];
      ws.resize(j);
      if (!ok) return false;
    }
    return true;
  }

  void undo_to(std::size_t start) {
    while (trail_.size() > start) {
      vals_[static_cast<std::size_t>(trail_.back() >> 1)] = -1;
      trail_.pop_back();
    }
    qhead_ = std::min(qhead_, start);
  }

  bool backtrack() {
    while (!levels_.empty()) {
      Level l = levels_.back();
      levels_.pop_back();
      int decision = trail_[l.start];
      undo_to(l.start);
      if (!l.flipped) {
        levels_.push_back({trail_.size(), true});
        assign(decision ^ 1);
        return true;
      }
    }
    return false;
  }

  std::vector<int> vals_;
  std::vector<std::vector<std::size_t>> watches_;
  std::vector<std::vector<int>> clauses_;
  std::vector<int> units_;
  std::vector<int> trail_;
  std::vector<Level> levels_;
  std::size_t qhead_ = 0;
  bool unsat_ = false;
};

// --- flattening for the model search ---------------------------------------

struct FlatLit {
  enum class Kind { Pred, Func, Const } kind;
  bool positive;
  SymbolId symbol;
  std::vector<std::size_t> args;  // flat variable indices
  std::size_t result = 0;         // Func / Const: the value variable
};

struct FlatClause {
  std::size_t nvars = 0;
  std::vector<FlatLit> lits;
};

FlatClause flatten(const Clause& c) {
  Clause n = normalize_variables(c);
  FlatClause out;
  out.nvars = vars_of(n).size();
  std::map<Term, std::size_t> memo;
  std::function<std::size_t(const Term&)> flat = [&](const Term& t) -> std::size_t {
    if (t.is_var()) return t.var_id();
    auto it = memo.find(t);
    if (it != memo.end()) return it->second;
    FlatLit eq;
    eq.positive = false;
    eq.symbol = t.symbol();
    if (t.is_constant()) {
      eq.kind = FlatLit::Kind::Const;
    } else {
      eq.kind = FlatLit::Kind::Func;
      for (const Term& a : t.args()) eq.args.push_back(flat(a));
    }
    eq.result = out.nvars++;
    memo.emplace(t, eq.result);
    out.lits.push_back(eq);
    return eq.result;
  };
  for (const Literal& l : n.literals) {
    FlatLit p;
    p.kind = FlatLit::Kind::Pred;
    p.positive = l.positive;
    p.symbol = l.atom.predicate;
    for (const Term& t : l.atom.args) p.args.push_back(flat(t));
    out.lits.push_back(std::move(p));
  }
  return out;
}

struct Encoding {
  std::size_t n = 1;
  std::size_t next = 0;
  std::map<SymbolId, std::size_t> pred_base, func_base, const_base;
  std::map<SymbolId, std::size_t> arity;

  std::size_t pred_var(SymbolId p, const std::vector<std::size_t>& args) const {
    return pred_base.at(p) + tuple_index(args, n);
  }
  std::size_t func_var(SymbolId f, const std::vector<std::size_t>& args, std::size_t value) const {
    return func_base.at(f) + tuple_index(args, n) * n + value;
  }
  std::size_t const_var(SymbolId c, std::size_t value) const { return const_base.at(c) + value; }
};

std::optional<Model> search_size(std::span<const Clause> clauses, const SymbolUse& use,
                                 const std::vector<FlatClause>& flat, std::size_t n,
                                 std::size_t budget, bool& exhausted) {
  Encoding e;
  e.n = n;
  // The solver branches in variable order: constants and function tables
  // first, so predicate values mostly follow by propagation.
  for (auto [c, unused] : use.constants) {
    e.const_base[c] = e.next;
    e.next += n;
  }
  for (auto [f, k] : use.functions) {
    e.func_base[f] = e.next;
    e.next += power(n, k) * n;
    e.arity[f] = k;
  }
  for (auto [p, k] : use.predicates) {
    e.pred_base[p] = e.next;
    e.next += power(n, k);
    e.arity[p] = k;
  }
  Dpll solver(e.next);
  auto exactly_one = [&](std::size_t base) {
    std::vector<int> some;
    for (std::size_t v = 0; v < n; ++v) some.push_back(Dpll::lit(base + v, true));
    solver.add_clause(some);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b)
        solver.add_clause({Dpll::lit(base + a, false), Dpll::lit(base + b, false)});
    }
  };
  for (auto [f, k] : use.functions) {
    for (std::size_t row = 0; row < power(n, k); ++row) exactly_one(e.func_base[f] + row * n);
  }
  for (auto [c, unused] : use.constants) exactly_one(e.const_base[c]);

  for (const FlatClause& fc : flat) {
    std::vector<std::size_t> env(fc.nvars, 0);
    std::size_t total = power(n, fc.nvars);
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t rest = code;
      for (std::size_t v = 0; v < fc.nvars; ++v) {
        env[v] = rest % n;
        rest /= n;
      }
      std::vector<int> prop;
      for (const FlatLit& l : fc.lits) {
        std::vector<std::size_t> args;
        for (std::size_t a : l.args) args.push_back(env[a]);
        switch (l.kind) {
          case FlatLit::Kind::Pred:
            prop.push_back(Dpll::lit(e.pred_var(l.symbol, args), l.positive));
            break;
          case FlatLit::Kind::Func:
            prop.push_back(Dpll::lit(e.func_var(l.symbol, args, env[l.result]), false));
            break;
          case FlatLit::Kind::Const:
            prop.push_back(Dpll::lit(e.const_var(l.symbol, env[l.result]), false));
            break;
        }
      }
      solver.add_clause(std::move(prop));
    }
  }
  int r = solver.solve(budget);
  if (r == -1) exhausted = true;
  if (r != 1) return std::nullopt;

  Model m;
  m.size = n;
  for (auto [p, k] : use.predicates) {
    std::vector<bool> table(power(n, k));
    for (std::size_t i = 0; i < table.size(); ++i) table[i] = solver.value_of(e.pred_base[p] + i);
    m.predicates[p] = std::move(table);
  }
  for (auto [f, k] : use.functions) {
    std::vector<std::size_t> table(power(n, k));
    for (std::size_t row = 0; row < table.size(); ++row) {
      for (std::size_t v = 0; v < n; ++v) {
        if (solver.value_of(e.func_base[f] + row * n + v)) table[row] = v;
      }
    }
    m.functions[f] = std::move(table);
  }
  for (auto [c, unused] : use.constants) {
    for (std::size_t v = 0; v < n; ++v) {
      if (solver.value_of(e.const_base[c] + v)) m.constants[c] = v;
    }
  }
  if (!satisfies(m, clauses)) throw std::logic_error("model search produced a non-model");
  return m;
}

}  // namespace

std::size_t Model::eval(const Term& t, const std::vector<std::size_t>& env) const {
  if (t.is_var()) return env.at(t.var_id());
  if (t.is_constant()) return constants.at(t.symbol());
  std::vector<std::size_t> args;
  for (const Term& a : t.args()) args.push_back(eval(a, env));
  return functions.at(t.symbol()).at(tuple_index(args, size));
}

bool Model::holds(const Atom& a, const std::vector<std::size_t>& env) const {
  std::vector<std::size_t> args;
  for (const Term& t : a.args) args.push_back(eval(t, env));
  return predicates.at(a.predicate).at(tuple_index(args, size));
}

bool satisfies(const Model& m, std::span<const Clause> clauses) {
  for (const Clause& c : clauses) {
    VarId k = var_bound(c);
    std::vector<std::size_t> env(k, 0);
    std::size_t total = power(m.size, k);
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t rest = code;
      for (VarId v = 0; v < k; ++v) {
        env[v] = rest % m.size;
        rest /= m.size;
      }
      bool sat = std::any_of(c.literals.begin(), c.literals.end(), [&](const Literal& l) {
        return m.holds(l.atom, env) == l.positive;
      });
      if (!sat) return false;
    }
  }
  return true;
}

std::string render_model(const Signature& sig, const Model& m) {
  std::ostringstream os;
  os << "domain size " << m.size << "\n";
  for (auto [c, v] : m.constants) os << "  " << sig[c].name << " = " << v << "\n";
  auto tuple = [&](std::size_t idx, std::size_t k) {
    std::vector<std::size_t> args(k);
    for (std::size_t i = k; i-- > 0;) {
      args[i] = idx % m.size;
      idx /= m.size;
    }
    std::string s = "(";
    for (std::size_t i = 0; i < k; ++i) s += (i ? "," : "") + std::to_string(args[i]);
    return s + ")";
  };
  for (const auto& [f, table] : m.functions) {
    for (std::size_t i = 0; i < table.size(); ++i)
      os << "  " << sig[f].name << tuple(i, sig[f].arity) << " = " << table[i] << "\n";
  }
  for (const auto& [p, table] : m.predicates) {
    os << "  " << sig[p].name << ":";
    bool any = false;
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (!table[i]) continue;
      os << " " << (sig[p].arity ? tuple(i, sig[p].arity) : std::string("true"));
      any = true;
    }
    if (!any) os << " none";
    os << "\n";
  }
  return os.str();
}

std::string to_string(OracleKind k) {
  switch (k) {
    case OracleKind::ConfirmedEntailed:
      return "ConfirmedEntailed";
    case OracleKind::ConfirmedNotEntailed:
      return "ConfirmedNotEntailed";
    case OracleKind::ConfirmedUnsat:
      return "ConfirmedUnsat";
    case OracleKind::ConfirmedSat:
      return "ConfirmedSat";
    case OracleKind::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

OracleVerdict forward_chain(std::span<const Clause> horn, unsigned depth_bound,
                            std::size_t atom_budget) {
  for (const Clause& c : horn) {
    if (!is_horn(c)) throw std::invalid_argument("forward_chain: input is not Horn");
  }
  SymbolUse use = collect_symbols(horn);

  // Herbrand universe up to the depth bound, built only when some clause
  // has a variable that its body does not bind.
  std::vector<Term> universe;
  bool universe_built = false;
  auto build_universe = [&]() {
    universe_built = true;
    std::set<Term> level;
    for (auto [c, unused] : use.constants) level.insert(Term::constant(c));
    if (level.empty()) level.insert(Term::constant(static_cast<SymbolId>(-1)));
    std::set<Term> all = level;
    for (unsigned d = 1; d <= depth_bound; ++d) {
      std::vector<Term> current(all.begin(), all.end());
      for (auto [f, k] : use.functions) {
        std::vector<std::size_t> idx(k, 0);
        std::size_t total = power(current.size(), k);
        if (total > atom_budget) break;
        for (std::size_t code = 0; code < total; ++code) {
          std::size_t rest = code;
          std::vector<Term> args;
          for (std::size_t i = 0; i < k; ++i) {
            args.push_back(current[rest % current.size()]);
            rest /= current.size();
          }
          all.insert(Term::compound(f, std::move(args)));
        }
      }
    }
    universe.assign(all.begin(), all.end());
  };

  std::map<SymbolId, std::vector<Atom>> facts;
  std::set<Atom> known;
  OracleVerdict out;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Clause& c : horn) {
      std::vector<Atom> body;
      std::optional<Atom> head;
      for (const Literal& l : c.literals) {
        if (l.positive) {
          head = l.atom;
        } else {
          body.push_back(l.atom);
        }
      }
      VarSet head_vars = head ? vars_of(*head) : VarSet{};
      VarSet body_vars = vars_of(std::span<const Atom>(body));
      std::vector<VarId> free;
      std::set_difference(head_vars.begin(), head_vars.end(), body_vars.begin(), body_vars.end(),
                          std::back_inserter(free));
      if (!free.empty() && !universe_built) build_universe();

      std::vector<Atom> produced;
      bool goal = false;
      std::function<void(std::size_t, const Substitution&)> join = [&](std::size_t i,
                                                                       const Substitution& s) {
        if (goal) return;
        if (i == body.size()) {
          if (!head) {
            goal = true;
            return;
          }
          std::function<void(std::size_t, Substitution)> spread = [&](std::size_t k,
                                                                      Substitution t) {
            if (k == free.size()) {
              produced.push_back(t.apply(*head));
              return;
            }
            for (const Term& u : universe) {
              Substitution next = t;
              next.bind(free[k], u);
              spread(k + 1, next);
            }
          };
          spread(0, s);
          return;
        }
        Atom pattern = s.apply(body[i]);
        auto it = facts.find(pattern.predicate);
        if (it == facts.end()) return;
        for (std::size_t f = 0; f < it->second.size(); ++f) {
          auto m = match(pattern, it->second[f]);
          if (!m) continue;
          Substitution next = s;
          for (const auto& [v, t] : m->bindings()) next.bind(v, t);
          join(i + 1, next);
        }
      };
      join(0, Substitution{});
      if (goal) {
        out.kind = OracleKind::ConfirmedEntailed;
        out.detail = "goal derived";
        out.steps = known.size();
        return out;
      }
      for (Atom& a : produced) {
        if (ground_depth(a) > static_cast<int>(depth_bound)) continue;
        if (known.insert(a).second) {
          facts[a.predicate].push_back(a);
          changed = true;
          if (known.size() > atom_budget) {
            out.detail = "atom budget exhausted";
            out.steps = known.size();
            return out;
          }
        }
      }
    }
  }
  out.detail = "fixpoint reached without the goal at depth " + std::to_string(depth_bound);
  out.steps = known.size();
  return out;
}

OracleVerdict finite_model_search(std::span<const Clause> clauses, unsigned max_domain,
                                  std::size_t decision_budget) {
  SymbolUse use = collect_symbols(clauses);
  std::vector<FlatClause> flat;
  for (const Clause& c : clauses) flat.push_back(flatten(c));
  OracleVerdict out;
  bool exhausted = false;
  for (unsigned n = 1; n <= max_domain; ++n) {
    if (auto m = search_size(clauses, use, flat, n, decision_budget, exhausted)) {
      out.kind = OracleKind::ConfirmedSat;
      out.model = std::move(*m);
      out.steps = n;
      out.detail = "model of size " + std::to_string(n);
      return out;
    }
  }
  out.detail = exhausted ? "decision budget exhausted"
                         : "no model up to size " + std::to_string(max_domain);
  return out;
}

OracleVerdict naive_resolution(std::span<const Clause> input, std::size_t step_bound) {
  // Conclusions larger than this are dropped; that only costs completeness.
  constexpr std::size_t kMaxSymbols = 80;
  std::vector<Clause> kept;
  // Bit per (predicate, polarity); a subsuming clause's bits are a subset.
  std::vector<std::uint64_t> masks;
  auto mask_of = [](const Clause& c) {
    std::uint64_t m = 0;
    for (const Literal& l : c.literals) m |= std::uint64_t{1} << ((l.atom.predicate * 2 + l.positive) % 64);
    return m;
  };
  OracleVerdict out;
  bool refuted = false;

  auto add = [&](Clause c) {
    std::vector<Literal> lits;
    for (Literal& l : c.literals) {
      if (std::find(lits.begin(), lits.end(), l) == lits.end()) lits.push_back(std::move(l));
    }
    c = normalize_variables(Clause{std::move(lits)});
    if (is_tautology(c) || symbol_count(c) > kMaxSymbols) return;
    std::uint64_t m = mask_of(c);
    for (std::size_t i = 0; i < kept.size(); ++i) {
      if ((masks[i] & ~m) == 0 && subsumes(kept[i], c)) return;
    }
    if (c.empty()) refuted = true;
    kept.push_back(std::move(c));
    masks.push_back(m);
  };
  for (const Clause& c : input) {
    add(c);
    if (refuted) break;
  }

  for (std::size_t given = 0; given < kept.size() && !refuted; ++given) {
    const Clause g = kept[given];
    for (std::size_t i = 0; i < g.size() && !refuted; ++i) {
      for (std::size_t j = i + 1; j < g.size() && !refuted; ++j) {
        const Literal& a = g.literals[i];
        const Literal& b = g.literals[j];
        if (a.positive != b.positive || a.atom.predicate != b.atom.predicate) continue;
        if (++out.steps > step_bound) break;
        if (auto s = mgu(a.atom, b.atom)) {
          Clause f;
          for (std::size_t k = 0; k < g.size(); ++k) {
            if (k != j) f.literals.push_back(s->apply(g.literals[k]));
          }
          add(std::move(f));
        }
      }
    }
    for (std::size_t other = 0; other <= given && !refuted; ++other) {
      const Clause o = shift_vars(kept[other], var_bound(g));
      for (std::size_t i = 0; i < g.size() && !refuted; ++i) {
        for (std::size_t j = 0; j < o.size() && !refuted; ++j) {
          const Literal& a = g.literals[i];
          const Literal& b = o.literals[j];
          if (a.positive == b.positive || a.atom.predicate != b.atom.predicate) continue;
          if (++out.steps > step_bound) {
            out.detail = "step bound reached";
            return out;
          }
          auto s = mgu(a.atom, b.atom);
          if (!s) continue;
          Clause r;
          for (std::size_t k = 0; k < g.size(); ++k) {
            if (k != i) r.literals.push_back(s->apply(g.literals[k]));
          }
          for (std::size_t k = 0; k < o.size(); ++k) {
            if (k != j) r.literals.push_back(s->apply(o.literals[k]));
          }
          add(std::move(r));
        }
      }
    }
    if (out.steps > step_bound) break;
  }
  if (refuted) {
    out.kind = OracleKind::ConfirmedUnsat;
    out.detail = "empty clause derived";
  } else if (out.detail.empty()) {
    out.detail = out.steps > step_bound ? "step bound reached" : "saturated without the empty clause";
  }
  return out;
}

}  // namespace lgres
