#include "lgres/clausify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "lgres/clause_ops.hpp"

namespace lgres {

namespace {

using Kind = Formula::Kind;

// Flattened children of an n-ary node of the given kind.
std::vector<FormulaPtr> operands(const FormulaPtr& f, Kind k) {
  if (f->kind() == k) return f->children();
  return {f};
}

// Merges directly nested quantifiers of the same kind.
std::pair<std::vector<VarId>, FormulaPtr> quantifier_block(const FormulaPtr& f) {
  std::vector<VarId> vars;
  FormulaPtr body = f;
  Kind k = f->kind();
  while (body->kind() == k) {
    for (VarId v : body->bound()) {
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    }
    body = body->child();
  }
  return {vars, body};
}

// Guard conditions for a quantifier block over `bound` with candidate guard
// atoms and the remaining subformula's free variables.
bool guard_conditions_hold(const std::vector<VarId>& bound, const std::vector<Atom>& guards,
                           const VarSet& rest_free) {
  VarSet guard_vars = vars_of(std::span<const Atom>(guards));
  if (!std::includes(guard_vars.begin(), guard_vars.end(), rest_free.begin(), rest_free.end()))
    return false;
  std::vector<VarSet> per_guard;
  for (const Atom& g : guards) per_guard.push_back(vars_of(g));
  for (VarId x : bound) {
    for (VarId y : guard_vars) {
      if (x == y) continue;
      bool co = std::any_of(per_guard.begin(), per_guard.end(),
                            [&](const VarSet& g) { return g.count(x) && g.count(y); });
      if (!co) return false;
    }
  }
  return true;
}

LgfMembership check_nnf(const FormulaPtr& f) {
  switch (f->kind()) {
    case Kind::True:
    case Kind::False:
    case Kind::Atom:
      return {};
    case Kind::Not:
      if (f->child()->kind() == Kind::Atom) return {};
      return check_nnf(f->child());
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::Iff:
      for (const auto& c : f->children()) {
        LgfMembership m = check_nnf(c);
        if (!m.in_lgf) return m;
      }
      return {};
    case Kind::Forall:
    case Kind::Exists:
      break;
  }
  bool universal = f->kind() == Kind::Forall;
  auto [bound, body] = quantifier_block(f);
  // Universal bodies are read as ~G1 | ... | ~Gn | F, existential ones as
  // G1 & ... & Gn & F.
  std::vector<FormulaPtr> parts = operands(body, universal ? Kind::Or : Kind::And);
  std::vector<std::size_t> candidates;
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Formula& p = *parts[i];
    bool guard_shape = universal ? (p.kind() == Kind::Not && p.child()->kind() == Kind::Atom)
                                 : p.kind() == Kind::Atom;
    (guard_shape ? candidates : others).push_back(i);
    if (!guard_shape) {
      LgfMembership m = check_nnf(parts[i]);
      if (!m.in_lgf) return m;
    }
  }
  auto guard_atom = [&](std::size_t i) -> const Atom& {
    return universal ? parts[i]->child()->atom_value() : parts[i]->atom_value();
  };
  // Try candidate guard subsets, largest first.
  std::size_t n = candidates.size();
  if (n > 16) n = 16;
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m < (1u << n); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return __builtin_popcount(a) > __builtin_popcount(b);
  });
  for (std::uint32_t mask : masks) {
    std::vector<Atom> guards;
    VarSet rest_free;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (k < n && (mask >> k & 1u)) {
        guards.push_back(guard_atom(candidates[k]));
      } else {
        VarSet fv = free_vars(*parts[candidates[k]]);
        rest_free.insert(fv.begin(), fv.end());
      }
    }
    for (std::size_t i : others) {
      VarSet fv = free_vars(*parts[i]);
      rest_free.insert(fv.begin(), fv.end());
    }
    if (guard_conditions_hold(bound, guards, rest_free)) return {};
  }
  LgfMembership out;
  out.in_lgf = false;
  out.witness = f;
  out.reason = candidates.empty()
                   ? "quantified subformula has no guard atom"
                   : "no choice of guards covers the free variables and co-occurrences";
  return out;
}

// --- negation normal form ------------------------------------------------

FormulaPtr nnf_of(const FormulaPtr& f, bool positive);

FormulaPtr flat_nary(Kind k, std::vector<FormulaPtr> parts) {
  std::vector<FormulaPtr> out;
  for (auto& p : parts) {
    if (p->kind() == k) {
      for (const auto& c : p->children()) out.push_back(c);
    } else if ((k == Kind::And && p->kind() == Kind::True) ||
               (k == Kind::Or && p->kind() == Kind::False)) {
      continue;
    } else if ((k == Kind::And && p->kind() == Kind::False) ||
               (k == Kind::Or && p->kind() == Kind::True)) {
      return p;
    } else {
      out.push_back(p);
    }
  }
  return k == Kind::And ? Formula::conjunction(std::move(out))
                        : Formula::disjunction(std::move(out));
}

FormulaPtr nnf_of(const FormulaPtr& f, bool positive) {
  switch (f->kind()) {
    case Kind::True:
      return positive ? Formula::truth() : Formula::falsity();
    case Kind::False:
      return positive ? Formula::falsity() : Formula::truth();
    case Kind::Atom:
      return positive ? f : Formula::negation(f);
    case Kind::Not:
      return nnf_of(f->child(), !positive);
    case Kind::And:
    case Kind::Or: {
      std::vector<FormulaPtr> parts;
      for (const auto& c : f->children()) parts.push_back(nnf_of(c, positive));
      bool conj = (f->kind() == Kind::And) == positive;
      return flat_nary(conj ? Kind::And : Kind::Or, std::move(parts));
    }
    case Kind::Implies: {
      // a -> b  ==  ~a | b
      std::vector<FormulaPtr> parts{nnf_of(f->child(0), !positive), nnf_of(f->child(1), positive)};
      return flat_nary(positive ? Kind::Or : Kind::And, std::move(parts));
    }
    case Kind::Iff: {
      const FormulaPtr& a = f->child(0);
      const FormulaPtr& b = f->child(1);
      if (positive) {
        return flat_nary(Kind::And,
                         {flat_nary(Kind::Or, {nnf_of(a, false), nnf_of(b, true)}),
                          flat_nary(Kind::Or, {nnf_of(a, true), nnf_of(b, false)})});
      }
      return flat_nary(Kind::Or, {flat_nary(Kind::And, {nnf_of(a, true), nnf_of(b, false)}),
                                  flat_nary(Kind::And, {nnf_of(a, false), nnf_of(b, true)})});
    }
    case Kind::Forall:
    case Kind::Exists: {
      bool universal = (f->kind() == Kind::Forall) == positive;
      FormulaPtr body = nnf_of(f->child(), positive);
      return universal ? Formula::forall(f->bound(), body) : Formula::exists(f->bound(), body);
    }
  }
  return f;
}

// --- structural transformation ------------------------------------------

void free_in_order(const Formula& f, std::vector<VarId>& bound, std::vector<VarId>& out) {
  switch (f.kind()) {
    case Kind::Atom: {
      std::function<void(const Term&)> walk = [&](const Term& t) {
        if (t.is_var()) {
          VarId v = t.var_id();
          if (std::find(bound.begin(), bound.end(), v) == bound.end() &&
              std::find(out.begin(), out.end(), v) == out.end())
            out.push_back(v);
        }
        for (const Term& a : t.args()) walk(a);
      };
      for (const Term& t : f.atom_value().args) walk(t);
      return;
    }
    case Kind::Forall:
    case Kind::Exists: {
      std::size_t mark = bound.size();
      bound.insert(bound.end(), f.bound().begin(), f.bound().end());
      free_in_order(*f.child(), bound, out);
      bound.resize(mark);
      return;
    }
    default:
      for (const auto& c : f.children()) free_in_order(*c, bound, out);
  }
}

class Namer {
 public:
  explicit Namer(Signature& sig) : sig_(sig) {}

  FormulaPtr run(const FormulaPtr& f, bool top_level) {
    switch (f->kind()) {
      case Kind::And: {
        std::vector<FormulaPtr> parts;
        for (const auto& c : f->children()) parts.push_back(run(c, top_level));
        return Formula::conjunction(std::move(parts));
      }
      case Kind::Or: {
        std::vector<FormulaPtr> parts;
        for (const auto& c : f->children()) parts.push_back(run(c, false));
        return Formula::disjunction(std::move(parts));
      }
      case Kind::Not:
        return Formula::negation(run(f->child(), false));
      case Kind::Exists:
        return Formula::exists(f->bound(), run(f->child(), false));
      case Kind::Forall: {
        FormulaPtr named = Formula::forall(f->bound(), run(f->child(), false));
        if (top_level) return named;
        std::vector<VarId> args, bound;
        free_in_order(*named, bound, args);
        Atom def{sig_.fresh_definition(static_cast<unsigned>(args.size())), {}};
        for (VarId v : args) def.args.push_back(Term::var(v));
        definitions_.push_back(Formula::forall(
            args, Formula::disjunction({Formula::negation(Formula::atom(def)), named})));
        return Formula::atom(def);
      }
      default:
        return f;
    }
  }

  std::vector<FormulaPtr> definitions_;

 private:
  Signature& sig_;
};

// --- prenex --------------------------------------------------------------

Term rename_term(const Term& t, const std::map<VarId, VarId>& m) {
  if (t.is_var()) {
    auto it = m.find(t.var_id());
    return it == m.end() ? t : Term::var(it->second);
  }
  if (t.is_constant()) return t;
  std::vector<Term> args;
  for (const Term& a : t.args()) args.push_back(rename_term(a, m));
  return Term::compound(t.symbol(), std::move(args));
}

FormulaPtr map_atoms(const FormulaPtr& f, const std::function<Atom(const Atom&)>& fn) {
  switch (f->kind()) {
    case Kind::True:
    case Kind::False:
      return f;
    case Kind::Atom:
      return Formula::atom(fn(f->atom_value()));
    default: {
      std::vector<FormulaPtr> cs;
      for (const auto& c : f->children()) cs.push_back(map_atoms(c, fn));
      return std::make_shared<const Formula>(f->kind(), Atom{}, std::move(cs), f->bound());
    }
  }
}

FormulaPtr rename_bound(const FormulaPtr& f, std::map<VarId, VarId> scope, VarTable& vars) {
  switch (f->kind()) {
    case Kind::True:
    case Kind::False:
      return f;
    case Kind::Atom: {
      Atom a{f->atom_value().predicate, {}};
      for (const Term& t : f->atom_value().args) a.args.push_back(rename_term(t, scope));
      return Formula::atom(std::move(a));
    }
    case Kind::Forall:
    case Kind::Exists: {
      std::vector<VarId> fresh;
      for (VarId v : f->bound()) {
        VarId nv = vars.fresh();
        scope[v] = nv;
        fresh.push_back(nv);
      }
      FormulaPtr body = rename_bound(f->child(), scope, vars);
      return f->kind() == Kind::Forall ? Formula::forall(fresh, body)
                                       : Formula::exists(fresh, body);
    }
    default: {
      std::vector<FormulaPtr> cs;
      for (const auto& c : f->children()) cs.push_back(rename_bound(c, scope, vars));
      return std::make_shared<const Formula>(f->kind(), Atom{}, std::move(cs), f->bound());
    }
  }
}

struct QuantEntry {
  bool universal;
  VarId var;
};

struct Prefixed {
  std::vector<QuantEntry> prefix;
  FormulaPtr matrix;
};

Prefixed pull(const FormulaPtr& f) {
  switch (f->kind()) {
    case Kind::Forall:
    case Kind::Exists: {
      Prefixed inner = pull(f->child());
      VarSet used = free_vars(*inner.matrix);
      for (const auto& q : inner.prefix) used.insert(q.var);
      std::vector<QuantEntry> prefix;
      for (VarId v : f->bound()) {
        // Vacuous quantifiers are dropped.
        if (used.count(v)) prefix.push_back({f->kind() == Kind::Forall, v});
      }
      prefix.insert(prefix.end(), inner.prefix.begin(), inner.prefix.end());
      return {std::move(prefix), inner.matrix};
    }
    case Kind::And:
    case Kind::Or: {
      std::vector<Prefixed> parts;
      for (const auto& c : f->children()) parts.push_back(pull(c));
      std::vector<std::size_t> pos(parts.size(), 0);
      std::vector<QuantEntry> prefix;
      for (;;) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
          while (pos[i] < parts[i].prefix.size() && !parts[i].prefix[pos[i]].universal)
            prefix.push_back(parts[i].prefix[pos[i]++]);
        }
        auto it = std::find_if(parts.begin(), parts.end(), [&](const Prefixed& p) {
          return pos[static_cast<std::size_t>(&p - parts.data())] < p.prefix.size();
        });
        if (it == parts.end()) break;
        std::size_t i = static_cast<std::size_t>(it - parts.begin());
        while (pos[i] < parts[i].prefix.size() && parts[i].prefix[pos[i]].universal)
          prefix.push_back(parts[i].prefix[pos[i]++]);
      }
      std::vector<FormulaPtr> matrices;
      for (auto& p : parts) matrices.push_back(p.matrix);
      FormulaPtr m = f->kind() == Kind::And ? Formula::conjunction(std::move(matrices))
                                            : Formula::disjunction(std::move(matrices));
      return {std::move(prefix), m};
    }
    default:
      return {{}, f};
  }
}

FormulaPtr wrap(const std::vector<QuantEntry>& prefix, FormulaPtr matrix) {
  for (auto it = prefix.rbegin(); it != prefix.rend();) {
    bool universal = it->universal;
    std::vector<VarId> block;
    while (it != prefix.rend() && it->universal == universal) {
      block.insert(block.begin(), it->var);
      ++it;
    }
    matrix = universal ? Formula::forall(std::move(block), matrix)
                       : Formula::exists(std::move(block), matrix);
  }
  return matrix;
}

std::vector<QuantEntry> flatten_prefix(FormulaPtr& f) {
  std::vector<QuantEntry> prefix;
  while (f->is_quantifier()) {
    for (VarId v : f->bound()) prefix.push_back({f->kind() == Kind::Forall, v});
    f = f->child();
  }
  return prefix;
}

// --- CNF -------------------------------------------------------------------

using LitList = std::vector<Literal>;

std::vector<LitList> cnf_of(const FormulaPtr& f) {
  switch (f->kind()) {
    case Kind::True:
      return {};
    case Kind::False:
      return {LitList{}};
    case Kind::Atom:
      return {LitList{Literal{true, f->atom_value()}}};
    case Kind::Not:
      if (f->child()->kind() == Kind::Atom) return {LitList{Literal{false, f->child()->atom_value()}}};
      throw ClausifyError("cnf: formula is not in negation normal form");
    case Kind::And: {
      std::vector<LitList> out;
      for (const auto& c : f->children()) {
        auto part = cnf_of(c);
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    }
    case Kind::Or: {
      std::vector<LitList> acc{LitList{}};
      for (const auto& c : f->children()) {
        auto part = cnf_of(c);
        std::vector<LitList> next;
        for (const auto& a : acc) {
          for (const auto& b : part) {
            LitList merged = a;
            merged.insert(merged.end(), b.begin(), b.end());
            next.push_back(std::move(merged));
          }
        }
        acc = std::move(next);
      }
      return acc;
    }
    case Kind::Forall:
      return cnf_of(f->child());
    default:
      throw ClausifyError("cnf: unexpected connective (input must be Skolemized NNF)");
  }
}

}  // namespace

LgfMembership check_lgf(const FormulaPtr& f) {
  if (has_function_symbols(*f))
    throw ClausifyError("function symbols are not allowed in loosely guarded formulas");
  return check_nnf(nnf(f));
}

FormulaPtr close_free(const FormulaPtr& f) {
  VarSet free = free_vars(*f);
  if (free.empty()) return f;
  return Formula::exists(std::vector<VarId>(free.begin(), free.end()), f);
}

FormulaPtr nnf(const FormulaPtr& f) { return nnf_of(f, true); }

FormulaPtr structural_transform(const FormulaPtr& f, Signature& sig) {
  Namer namer(sig);
  FormulaPtr main = namer.run(f, true);
  if (namer.definitions_.empty()) return main;
  std::vector<FormulaPtr> parts = operands(main, Kind::And);
  parts.insert(parts.end(), namer.definitions_.begin(), namer.definitions_.end());
  return Formula::conjunction(std::move(parts));
}

FormulaPtr prenex(const FormulaPtr& f, VarTable& vars) {
  std::vector<FormulaPtr> out;
  for (const FormulaPtr& conjunct : operands(f, Kind::And)) {
    Prefixed p = pull(rename_bound(conjunct, {}, vars));
    out.push_back(wrap(p.prefix, p.matrix));
  }
  return Formula::conjunction(std::move(out));
}

FormulaPtr outer_skolemize(const FormulaPtr& f, Signature& sig) {
  std::vector<FormulaPtr> out;
  for (FormulaPtr conjunct : operands(f, Kind::And)) {
    std::vector<QuantEntry> prefix = flatten_prefix(conjunct);
    std::vector<VarId> universals;
    Substitution sk;
    for (const QuantEntry& q : prefix) {
      if (q.universal) {
        universals.push_back(q.var);
        continue;
      }
      SymbolId s = sig.fresh_skolem(static_cast<unsigned>(universals.size()));
      if (universals.empty()) {
        sk.bind(q.var, Term::constant(s));
      } else {
        std::vector<Term> args;
        for (VarId u : universals) args.push_back(Term::var(u));
        sk.bind(q.var, Term::compound(s, std::move(args)));
      }
    }
    FormulaPtr matrix = map_atoms(conjunct, [&](const Atom& a) { return sk.apply(a); });
    out.push_back(Formula::forall(universals, matrix));
  }
  return Formula::conjunction(std::move(out));
}

std::vector<Clause> cnf(const FormulaPtr& f) {
  std::vector<Clause> out;
  for (LitList& lits : cnf_of(f)) {
    Clause c;
    for (Literal& l : lits) {
      if (std::find(c.literals.begin(), c.literals.end(), l) == c.literals.end())
        c.literals.push_back(std::move(l));
    }
    if (is_tautology(c)) continue;
    out.push_back(normalize_variables(c));
  }
  return out;
}

ClausifyTrace lgf_trans_traced(const FormulaPtr& f, Signature& sig, VarTable& vars) {
  LgfMembership m = check_lgf(f);
  if (!m.in_lgf) throw ClausifyError("formula is not loosely guarded: " + m.reason);
  ClausifyTrace t;
  t.closed = close_free(f);
  t.negation_normal = nnf(t.closed);
  t.structural = structural_transform(t.negation_normal, sig);
  t.prenex = prenex(t.structural, vars);
  t.skolemized = outer_skolemize(t.prenex, sig);
  t.clauses = cnf(t.skolemized);
  return t;
}

std::vector<Clause> lgf_trans(const FormulaPtr& f, Signature& sig, VarTable& vars) {
  return lgf_trans_traced(f, sig, vars).clauses;
}

std::vector<NamedClause> clausify_problem(Problem& p) {
  std::vector<NamedClause> out;
  for (const NamedFormula& f : p.formulas) {
    std::vector<Clause> cs = lgf_trans(f.formula, p.signature, p.variables);
    for (std::size_t k = 0; k < cs.size(); ++k)
      out.push_back({f.name + "." + std::to_string(k + 1), std::move(cs[k])});
  }
  for (const NamedClause& c : p.clauses) out.push_back(c);
  for (const NamedFact& f : p.facts) out.push_back({f.name, Clause{{Literal{true, f.atom}}}});
  return out;
}

}  // namespace lgres
