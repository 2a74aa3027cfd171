#include "lgres/term.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace lgres {

const Term* Substitution::lookup(VarId v) const {
  auto it = bindings_.find(v);
  return it == bindings_.end() ? nullptr : &it->second;
}

void Substitution::bind(VarId v, Term t) {
  if (t.is_var() && t.var_id() == v) {
    bindings_.erase(v);
    return;
  }
  bindings_.insert_or_assign(v, std::move(t));
}

Term Substitution::apply(const Term& t) const {
  switch (t.kind()) {
    case Term::Kind::Variable: {
      const Term* b = lookup(t.var_id());
      return b ? *b : t;
    }
    case Term::Kind::Constant:
      return t;
    case Term::Kind::Compound: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) args.push_back(apply(a));
      return Term::compound(t.symbol(), std::move(args));
    }
  }
  return t;
}

Atom Substitution::apply(const Atom& a) const {
  Atom out{a.predicate, {}};
  out.args.reserve(a.args.size());
  for (const Term& t : a.args) out.args.push_back(apply(t));
  return out;
}

Literal Substitution::apply(const Literal& l) const { return Literal{l.positive, apply(l.atom)}; }

Clause Substitution::apply(const Clause& c) const {
  Clause out;
  out.literals.reserve(c.literals.size());
  for (const Literal& l : c.literals) out.literals.push_back(apply(l));
  return out;
}

Substitution Substitution::restricted_to(const VarSet& vars) const {
  Substitution out;
  for (const auto& [v, t] : bindings_) {
    if (vars.count(v)) out.bindings_.emplace(v, t);
  }
  return out;
}

void collect_vars(const Term& t, VarSet& out) {
  if (t.is_var()) {
    out.insert(t.var_id());
    return;
  }
  for (const Term& a : t.args()) collect_vars(a, out);
}

void collect_vars(const Atom& a, VarSet& out) {
  for (const Term& t : a.args) collect_vars(t, out);
}

VarSet vars_of(const Term& t) {
  VarSet s;
  collect_vars(t, s);
  return s;
}

VarSet vars_of(const Atom& a) {
  VarSet s;
  collect_vars(a, s);
  return s;
}

VarSet vars_of(const Literal& l) { return vars_of(l.atom); }

VarSet vars_of(const Clause& c) {
  VarSet s;
  for (const Literal& l : c.literals) collect_vars(l.atom, s);
  return s;
}

VarSet vars_of(std::span<const Atom> atoms) {
  VarSet s;
  for (const Atom& a : atoms) collect_vars(a, s);
  return s;
}

bool is_ground(const Term& t) {
  if (t.is_var()) return false;
  return std::all_of(t.args().begin(), t.args().end(), [](const Term& a) { return is_ground(a); });
}

bool is_ground(const Atom& a) {
  return std::all_of(a.args.begin(), a.args.end(), [](const Term& t) { return is_ground(t); });
}

bool is_ground(const Literal& l) { return is_ground(l.atom); }

bool is_ground(const Clause& c) {
  return std::all_of(c.literals.begin(), c.literals.end(),
                     [](const Literal& l) { return is_ground(l); });
}

bool occurs_in(VarId v, const Term& t) {
  if (t.is_var()) return t.var_id() == v;
  return std::any_of(t.args().begin(), t.args().end(),
                     [v](const Term& a) { return occurs_in(v, a); });
}

int vdp(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      return 0;
    case Term::Kind::Constant:
      return -1;
    case Term::Kind::Compound: {
      int deepest = -1;
      for (const Term& a : t.args()) deepest = std::max(deepest, vdp(a));
      return deepest < 0 ? -1 : deepest + 1;
    }
  }
  return -1;
}

int vdp(const Atom& a) {
  int deepest = -1;
  for (const Term& t : a.args) deepest = std::max(deepest, vdp(t));
  return deepest;
}

int vdp(const Literal& l) { return vdp(l.atom); }

int vdp(const Clause& c) {
  int deepest = -1;
  for (const Literal& l : c.literals) deepest = std::max(deepest, vdp(l));
  return deepest;
}

bool is_flat(const Term& t) { return vdp(t) <= 0; }
bool is_flat(const Atom& a) { return vdp(a) <= 0; }
bool is_flat(const Literal& l) { return vdp(l) <= 0; }
bool is_flat(const Clause& c) { return vdp(c) <= 0; }
bool is_simple(const Term& t) { return vdp(t) <= 1; }
bool is_simple(const Atom& a) { return vdp(a) <= 1; }
bool is_simple(const Literal& l) { return vdp(l) <= 1; }
bool is_simple(const Clause& c) { return vdp(c) <= 1; }

bool is_nonground_compound(const Atom& a) {
  return std::any_of(a.args.begin(), a.args.end(), [](const Term& t) { return vdp(t) >= 1; });
}

bool is_nonground_compound(const Literal& l) { return is_nonground_compound(l.atom); }

bool has_compound_term(const Atom& a) {
  return std::any_of(a.args.begin(), a.args.end(),
                     [](const Term& t) { return t.is_compound(); });
}

namespace {

bool subterms_cover(const Term& t, const VarSet& vars) {
  if (!t.is_compound() || is_ground(t)) return true;
  if (vars_of(t) != vars) return false;
  return std::all_of(t.args().begin(), t.args().end(),
                     [&](const Term& a) { return subterms_cover(a, vars); });
}

bool argument_covers(const Term& t, const VarSet& required) {
  if (t.is_var() || is_ground(t)) return true;
  VarSet tv = vars_of(t);
  return tv == required && subterms_cover(t, tv);
}

}  // namespace

bool is_weakly_covering_term(const Term& t) {
  return t.is_compound() && subterms_cover(t, vars_of(t));
}

bool is_weakly_covering(const Literal& l) {
  VarSet lv = vars_of(l);
  return std::all_of(l.atom.args.begin(), l.atom.args.end(),
                     [&](const Term& t) { return argument_covers(t, lv); });
}

bool is_weakly_covering(const Clause& c) {
  VarSet cv = vars_of(c);
  for (const Literal& l : c.literals) {
    for (const Term& t : l.atom.args) {
      if (!argument_covers(t, cv)) return false;
    }
  }
  return true;
}

VarSet chained_variables(std::span<const Literal> lits) {
  std::vector<VarSet> sets;
  sets.reserve(lits.size());
  for (const Literal& l : lits) {
    if (!is_flat(l)) throw std::invalid_argument("chained_variables: literal is not flat");
    sets.push_back(vars_of(l));
  }
  VarSet chained;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      const VarSet& a = sets[i];
      const VarSet& b = sets[j];
      bool a_in_b = std::includes(b.begin(), b.end(), a.begin(), a.end());
      bool b_in_a = std::includes(a.begin(), a.end(), b.begin(), b.end());
      if (a_in_b || b_in_a) continue;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::inserter(chained, chained.end()));
    }
  }
  return chained;
}

bool is_horn(const Clause& c) {
  return std::count_if(c.literals.begin(), c.literals.end(),
                       [](const Literal& l) { return l.positive; }) <= 1;
}

bool is_query_clause(const Clause& c) {
  return std::all_of(c.literals.begin(), c.literals.end(), [](const Literal& l) {
    return l.negative() && vdp(l.atom) <= 0;
  });
}

std::size_t symbol_count(const Term& t) {
  std::size_t n = 1;
  for (const Term& a : t.args()) n += symbol_count(a);
  return n;
}

std::size_t symbol_count(const Clause& c) {
  std::size_t n = 0;
  for (const Literal& l : c.literals) {
    ++n;
    for (const Term& t : l.atom.args) n += symbol_count(t);
  }
  return n;
}

VarId var_bound(const Clause& c) {
  VarSet vs = vars_of(c);
  return vs.empty() ? 0 : *vs.rbegin() + 1;
}

Term shift_vars(const Term& t, VarId offset) {
  if (offset == 0) return t;
  switch (t.kind()) {
    case Term::Kind::Variable:
      return Term::var(t.var_id() + offset);
    case Term::Kind::Constant:
      return t;
    case Term::Kind::Compound: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) args.push_back(shift_vars(a, offset));
      return Term::compound(t.symbol(), std::move(args));
    }
  }
  return t;
}

Atom shift_vars(const Atom& a, VarId offset) {
  Atom out{a.predicate, {}};
  out.args.reserve(a.args.size());
  for (const Term& t : a.args) out.args.push_back(shift_vars(t, offset));
  return out;
}

Clause shift_vars(const Clause& c, VarId offset) {
  Clause out;
  out.literals.reserve(c.literals.size());
  for (const Literal& l : c.literals) out.literals.push_back({l.positive, shift_vars(l.atom, offset)});
  return out;
}

namespace {

Term renumber(const Term& t, std::unordered_map<VarId, VarId>& map) {
  switch (t.kind()) {
    case Term::Kind::Variable: {
      auto [it, inserted] = map.try_emplace(t.var_id(), static_cast<VarId>(map.size()));
      return Term::var(it->second);
    }
    case Term::Kind::Constant:
      return t;
    case Term::Kind::Compound: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) args.push_back(renumber(a, map));
      return Term::compound(t.symbol(), std::move(args));
    }
  }
  return t;
}

}  // namespace

Clause normalize_variables(const Clause& c) {
  std::unordered_map<VarId, VarId> map;
  Clause out;
  out.literals.reserve(c.literals.size());
  for (const Literal& l : c.literals) {
    Atom a{l.atom.predicate, {}};
    a.args.reserve(l.atom.args.size());
    for (const Term& t : l.atom.args) a.args.push_back(renumber(t, map));
    out.literals.push_back({l.positive, std::move(a)});
  }
  return out;
}

}  // namespace lgres
