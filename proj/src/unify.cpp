#include "lgres/unify.hpp"

#include <vector>

namespace lgres {

const Term* Unifier::binding(VarId v) const {
  auto it = bindings_.find(v);
  return it == bindings_.end() ? nullptr : &it->second;
}

Term Unifier::resolve(const Term& t) const {
  if (t.is_var()) {
    const Term* b = binding(t.var_id());
    return b ? resolve(*b) : t;
  }
  if (t.is_constant()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(resolve(a));
  return Term::compound(t.symbol(), std::move(args));
}

bool Unifier::occurs(VarId v, const Term& t) const {
  if (t.is_var()) {
    if (t.var_id() == v) return true;
    const Term* b = binding(t.var_id());
    return b && occurs(v, *b);
  }
  for (const Term& a : t.args()) {
    if (occurs(v, a)) return true;
  }
  return false;
}

bool Unifier::unify(const Term& a, const Term& b) {
  std::vector<std::pair<Term, Term>> todo{{a, b}};
  while (!todo.empty()) {
    auto [s, t] = std::move(todo.back());
    todo.pop_back();
    while (s.is_var() && binding(s.var_id())) s = *binding(s.var_id());
    while (t.is_var() && binding(t.var_id())) t = *binding(t.var_id());
    if (s.is_var() && t.is_var() && s.var_id() == t.var_id()) continue;
    if (s.is_var()) {
      if (occurs(s.var_id(), t)) return false;
      bindings_.emplace(s.var_id(), t);
      continue;
    }
    if (t.is_var()) {
      if (occurs(t.var_id(), s)) return false;
      bindings_.emplace(t.var_id(), s);
      continue;
    }
    if (s.kind() != t.kind() || s.symbol() != t.symbol() || s.args().size() != t.args().size())
      return false;
    for (std::size_t i = 0; i < s.args().size(); ++i) todo.emplace_back(s.args()[i], t.args()[i]);
  }
  return true;
}

bool Unifier::unify(const Atom& a, const Atom& b) {
  if (a.predicate != b.predicate) return false;
  if (a.args.size() != b.args.size())
    throw UnificationError("arity mismatch for predicate " + std::to_string(a.predicate));
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!unify(a.args[i], b.args[i])) return false;
  }
  return true;
}

Substitution Unifier::substitution() const {
  Substitution out;
  for (const auto& [v, t] : bindings_) out.bind(v, resolve(t));
  return out;
}

std::optional<Substitution> mgu(const Term& a, const Term& b) {
  Unifier u;
  if (!u.unify(a, b)) return std::nullopt;
  return u.substitution();
}

std::optional<Substitution> mgu(const Atom& a, const Atom& b) {
  Unifier u;
  if (!u.unify(a, b)) return std::nullopt;
  return u.substitution();
}

std::optional<Substitution> simultaneous_mgu(std::span<const AtomPair> pairs) {
  Unifier u;
  for (const auto& [l, r] : pairs) {
    if (!u.unify(l, r)) return std::nullopt;
  }
  return u.substitution();
}

}  // namespace lgres
