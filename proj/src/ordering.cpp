#include "lgres/ordering.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace lgres {

Order flip(Order o) {
  switch (o) {
    case Order::Greater:
      return Order::Less;
    case Order::Less:
      return Order::Greater;
    default:
      return o;
  }
}

namespace {

int stratum(SymbolKind k) {
  switch (k) {
    case SymbolKind::Function:
      return 2;
    case SymbolKind::Constant:
      return 1;
    case SymbolKind::Predicate:
      return 0;
  }
  return 0;
}

}  // namespace

Precedence::Precedence(const Signature& sig) : rank_(sig.size()) {
  std::vector<SymbolId> order(sig.size());
  std::iota(order.begin(), order.end(), SymbolId{0});
  // Ascending precedence: lowest first.
  std::sort(order.begin(), order.end(), [&](SymbolId a, SymbolId b) {
    const Symbol& x = sig[a];
    const Symbol& y = sig[b];
    return std::make_tuple(stratum(x.kind), x.arity, y.name) <
           std::make_tuple(stratum(y.kind), y.arity, x.name);
  });
  for (std::size_t i = 0; i < order.size(); ++i) rank_[order[i]] = i;
}

// Uniform view of a term or an atom: a variable, or a head symbol with args.
struct Lpo::Node {
  bool is_var;
  VarId var;
  SymbolId head;
  std::span<const Term> args;

  static Node of(const Term& t) {
    if (t.is_var()) return {true, t.var_id(), 0, {}};
    return {false, 0, t.symbol(), t.args()};
  }
  static Node of(const Atom& a) { return {false, 0, a.predicate, a.args}; }
};

namespace {

bool occurs_var(VarId v, std::span<const Term> args) {
  return std::any_of(args.begin(), args.end(), [v](const Term& a) { return occurs_in(v, a); });
}

bool same(const Term& a, const Term& b) { return a == b; }

}  // namespace

bool Lpo::geq(const Term& s, const Node& t) const {
  Node sn = Node::of(s);
  if (t.is_var && sn.is_var) return sn.var == t.var;
  if (!t.is_var && !sn.is_var && sn.head == t.head && sn.args.size() == t.args.size() &&
      std::equal(sn.args.begin(), sn.args.end(), t.args.begin(), same))
    return true;
  return gt(sn, t);
}

bool Lpo::gt(const Node& s, const Node& t) const {
  if (s.is_var) return false;
  if (t.is_var) return occurs_var(t.var, s.args);
  // Subterm case.
  for (const Term& si : s.args) {
    if (geq(si, t)) return true;
  }
  auto dominates_args = [&] {
    return std::all_of(t.args.begin(), t.args.end(),
                       [&](const Term& tj) { return gt(s, Node::of(tj)); });
  };
  if (s.head != t.head) {
    return prec_->greater(s.head, t.head) && dominates_args();
  }
  // Same head: lexicographic on arguments.
  std::size_t n = std::min(s.args.size(), t.args.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (s.args[i] == t.args[i]) continue;
    return gt(Node::of(s.args[i]), Node::of(t.args[i])) && dominates_args();
  }
  return false;
}

bool Lpo::greater(const Term& s, const Term& t) const { return gt(Node::of(s), Node::of(t)); }
bool Lpo::greater(const Atom& s, const Atom& t) const { return gt(Node::of(s), Node::of(t)); }

Order Lpo::compare(const Term& s, const Term& t) const {
  if (s == t) return Order::Equal;
  if (greater(s, t)) return Order::Greater;
  if (greater(t, s)) return Order::Less;
  return Order::Incomparable;
}

Order Lpo::compare(const Atom& s, const Atom& t) const {
  if (s == t) return Order::Equal;
  if (greater(s, t)) return Order::Greater;
  if (greater(t, s)) return Order::Less;
  return Order::Incomparable;
}

Order Lpo::compare(const Literal& a, const Literal& b) const {
  Order atoms = compare(a.atom, b.atom);
  if (atoms != Order::Equal) return atoms;
  if (a.positive == b.positive) return Order::Equal;
  return a.negative() ? Order::Greater : Order::Less;
}

bool Lpo::is_maximal(std::size_t i, const Clause& c) const {
  for (std::size_t j = 0; j < c.literals.size(); ++j) {
    if (j != i && compare(c.literals[j], c.literals[i]) == Order::Greater) return false;
  }
  return true;
}

bool Lpo::is_strictly_maximal(std::size_t i, const Clause& c) const {
  for (std::size_t j = 0; j < c.literals.size(); ++j) {
    if (j == i) continue;
    Order o = compare(c.literals[j], c.literals[i]);
    if (o == Order::Greater || o == Order::Equal) return false;
  }
  return true;
}

bool Lpo::is_maximal_against(const Literal& l, const Clause& rest) const {
  return std::none_of(rest.literals.begin(), rest.literals.end(), [&](const Literal& o) {
    return compare(o, l) == Order::Greater;
  });
}

bool Lpo::is_strictly_maximal_against(const Literal& l, const Clause& rest) const {
  return std::none_of(rest.literals.begin(), rest.literals.end(), [&](const Literal& o) {
    Order r = compare(o, l);
    return r == Order::Greater || r == Order::Equal;
  });
}

}  // namespace lgres
