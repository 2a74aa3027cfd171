#pragma once

#include <vector>

#include "lgres/signature.hpp"
#include "lgres/term.hpp"

namespace lgres {

enum class Order { Greater, Less, Equal, Incomparable };

Order flip(Order o);

/// Total precedence on the non-variable symbols of a signature, stratified so
/// that every function symbol is above every constant, which is above every
/// predicate symbol. Inside a stratum: higher arity first, then name in
/// ascending lexicographic order (so `f` is above `g`).
class Precedence {
 public:
  explicit Precedence(const Signature& sig);

  /// Larger rank means higher precedence.
  std::size_t rank(SymbolId s) const { return rank_.at(s); }
  bool greater(SymbolId a, SymbolId b) const { return rank(a) > rank(b); }
  /// Number of symbols ranked.
  std::size_t size() const { return rank_.size(); }

 private:
  std::vector<std::size_t> rank_;
};

/// Lexicographic path ordering. Atoms are compared as terms headed by their
/// predicate symbol.
class Lpo {
 public:
  explicit Lpo(const Precedence& prec) : prec_(&prec) {}

  bool greater(const Term& s, const Term& t) const;
  bool greater(const Atom& s, const Atom& t) const;
  Order compare(const Term& s, const Term& t) const;
  Order compare(const Atom& s, const Atom& t) const;

  /// Literals compare by atom; identical atoms are broken by polarity with
  /// the negative literal larger.
  Order compare(const Literal& a, const Literal& b) const;

  /// No other literal of `c` is strictly greater than `c.literals[i]`.
  bool is_maximal(std::size_t i, const Clause& c) const;
  /// No other literal occurrence of `c` is greater than or equal to it.
  bool is_strictly_maximal(std::size_t i, const Clause& c) const;

  /// Maximality of a literal against a clause it is not part of.
  bool is_maximal_against(const Literal& l, const Clause& rest) const;
  bool is_strictly_maximal_against(const Literal& l, const Clause& rest) const;

  const Precedence& precedence() const { return *prec_; }

 private:
  struct Node;
  bool gt(const Node& s, const Node& t) const;
  bool geq(const Term& s, const Node& t) const;

  const Precedence* prec_;
};

}  // namespace lgres
