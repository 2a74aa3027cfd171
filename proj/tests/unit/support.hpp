#pragma once

#include <random>
#include <string>

#include "lgres/io.hpp"
#include "lgres/term.hpp"

namespace lgres::test {

inline Clause cl(Signature& sig, const std::string& text) { return parse_clause(text, sig); }

inline Literal lit(Signature& sig, const std::string& text) {
  return parse_clause(text, sig).literals.at(0);
}

inline Atom atom(Signature& sig, const std::string& text) { return lit(sig, text).atom; }

inline Term term(Signature& sig, const std::string& text) {
  return atom(sig, "t_(" + text + ")").args.at(0);
}

/// Random terms over a fixed small signature, for property tests.
struct TermGen {
  Signature& sig;
  std::mt19937 rng;
  SymbolId a, b, f, g, h;
  unsigned nvars = 3;

  explicit TermGen(Signature& s, unsigned seed = 7)
      : sig(s),
        rng(seed),
        a(s.intern("a", SymbolKind::Constant, 0)),
        b(s.intern("b", SymbolKind::Constant, 0)),
        f(s.intern("f", SymbolKind::Function, 2)),
        g(s.intern("g", SymbolKind::Function, 1)),
        h(s.intern("h", SymbolKind::Function, 2)) {}

  unsigned pick(unsigned n) { return std::uniform_int_distribution<unsigned>(0, n - 1)(rng); }

  Term make(int depth, bool ground = false) {
    unsigned k = pick(depth <= 0 ? 2 : 5);
    if (k == 0 && !ground) return Term::var(pick(nvars));
    if (k <= 1) return Term::constant(pick(2) ? a : b);
    if (k == 2) return Term::compound(g, {make(depth - 1, ground)});
    SymbolId head = k == 3 ? f : h;
    return Term::compound(head, {make(depth - 1, ground), make(depth - 1, ground)});
  }
};

}  // namespace lgres::test
