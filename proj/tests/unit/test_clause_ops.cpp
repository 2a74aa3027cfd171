#include "doctest.h"
#include "lgres/clause_ops.hpp"
#include "support.hpp"

using namespace lgres;
using namespace lgres::test;

namespace {

Clause random_clause(TermGen& gen, SymbolId p, SymbolId q) {
  Clause c;
  unsigned n = 1 + gen.pick(4);
  for (unsigned i = 0; i < n; ++i) {
    Literal l;
    l.positive = gen.pick(2);
    if (gen.pick(2)) {
      l.atom = Atom{p, {gen.make(1), gen.make(1)}};
    } else {
      l.atom = Atom{q, {gen.make(1)}};
    }
    c.literals.push_back(l);
  }
  return c;
}

}  // namespace

TEST_CASE("matching") {
  Signature sig;
  auto m = match(atom(sig, "p(X,f(Y))"), atom(sig, "p(a,f(b))"));
  REQUIRE(m);
  CHECK(m->bindings().size() == 2);
  CHECK_FALSE(match(atom(sig, "p(X,X)"), atom(sig, "p(a,b)")));
  CHECK_FALSE(match(atom(sig, "p(a,X)"), atom(sig, "p(X,a)")));
}

TEST_CASE("condensation") {
  Signature sig;
  CHECK(condense(cl(sig, "a(X) | a(Y)")).size() == 1);
  CHECK(condense(cl(sig, "a(X) | b(Y)")).size() == 2);
  CHECK(condense(cl(sig, "a2(X,a) | a2(b,Y)")).size() == 2);
  CHECK(condense(cl(sig, "p(X) | p(X)")).size() == 1);
  CHECK(condense(cl(sig, "p2(X,Y) | p2(X,a)")).size() == 1);
  CHECK(condense(cl(sig, "p2(X,Y) | p2(X,a) | q(Y)")).size() == 3);
}

TEST_CASE("condensation is idempotent and equivalent") {
  Signature sig;
  TermGen gen(sig, 3);
  SymbolId p = sig.intern("p", SymbolKind::Predicate, 2);
  SymbolId q = sig.intern("q", SymbolKind::Predicate, 1);
  for (int i = 0; i < 1000; ++i) {
    Clause c = random_clause(gen, p, q);
    Clause d = condense(c);
    CHECK(d.size() <= c.size());
    CHECK(is_variant(condense(d), d));
    CHECK(subsumes(c, d));
    CHECK(subsumes(d, c));
  }
}

TEST_CASE("variants and tautologies") {
  Signature sig;
  CHECK(is_variant(cl(sig, "a(X,Y)"), cl(sig, "a(U,V)")));
  CHECK_FALSE(is_variant(cl(sig, "a(X,Y)"), cl(sig, "a(Y,Y)")));
  CHECK(is_variant(cl(sig, "p(X) | ~q(X,Y)"), cl(sig, "~q(U,V) | p(U)")));
  CHECK(is_tautology(cl(sig, "t(X) | ~t(X)")));
  CHECK_FALSE(is_tautology(cl(sig, "t(X) | ~t(Y)")));
}

TEST_CASE("variant keys are renaming invariant") {
  Signature sig;
  TermGen gen(sig, 5);
  SymbolId p = sig.intern("p", SymbolKind::Predicate, 2);
  SymbolId q = sig.intern("q", SymbolKind::Predicate, 1);
  for (int i = 0; i < 1000; ++i) {
    Clause c = random_clause(gen, p, q);
    Clause d = shift_vars(c, 7);
    std::reverse(d.literals.begin(), d.literals.end());
    CHECK(variant_key(c) == variant_key(d));
    CHECK(is_variant(c, d));
  }
}

TEST_CASE("loosely guarded clause recognition") {
  Signature sig;
  Clause ex = cl(sig, "~q1(X,Y) | ~r(X,Z) | ~r(Z,Y) | p(f(X,Y,Z),Y)");
  LgcCheck r = check_lgc(ex);
  CHECK(r.verdict == LgcCheck::Verdict::Guarded);
  CHECK(r.guards == std::vector<std::size_t>{0, 1, 2});
  CHECK(check_lgc(cl(sig, "r(a,b)")).verdict == LgcCheck::Verdict::Ground);
  CHECK(check_lgc(cl(sig, "~a1(g(Y),Y,g(a)) | a2(h(X,Y))")).verdict ==
        LgcCheck::Verdict::NotLgc);
  // x and z never share a guard.
  CHECK_FALSE(is_lgc(cl(sig, "~r(X,Y) | ~r(Y,Z) | r(X,Z)")));
  // A positive flat literal cannot guard.
  CHECK_FALSE(is_lgc(cl(sig, "w(X)")));
  CHECK(is_lgc(cl(sig, "~g(X) | w(X)")));
  CHECK(is_lgc(cl(sig, "$false")));
}

TEST_CASE("weakly covering loosely guarded clauses share variables across compound terms") {
  Signature sig;
  TermGen gen(sig, 9);
  SymbolId p = sig.intern("p", SymbolKind::Predicate, 2);
  SymbolId q = sig.intern("q", SymbolKind::Predicate, 1);
  int seen = 0;
  for (int i = 0; i < 5000; ++i) {
    Clause c = random_clause(gen, p, q);
    if (!is_lgc(c) || is_ground(c) || !is_weakly_covering(c)) continue;
    ++seen;
    VarSet all = vars_of(c);
    for (const Literal& l : c.literals) {
      if (!is_nonground_compound(l)) continue;
      CHECK(vars_of(l) == all);
      for (const Term& t : l.atom.args) {
        if (t.is_compound() && !is_ground(t)) CHECK(vars_of(t) == all);
      }
    }
  }
  CHECK(seen > 20);
}
