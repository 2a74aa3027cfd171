#include <functional>

#include "doctest.h"
#include "support.hpp"

using namespace lgres;
using namespace lgres::test;

TEST_CASE("vdp") {
  Signature sig;
  CHECK(vdp(term(sig, "a")) == -1);
  CHECK(vdp(term(sig, "X")) == 0);
  CHECK(vdp(term(sig, "f(X,g(Y))")) == 2);
  CHECK(vdp(term(sig, "f(a,g(b))")) == -1);
  CHECK(vdp(term(sig, "f(a,g(X))")) == 2);
}

TEST_CASE("vdp agrees with structural recursion") {
  Signature sig;
  TermGen gen(sig);
  std::function<int(const Term&)> ref = [&](const Term& t) -> int {
    if (t.is_var()) return 0;
    int best = -1;
    for (const Term& s : t.args()) best = std::max(best, ref(s));
    return best < 0 ? -1 : best + 1;
  };
  for (int i = 0; i < 2000; ++i) {
    Term t = gen.make(4);
    CHECK(vdp(t) == ref(t));
    CHECK((vdp(t) == -1) == is_ground(t));
  }
}

TEST_CASE("flat and simple") {
  Signature sig;
  Literal l1 = lit(sig, "a_(X,a)");
  CHECK(is_flat(l1));
  CHECK(is_simple(l1));
  Literal l2 = lit(sig, "p(f(X,Y,Z),Y)");
  CHECK_FALSE(is_flat(l2));
  CHECK(is_simple(l2));
  CHECK_FALSE(is_simple(lit(sig, "b1(g(h(X,Y)),Z)")));
  // Ground compound terms are flat.
  CHECK(is_flat(lit(sig, "p(g(a),X)")));
}

TEST_CASE("flat implies simple") {
  Signature sig;
  TermGen gen(sig, 11);
  for (int i = 0; i < 2000; ++i) {
    Term t = gen.make(3);
    if (is_flat(t)) CHECK(is_simple(t));
  }
}

TEST_CASE("weak covering") {
  Signature s1, s2, s3;
  CHECK(is_weakly_covering(cl(s1, "~a1(f(X,Y,Z,a),X,Y,g(a)) | a2(X,Y,Z)")));
  CHECK_FALSE(is_weakly_covering(cl(s2, "~a1(g(Y),Y,g(a)) | a2(h(X,Y))")));
  CHECK(is_weakly_covering(cl(s3, "p(f(a)) | ~q(b)")));
}

TEST_CASE("chained variables") {
  Signature sig;
  Clause c1 = cl(sig, "~a1(X,Y) | ~a2(Y,Z)");
  CHECK(chained_variables(c1.literals) == VarSet{1});
  Clause c2 = cl(sig, "~a(X,Y)");
  CHECK(chained_variables(c2.literals).empty());
  Clause c3 = cl(sig, "~a1(X,Y) | ~a2(Y,Z) | ~a3(X,Z)");
  CHECK(chained_variables(c3.literals) == VarSet{0, 1, 2});
  Clause deep = cl(sig, "~a1(f(X),Y)");
  CHECK_THROWS_AS(chained_variables(deep.literals), std::invalid_argument);
}

TEST_CASE("substitution application") {
  Signature sig;
  Atom a = atom(sig, "a1(X,Y)");
  Substitution s;
  Term h = shift_vars(term(sig, "h(U,V)"), 5);
  s.bind(0, h);
  Atom got = s.apply(a);
  CHECK(got.args[0] == h);
  CHECK(got.args[1] == Term::var(1));
  CHECK(Substitution{}.apply(a) == a);
  Substitution self;
  self.bind(0, Term::var(0));
  CHECK(self.empty());
}

TEST_CASE("horn and query clauses") {
  Signature sig;
  CHECK(is_horn(cl(sig, "a1(f(X,Y),X) | ~g1(X,Y)")));
  CHECK_FALSE(is_horn(cl(sig, "p(X) | q(X) | ~r(X)")));
  CHECK(is_query_clause(cl(sig, "~a1(X,Y) | ~a2(Y,Z)")));
  CHECK_FALSE(is_query_clause(cl(sig, "~a(k(X))")));
  CHECK(is_query_clause(cl(sig, "~a(k(b)) | ~a(X)")));
  CHECK_FALSE(is_query_clause(cl(sig, "~a(X) | b(X)")));
}

TEST_CASE("normalization and shifting") {
  Signature sig;
  Clause c = cl(sig, "p(Y,X) | q(X)");
  Clause shifted = shift_vars(c, 10);
  CHECK(var_bound(shifted) == 12);
  CHECK(normalize_variables(shifted) == normalize_variables(c));
  Clause n = normalize_variables(shifted);
  CHECK(normalize_variables(n) == n);
  CHECK(symbol_count(cl(sig, "p(f(X,a),Y)")) == 5);
}
