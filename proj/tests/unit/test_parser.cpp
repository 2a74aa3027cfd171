#include <random>

#include "doctest.h"
#include "lgres/clause_ops.hpp"
#include "support.hpp"

using namespace lgres;
using namespace lgres::test;

TEST_CASE("facts") {
  Problem p = parse_problem("fact f1: r(a,b).");
  REQUIRE(p.facts.size() == 1);
  CHECK(p.facts[0].name == "f1");
  CHECK(is_ground(p.facts[0].atom));
  CHECK(render_atom(p.signature, p.facts[0].atom) == "r(a,b)");
  CHECK_THROWS_AS(parse_problem("fact f: r(X,b)."), ParseError);
}

TEST_CASE("formulas") {
  Problem p = parse_problem(
      "% chained example\n"
      "formula g1: exists [Y] (r(X,Y) & q(Y) & forall [Z] ((r(X,Z) & r(Z,Y)) -> exists [X1] "
      "p(X1,Y))).");
  REQUIRE(p.formulas.size() == 1);
  const Formula& f = *p.formulas[0].formula;
  CHECK(f.kind() == Formula::Kind::Exists);
  CHECK(free_vars(f).size() == 1);
  CHECK(render_formula(p.signature, p.variables, f).find("forall [Z]") != std::string::npos);
}

TEST_CASE("queries") {
  Problem p = parse_problem("query q1: exists [X,Y,Z] (a1(X,Y) & a2(Y,Z)).");
  REQUIRE(p.queries.size() == 1);
  CHECK(p.queries[0].vars.size() == 3);
  CHECK(p.queries[0].atoms.size() == 2);
  CHECK_THROWS_AS(parse_problem("query q: exists [X] a(f(X))."), ParseError);
  CHECK_THROWS_AS(parse_problem("query q: exists [X] (a(X) | b(X))."), ParseError);
}

TEST_CASE("clauses and rendering") {
  Signature sig;
  CHECK(render_clause(sig, Clause{}) == "$false");
  CHECK(parse_clause("$false", sig).empty());
  CHECK(render_clause(sig, cl(sig, "~a(U,V)")) == "~a(X,Y)");
  Clause ex = cl(sig, "~q1(X,Y) | ~r(X,Z) | ~r(Z,Y) | p(sk1(X,Y,Z),Y)");
  CHECK(render_clause(sig, ex) == "~q1(X,Y) | ~r(X,Z) | ~r(Z,Y) | p(sk1(X,Y,Z),Y)");
}

TEST_CASE("errors carry positions") {
  try {
    parse_problem("fact f1: r(a,b).\nformula g: p(X) & .");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 1);
  }
  CHECK_THROWS_AS(parse_problem("fact f1: r(a,b). fact f2: r(a)."), ParseError);
  CHECK_THROWS_AS(parse_problem("lemma l: p(a)."), ParseError);
  CHECK_THROWS_AS(parse_problem("fact f1: r(a,b)"), ParseError);
}

TEST_CASE("signature consistency") {
  Problem p = parse_problem(
      "fact f1: r(a,b).\n"
      "formula g: forall [X,Y] (r(X,Y) -> q(Y)).\n"
      "query q1: exists [X] q(X).");
  for (const Symbol& s : p.signature.symbols()) {
    auto id = p.signature.find(s.name, s.kind);
    REQUIRE(id);
    CHECK(p.signature[*id].arity == s.arity);
  }
}

TEST_CASE("parse and render round trip") {
  Signature sig;
  TermGen gen(sig, 61);
  SymbolId p = sig.intern("p", SymbolKind::Predicate, 2);
  SymbolId q = sig.intern("q", SymbolKind::Predicate, 1);
  for (int i = 0; i < 1000; ++i) {
    Clause c;
    unsigned n = 1 + gen.pick(4);
    for (unsigned k = 0; k < n; ++k) {
      Literal l;
      l.positive = gen.pick(2);
      l.atom = gen.pick(2) ? Atom{p, {gen.make(2), gen.make(2)}} : Atom{q, {gen.make(2)}};
      c.literals.push_back(l);
    }
    std::string text = render_clause(sig, c);
    Clause back = parse_clause(text, sig);
    CHECK_MESSAGE(is_variant(back, c), text);
    CHECK(render_clause(sig, back) == text);
  }
}
