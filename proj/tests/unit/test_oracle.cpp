#include <random>

#include "doctest.h"
#include "lgres/oracle.hpp"
#include "support.hpp"

using namespace lgres;
using namespace lgres::test;

namespace {

std::vector<Clause> clauses(Signature& sig, std::initializer_list<const char*> texts) {
  std::vector<Clause> out;
  for (const char* t : texts) out.push_back(cl(sig, t));
  return out;
}

// Truth-table satisfiability of ground clauses over their atoms.
bool truth_table_sat(const std::vector<Clause>& cs) {
  std::vector<Atom> atoms;
  for (const Clause& c : cs) {
    for (const Literal& l : c.literals) {
      if (std::find(atoms.begin(), atoms.end(), l.atom) == atoms.end()) atoms.push_back(l.atom);
    }
  }
  for (std::size_t code = 0; code < (std::size_t{1} << atoms.size()); ++code) {
    bool all = true;
    for (const Clause& c : cs) {
      bool any = false;
      for (const Literal& l : c.literals) {
        std::size_t k = std::find(atoms.begin(), atoms.end(), l.atom) - atoms.begin();
        any = any || (((code >> k) & 1) == (l.positive ? 1u : 0u));
      }
      all = all && any;
    }
    if (all) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("model evaluation") {
  Signature sig;
  std::vector<Clause> cs = clauses(sig, {"p(a)", "~p(X) | q(f(X))"});
  Model m;
  m.size = 2;
  m.constants[*sig.find("a", SymbolKind::Constant)] = 0;
  m.functions[*sig.find("f", SymbolKind::Function)] = {1, 1};
  m.predicates[*sig.find("p", SymbolKind::Predicate)] = {true, false};
  m.predicates[*sig.find("q", SymbolKind::Predicate)] = {false, true};
  CHECK(m.eval(term(sig, "f(a)"), {}) == 1);
  CHECK(satisfies(m, cs));
  m.predicates[*sig.find("q", SymbolKind::Predicate)] = {false, false};
  CHECK_FALSE(satisfies(m, cs));
  CHECK_FALSE(render_model(sig, m).empty());
}

TEST_CASE("forward chaining") {
  Signature sig;
  auto yes = clauses(sig, {"e(a,b)", "e(b,c)", "~e(X,Y) | ~e(Y,Z) | ~path(X,Z)", "path(a,c)"});
  CHECK(forward_chain(yes).kind == OracleKind::ConfirmedEntailed);
  auto datalog = clauses(sig, {"e(a,b)", "~e(X,Y) | v(Y)", "~v(a)"});
  CHECK(forward_chain(datalog).kind == OracleKind::Inconclusive);
  auto deep = clauses(sig, {"n(a)", "~n(X) | n(s(X))", "~n(s(s(s(s(a)))))"});
  CHECK(forward_chain(deep, 2).kind == OracleKind::Inconclusive);
  CHECK(forward_chain(deep, 4).kind == OracleKind::ConfirmedEntailed);
  auto none = clauses(sig, {"u(a)", "~v(a)"});
  CHECK(forward_chain(none, 5).kind == OracleKind::Inconclusive);
  auto disj = clauses(sig, {"u(a) | v(a)"});
  CHECK_THROWS_AS(forward_chain(disj), std::invalid_argument);
}

TEST_CASE("finite model search") {
  Signature sig;
  auto two = clauses(sig, {"p(a)", "~p(b)"});
  OracleVerdict v = finite_model_search(two);
  REQUIRE(v.kind == OracleKind::ConfirmedSat);
  REQUIRE(v.model);
  CHECK(v.model->size == 2);
  CHECK(satisfies(*v.model, two));
  auto skolem = clauses(sig, {"g(a)", "~g(X) | r(X,k(X))", "~r(X,Y) | ~g(Y)", "~r(X,Y) | w(Y)"});
  OracleVerdict s = finite_model_search(skolem);
  REQUIRE(s.kind == OracleKind::ConfirmedSat);
  CHECK(satisfies(*s.model, skolem));
  auto unsat = clauses(sig, {"p(a)", "~p(X)"});
  CHECK(finite_model_search(unsat).kind == OracleKind::Inconclusive);
}

TEST_CASE("naive resolution") {
  Signature sig;
  auto unsat = clauses(sig, {"g(a)", "~g(X) | p(X) | q(X)", "~p(X)", "~q(a)"});
  CHECK(naive_resolution(unsat).kind == OracleKind::ConfirmedUnsat);
  auto sat = clauses(sig, {"g(a)", "~g(X) | p(X) | q(X)", "~p(X)"});
  CHECK(naive_resolution(sat).kind == OracleKind::Inconclusive);
  auto infinite = clauses(sig, {"n(a)", "~n(X) | n(s(X))"});
  CHECK(naive_resolution(infinite, 2000).kind == OracleKind::Inconclusive);
}

TEST_CASE("oracles agree with truth tables on ground sets") {
  std::mt19937 rng(71);
  Signature sig;
  std::vector<Atom> atoms;
  for (const char* a : {"p(a)", "p(b)", "q(a)", "r(a,b)", "r(b,a)"}) atoms.push_back(atom(sig, a));
  int sats = 0, unsats = 0;
  for (int i = 0; i < 400; ++i) {
    std::vector<Clause> cs;
    std::size_t n = 1 + rng() % 8;
    for (std::size_t k = 0; k < n; ++k) {
      Clause c;
      std::size_t len = 1 + rng() % 3;
      for (std::size_t j = 0; j < len; ++j)
        c.literals.push_back(Literal{rng() % 2 == 0, atoms[rng() % atoms.size()]});
      cs.push_back(c);
    }
    bool expected = truth_table_sat(cs);
    (expected ? sats : unsats)++;
    OracleVerdict fm = finite_model_search(cs);
    OracleVerdict nr = naive_resolution(cs);
    // Two constants may denote the same element, so a model search over
    // ground atoms only finds models when the set is satisfiable.
    if (fm.kind == OracleKind::ConfirmedSat) CHECK(expected);
    if (expected) CHECK(fm.kind == OracleKind::ConfirmedSat);
    CHECK(nr.kind == (expected ? OracleKind::Inconclusive : OracleKind::ConfirmedUnsat));
  }
  CHECK(sats > 20);
  CHECK(unsats > 20);
}
