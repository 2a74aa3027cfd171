#include <algorithm>

#include "doctest.h"
#include "lgres/refine.hpp"
#include "support.hpp"

using namespace lgres;
using namespace lgres::test;

namespace {

struct Example1 {
  Signature sig;
  Clause q = cl(sig, "~a1(X,Y) | ~a2(Y,Z)");
  Clause c1 = shift_vars(cl(sig, "a1(f(X,Y),X) | b1(g(X,Y)) | ~g1(X,Y)"), 10);
  Clause c2 = shift_vars(cl(sig, "a2(h(X,Y),X) | ~g2(X,Y)"), 20);
  // Variant of c1 that makes the chained variable the top one, with the
  // matching variant of c2.
  Clause c1y = shift_vars(cl(sig, "a1(X,f(X,Y)) | b1(g(X,Y)) | ~g1(X,Y)"), 10);
  Clause c2y = shift_vars(cl(sig, "a2(f(X,Y),X) | ~g2(X,Y)"), 20);

  std::vector<Atom> left() const { return {q.literals[0].atom, q.literals[1].atom}; }
};

}  // namespace

TEST_CASE("query pair of the chained query") {
  Example1 e;
  auto r = build_query_pair(e.left(), {e.c1.literals[0].atom, e.c2.literals[0].atom});
  REQUIRE(std::holds_alternative<QueryPair>(r));
  const QueryPair& qp = std::get<QueryPair>(r);
  CHECK_FALSE(qp.degenerate);
  TopVariableReport rep = variable_ordering(qp);
  CHECK(rep.depth.at(0) == 2);
  CHECK(rep.depth.at(1) == 1);
  CHECK(rep.depth.at(2) == 0);
  CHECK(rep.tops == VarSet{0});
  CHECK(rep.eligible_left_indices == std::vector<std::size_t>{0});
  CHECK_FALSE(check_top_binding_properties(qp, rep).has_value());
}

TEST_CASE("the chained variable becomes top with the variant side clauses") {
  Example1 e;
  auto r = build_query_pair(e.left(), {e.c1y.literals[0].atom, e.c2y.literals[0].atom});
  REQUIRE(std::holds_alternative<QueryPair>(r));
  TopVariableReport rep = variable_ordering(std::get<QueryPair>(r));
  CHECK(rep.tops == VarSet{1});
  CHECK(rep.eligible_left_indices == std::vector<std::size_t>{0, 1});
}

TEST_CASE("ground partners make every variable top") {
  Signature sig;
  Clause q = cl(sig, "~a1(X,Y) | ~a2(Y,Z)");
  Clause g = cl(sig, "a1(a,b) | a2(b,c)");
  auto r = build_query_pair({q.literals[0].atom, q.literals[1].atom},
                            {g.literals[0].atom, g.literals[1].atom});
  REQUIRE(std::holds_alternative<QueryPair>(r));
  TopVariableReport rep = variable_ordering(std::get<QueryPair>(r));
  CHECK(rep.tops == VarSet{0, 1, 2});
}

TEST_CASE("query pair preconditions") {
  Example1 e;
  Signature& sig = e.sig;
  auto ground_left = build_query_pair({atom(sig, "a1(a,b)")}, {e.c1.literals[0].atom});
  REQUIRE(std::holds_alternative<QueryPairFailure>(ground_left));
  CHECK(std::get<QueryPairFailure>(ground_left) == QueryPairFailure::LeftGround);

  Atom shared = shift_vars(atom(sig, "a2(h(X,Y),X)"), 10);
  auto r = build_query_pair(e.left(), {e.c1.literals[0].atom, shared});
  REQUIRE(std::holds_alternative<QueryPairFailure>(r));
  CHECK(std::get<QueryPairFailure>(r) == QueryPairFailure::SharedVariables);

  auto deep = build_query_pair({atom(sig, "a1(f(X,Y),Y)")}, {e.c1.literals[0].atom});
  CHECK(std::get<QueryPairFailure>(deep) == QueryPairFailure::LeftNotFlat);

  auto clash = build_query_pair(e.left(), {e.c1.literals[0].atom, e.c1y.literals[0].atom});
  CHECK(std::holds_alternative<QueryPairFailure>(clash));
}

TEST_CASE("selection profiles") {
  Example1 e;
  Clause negc = cl(e.sig, "~p(f(X,Y),X) | ~g1(X,Y) | a1(X,Y)");
  Clause ground = cl(e.sig, "~a1(a,b) | a2(b,c)");
  Clause gneg = cl(e.sig, "~a1(a,b) | ~g1(X,Y) | a2(X,Y)");
  Clause pos = cl(e.sig, "a1(a,b) | a2(b,a)");
  Precedence prec(e.sig);
  Lpo lpo(prec);

  ClauseProfile pc1 = profile_clause(e.c1, lpo);
  CHECK(pc1.selection == SelectionCase::PositiveCompound);
  CHECK(pc1.maximal == std::vector<std::size_t>{0});
  CHECK_FALSE(pc1.has_selection());

  ClauseProfile pq = profile_clause(e.q, lpo);
  CHECK(pq.selection == SelectionCase::TopVariables);
  CHECK(pq.query_left == std::vector<std::size_t>{0, 1});

  ClauseProfile pn = profile_clause(negc, lpo);
  CHECK(pn.selection == SelectionCase::NegativeCompound);
  CHECK(pn.selected == std::vector<std::size_t>{0});

  CHECK(profile_clause(ground, lpo).selection == SelectionCase::Unrestricted);
  ClauseProfile pg = profile_clause(gneg, lpo);
  CHECK(pg.selection == SelectionCase::GroundNegative);
  CHECK(pg.selected == std::vector<std::size_t>{0});
  CHECK(profile_clause(pos, lpo).selection == SelectionCase::Unrestricted);
}

TEST_CASE("eligibility decisions") {
  Example1 e;
  Precedence prec(e.sig);
  Lpo lpo(prec);
  EligibilityDecision lone = select_literals(e.q, lpo);
  CHECK(lone.mode == EligibilityDecision::Mode::NeedsContext);

  auto r = build_query_pair(e.left(), {e.c1.literals[0].atom, e.c2.literals[0].atom});
  const QueryPair& qp = std::get<QueryPair>(r);
  EligibilityDecision d = select_literals(e.q, lpo, &qp);
  CHECK(d.mode == EligibilityDecision::Mode::Selected);
  CHECK(d.condition == SelectionCase::TopVariables);
  CHECK(d.positions == std::vector<std::size_t>{0});

  EligibilityDecision m = select_literals(e.c1, lpo);
  CHECK(m.mode == EligibilityDecision::Mode::Maximal);
  CHECK(m.condition == SelectionCase::PositiveCompound);
  CHECK(m.positions == std::vector<std::size_t>{0});
}

TEST_CASE("top variables on random query pairs") {
  Signature sig;
  TermGen gen(sig, 51);
  SymbolId p = sig.intern("p", SymbolKind::Predicate, 2);
  SymbolId q = sig.intern("q", SymbolKind::Predicate, 2);
  int built = 0, pairs_checked = 0;
  for (int i = 0; i < 4000; ++i) {
    unsigned n = 1 + gen.pick(3);
    std::vector<Atom> left, right;
    for (unsigned k = 0; k < n; ++k) {
      SymbolId pred = gen.pick(2) ? p : q;
      left.push_back(Atom{pred, {Term::var(gen.pick(3)), Term::var(gen.pick(3))}});
      VarId u = 10 + 10 * k, w = u + 1;
      auto arg = [&]() {
        switch (gen.pick(5)) {
          case 0: return Term::var(u);
          case 1: return Term::var(w);
          case 2: return Term::constant(gen.a);
          default: return Term::compound(gen.pick(2) ? gen.f : gen.h, {Term::var(u), Term::var(w)});
        }
      };
      right.push_back(Atom{pred, {arg(), arg()}});
    }
    auto r = build_query_pair(left, right);
    if (!std::holds_alternative<QueryPair>(r)) continue;
    ++built;
    const QueryPair& qp = std::get<QueryPair>(r);
    TopVariableReport rep = variable_ordering(qp);
    REQUIRE_FALSE(rep.tops.empty());
    int best = -2;
    for (auto [v, d] : rep.depth) best = std::max(best, d);
    for (VarId t : rep.tops) CHECK(rep.depth.at(t) == best);
    if (!qp.degenerate) {
      auto problem = check_top_binding_properties(qp, rep);
      CHECK_MESSAGE(!problem, (problem ? *problem : ""));
    }
    // Reversing the pair order must not change the tops.
    std::vector<Atom> rl(left.rbegin(), left.rend()), rr(right.rbegin(), right.rend());
    auto rev = build_query_pair(rl, rr);
    REQUIRE(std::holds_alternative<QueryPair>(rev));
    TopVariableReport rrep = variable_ordering(std::get<QueryPair>(rev));
    CHECK(rrep.tops == rep.tops);
    std::vector<std::size_t> mirrored;
    for (std::size_t idx : rrep.eligible_left_indices) mirrored.push_back(n - 1 - idx);
    std::sort(mirrored.begin(), mirrored.end());
    CHECK(mirrored == rep.eligible_left_indices);
    ++pairs_checked;
  }
  CHECK(built > 200);
  CHECK(pairs_checked == built);
}
