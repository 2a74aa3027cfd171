#include "brute_force.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "lgres/clause_ops.hpp"
#include "lgres/clausify.hpp"
#include "lgres/oracle.hpp"
#include "lgres/query.hpp"
#include "support.hpp"

using namespace lgres;
using namespace lgres::test;

namespace {

std::vector<Atom> query_atoms(Signature& sig, const std::string& text) {
  std::vector<Atom> out;
  for (const Literal& l : cl(sig, text).literals) out.push_back(l.atom);
  return out;
}

struct Loaded {
  Problem p;
  std::vector<NamedClause> theory;
  explicit Loaded(const std::string& text) : p(parse_problem(text)), theory(clausify_problem(p)) {}
  AnswerResult answer(AnswerMode mode, std::size_t i = 0) {
    AnswerOptions o;
    o.mode = mode;
    o.assert_invariants = true;
    return answer_bcq(p.signature, theory, p.queries.at(i), o);
  }
};

}  // namespace

TEST_CASE("negated query clause") {
  Problem p = parse_problem("query q1: exists [X,Y,Z] (a1(X,Y) & a2(Y,Z)).");
  Clause c = negate_query(p.queries[0]);
  CHECK(render_clause(p.signature, c) == "~a1(X,Y) | ~a2(Y,Z)");
  CHECK(is_query_clause(c));
}

TEST_CASE("partners") {
  Signature sig;
  std::vector<Atom> q = query_atoms(sig, "a1(X,Y) | a2(Y,Z)");
  CHECK(partners(1, q) == VarSet{0, 2});
  CHECK(partners(0, q) == VarSet{1});
  CHECK(partners_of_set({0, 2}, q) == VarSet{1});
  CHECK_THROWS_AS(partners(7, q), std::invalid_argument);
}

TEST_CASE("query classes") {
  Signature sig;
  auto star = query_atoms(sig, "a1(X,Y) | a2(Y,Z)");
  QueryClassification s = classify_query(star);
  CHECK(s.kind == QueryClass::Star);
  CHECK(s.witness == VarSet{1});
  CHECK_FALSE(s.dynamic_confirmed);

  auto cloud = query_atoms(sig, "a1(X,Y) | a2(Y,Z) | a3(Z,U,V) | a4(V)");
  QueryClassification c = classify_query(cloud);
  CHECK(c.kind == QueryClass::Cloud);
  CHECK(c.witness == VarSet{1, 2});

  auto general = query_atoms(sig, "a1(X,Y) | a2(Y,Z) | b3(Z,U) | b4(U,V)");
  CHECK(classify_query(general).kind == QueryClass::General);
}

TEST_CASE("cyclic queries are loosely guarded") {
  Signature sig;
  auto tri = query_atoms(sig, "citedby(X,Y) | citedby(Y,Z) | citedby(Z,X)");
  CHECK(classify_query(tri).kind == QueryClass::LooselyGuarded);
  auto tri2 = query_atoms(sig, "postgrad(X) | citedby(X,Y) | citedby(Y,Z) | citedby(Z,X)");
  CHECK(classify_query(tri2).kind == QueryClass::LooselyGuarded);
}

TEST_CASE("classification agrees with enumeration") {
  testgen::Vocabulary voc;
  for (unsigned seed = 0; seed < 500; ++seed) {
    testgen::Generator gen(seed);
    std::vector<Atom> q = gen.query(voc, 5, 5);
    QueryClassification got = classify_query(q);
    CHECK(got.kind == brute::classify(q));
    CHECK(brute::witness_valid(got.kind, got.witness, q));
  }
}

TEST_CASE("witnessed top sets") {
  Signature sig;
  Clause star = cl(sig, "~a1(X,Y) | ~a2(Y,Z)");
  CHECK(tops_within_witness(star, {1}));
  CHECK_FALSE(tops_within_witness(star, {0}));
  Clause lg = cl(sig, "~a1(X,Y) | ~a2(Y,X)");
  CHECK(tops_within_witness(lg, {0}));
}

TEST_CASE("Horn answering on the chained example") {
  Loaded l(
      "clause c1: a1(f(X,Y),X) | ~g1(X,Y).\n"
      "clause c2: a2(h(X,Y),X) | ~g2(X,Y).\n"
      "query q: exists [X,Y,Z] (a1(X,Y) & a2(Y,Z)).\n");
  AnswerResult r = l.answer(AnswerMode::Horn);
  CHECK(r.kind == AnswerKind::NotEntailed);
  CHECK(r.stats.max_depth <= 1);
}

TEST_CASE("Horn answering with facts") {
  Loaded l(
      "formula r1: forall [X] (person(X) -> exists [Y] (parent(X,Y) & person(Y))).\n"
      "formula r2: forall [X,Y] (parent(X,Y) -> ancestor(X,Y)).\n"
      "fact f1: person(ann).\n"
      "query q1: exists [X,Y] (ancestor(X,Y) & person(Y)).\n"
      "query q2: exists [X] ancestor(X,X).\n"
      "query q3: exists [X,Y,Z] (parent(X,Y) & parent(Y,Z)).\n");
  CHECK(l.answer(AnswerMode::Horn, 0).kind == AnswerKind::Entailed);
  CHECK(l.answer(AnswerMode::Horn, 1).kind == AnswerKind::NotEntailed);
  AnswerResult chain = l.answer(AnswerMode::Horn, 2);
  CHECK(chain.kind == AnswerKind::Entailed);
  CHECK_FALSE(chain.proof.empty());
}

TEST_CASE("mode restrictions") {
  Loaded disj(
      "formula r1: forall [X] (g(X) -> (p(X) | q(X))).\n"
      "fact f1: g(a).\n"
      "query q1: exists [X] p(X).\n"
      "query q2: exists [X,Y,Z,U,V] (r(X,Y) & r(Y,Z) & r(Z,U) & r(U,V)).\n");
  AnswerResult horn = disj.answer(AnswerMode::Horn);
  CHECK(horn.kind == AnswerKind::Unsupported);
  AnswerResult restricted = disj.answer(AnswerMode::RestrictedLgf);
  CHECK(restricted.kind == AnswerKind::NotEntailed);
  CHECK(disj.answer(AnswerMode::RestrictedLgf, 1).kind == AnswerKind::Unsupported);
}

TEST_CASE("restricted answering of a star query over a disjunctive theory") {
  Loaded l(
      "formula r1: forall [X] (g(X) -> (exists [Y] (a1(Y,X) & a2(X,Y)) | p(X))).\n"
      "formula r2: forall [X] (p(X) -> exists [Y] (a1(Y,X) & a2(X,X))).\n"
      "fact f1: g(c).\n"
      "query q: exists [X,Y,Z] (a1(X,Y) & a2(Y,Z)).\n");
  AnswerResult r = l.answer(AnswerMode::RestrictedLgf);
  CHECK(r.kind == AnswerKind::Entailed);
}
