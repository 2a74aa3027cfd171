#include "doctest.h"
#include "generators.hpp"
#include "lgres/clause_ops.hpp"
#include "lgres/oracle.hpp"
#include "lgres/saturation.hpp"
#include "support.hpp"

using namespace lgres;
using namespace lgres::test;

namespace {

struct Example1 {
  Signature sig;
  Clause q = cl(sig, "~a1(X,Y) | ~a2(Y,Z)");
  Clause c1 = cl(sig, "a1(f(X,Y),X) | b1(g(X,Y)) | ~g1(X,Y)");
  Clause c1_horn = cl(sig, "a1(f(X,Y),X) | ~g1(X,Y)");
  Clause c2 = cl(sig, "a2(h(X,Y),X) | ~g2(X,Y)");
  Clause c1y = cl(sig, "a1(X,f(X,Y)) | b1(g(X,Y)) | ~g1(X,Y)");
  Clause c2y = cl(sig, "a2(f(X,Y),X) | ~g2(X,Y)");
};

void check_replays(const Saturator& s) {
  for (ClauseId id = 0; id < s.size(); ++id) {
    const InferenceRecord& r = s.record(id);
    if (r.rule == Rule::Input) continue;
    std::vector<Clause> premises;
    for (ClauseId p : r.premises) premises.push_back(s.clause(p));
    auto problem = replay(r, premises);
    CHECK_MESSAGE(!problem, (problem ? *problem : ""));
  }
}

}  // namespace

TEST_CASE("binary ordered resolution") {
  Signature sig;
  Clause main = cl(sig, "~g(f(X)) | p(X)");
  Clause side = cl(sig, "g(f(a))");
  Precedence prec(sig);
  Lpo lpo(prec);
  auto r = binary_resolvent(main, 0, side, 0, lpo);
  REQUIRE(r);
  CHECK(render_clause(sig, r->clause) == "p(a)");
  CHECK(r->record.rule == Rule::OrderedResolution);
  CHECK_FALSE(replay(r->record, std::vector<Clause>{main, side}).has_value());
  // The positive literal of main is not a negative literal.
  CHECK_FALSE(binary_resolvent(main, 1, side, 0, lpo));
}

TEST_CASE("side literals must be strictly maximal") {
  Signature sig;
  Clause main = cl(sig, "~p(a)");
  Clause side = cl(sig, "p(a) | q(f(a))");
  Precedence prec(sig);
  Lpo lpo(prec);
  CHECK_FALSE(binary_resolvent(main, 0, side, 0, lpo));
  CHECK(binary_resolvents(main, side, lpo).empty());
}

TEST_CASE("ordered factoring") {
  Signature sig;
  Clause c = cl(sig, "p(X,a) | p(b,Y)");
  Clause sel = cl(sig, "~q(f(X)) | w(X) | w(a)");
  Precedence prec(sig);
  Lpo lpo(prec);
  std::vector<Conclusion> fs = ordered_factors(c, lpo);
  REQUIRE(fs.size() == 1);
  CHECK(render_clause(sig, fs[0].clause) == "p(b,a)");
  CHECK(ordered_factors(sel, lpo).empty());
}

TEST_CASE("top-variable step on the chained query") {
  Example1 e;
  Precedence prec(e.sig);
  Lpo lpo(prec);
  ResTopInfo info;
  std::vector<Clause> sides{e.c1, e.c2};
  std::vector<std::size_t> pos{0, 0};
  auto r = res_top(e.q, sides, pos, lpo, &info);
  REQUIRE(r);
  CHECK(info.tops == VarSet{0});
  CHECK(info.resolved == std::vector<std::size_t>{0});
  CHECK(is_variant(r->clause, cl(e.sig, "~a2(X,Z) | b1(g(X,Y)) | ~g1(X,Y)")));
  CHECK(vdp(r->clause) <= 1);
  CHECK_FALSE(is_lgc(r->clause));
  std::vector<Clause> premises{e.q, e.c1};
  CHECK_FALSE(replay(r->record, premises).has_value());
}

TEST_CASE("chained top variable yields a loosely guarded resolvent") {
  Example1 e;
  Precedence prec(e.sig);
  Lpo lpo(prec);
  ResTopInfo info;
  std::vector<Clause> sides{e.c1y, e.c2y};
  std::vector<std::size_t> pos{0, 0};
  auto r = res_top(e.q, sides, pos, lpo, &info);
  REQUIRE(r);
  CHECK(info.tops == VarSet{1});
  CHECK(info.resolved == std::vector<std::size_t>{0, 1});
  CHECK(is_variant(r->clause, cl(e.sig, "b1(g(X,Y)) | ~g1(X,Y) | ~g2(X,Y)")));
  CHECK(is_lgc(r->clause));
}

TEST_CASE("saturating the chained example never deepens terms") {
  Example1 e;
  Saturator s(e.sig);
  s.add_input(e.q, "q");
  s.add_input(e.c1, "c1");
  s.add_input(e.c2, "c2");
  std::vector<VarSet> tops_of_q;
  s.set_res_top_observer([&](const Saturator&, ClauseId main, const ResTopInfo& info) {
    if (main == 0) tops_of_q.push_back(info.tops);
  });
  Verdict v = s.run();
  CHECK(v.kind == VerdictKind::Satisfiable);
  REQUIRE_FALSE(tops_of_q.empty());
  for (const VarSet& t : tops_of_q) CHECK(t == VarSet{0});
  bool c3 = false;
  Clause want = cl(e.sig, "~a2(X,Z) | b1(g(X,Y)) | ~g1(X,Y)");
  for (ClauseId id = 0; id < s.size(); ++id) {
    CHECK(vdp(s.clause(id)) <= 1);
    c3 = c3 || is_variant(s.clause(id), want);
  }
  CHECK(c3);
  CHECK(v.stats.max_depth <= 1);
  check_replays(s);
}

TEST_CASE("refutation with proof replay") {
  Signature sig;
  Saturator s(sig);
  s.add_input(cl(sig, "g(a)"), "f1");
  s.add_input(cl(sig, "~g(X) | p(f(X))"), "r1");
  s.add_input(cl(sig, "~p(f(X)) | ~g(X)"), "r2");
  Verdict v = s.run();
  REQUIRE(v.kind == VerdictKind::Unsatisfiable);
  REQUIRE_FALSE(v.proof.empty());
  CHECK(v.proof.back().clause.empty());
  for (const InferenceRecord& r : v.proof) {
    std::vector<Clause> premises;
    for (ClauseId p : r.premises) premises.push_back(s.clause(p));
    if (r.rule != Rule::Input) CHECK_FALSE(replay(r, premises).has_value());
  }
  CHECK(render_proof(sig, v.proof).find("$false") != std::string::npos);
}

TEST_CASE("resource limits") {
  Signature sig;
  SaturationOptions opts;
  opts.max_clauses = 4;
  Saturator s(sig, opts);
  s.add_input(cl(sig, "g(a)"));
  s.add_input(cl(sig, "g(b)"));
  s.add_input(cl(sig, "~g(X) | p(X)"));
  s.add_input(cl(sig, "~g(X) | q(X)"));
  s.add_input(cl(sig, "~p(X) | r(X)"));
  Verdict v = s.run();
  CHECK(v.kind == VerdictKind::ResourceOut);
  CHECK_FALSE(v.reason.empty());
}

TEST_CASE("the check hook aborts a run") {
  Signature sig;
  Saturator s(sig);
  s.add_input(cl(sig, "g(a)"));
  s.add_input(cl(sig, "~g(X) | p(X)"));
  s.set_check([](const Saturator&, const InferenceRecord&) -> std::optional<std::string> {
    return std::string("stop");
  });
  Verdict v = s.run();
  CHECK(v.kind == VerdictKind::Aborted);
  CHECK(v.reason == "stop");
}

TEST_CASE("random loosely guarded sets agree with the oracles") {
  testgen::Vocabulary voc;
  int unsat = 0, sat = 0, unsat_confirmed = 0;
  for (unsigned seed = 0; seed < 150; ++seed) {
    testgen::Generator gen(seed);
    std::vector<Clause> cs = gen.lgc_set(voc, {});
    for (const Clause& c : cs) REQUIRE(is_lgc(c));
    Saturator s(voc.sig);
    for (const Clause& c : cs) s.add_input(c);
    s.set_check(check_lgc_closure);
    Verdict v = s.run();
    INFO(testgen::problem_text(voc.sig, cs));
    REQUIRE(v.kind != VerdictKind::Aborted);
    REQUIRE(v.kind != VerdictKind::ResourceOut);
    check_replays(s);
    if (v.kind == VerdictKind::Unsatisfiable) {
      ++unsat;
      CHECK(finite_model_search(cs, 2).kind != OracleKind::ConfirmedSat);
      if (naive_resolution(cs).kind == OracleKind::ConfirmedUnsat) ++unsat_confirmed;
    } else {
      ++sat;
      CHECK(naive_resolution(cs, 10000).kind != OracleKind::ConfirmedUnsat);
    }
  }
  MESSAGE("unsat " << unsat << " (naive confirmed " << unsat_confirmed << "), sat " << sat);
  CHECK(unsat > 0);
  CHECK(unsat_confirmed * 2 >= unsat);
  CHECK(sat > 0);
}
