#include <memory>  // for make_shared

#include "doctest.h"
#include "rlcm/properties.hpp"
#include "rlcm/quotient.hpp"
#include "support.hpp"

using namespace rlcm;

namespace {

std::shared_ptr<ZappaSzep> automaton(std::string const& letters,
                                     std::vector<std::string> states,
                                     std::vector<MealyAutomaton::Row> rows) {
  MealyAutomaton aut(Alphabet(letters), std::move(states), std::move(rows));
  return std::make_shared<ZappaSzep>("test", std::move(aut), 4, 3);
}

void check_replays(Semigroup const& S, std::string const& cond, Verdict const& v) {
  auto r = replay_verdict(S, cond, v, SearchBudget{});
  CHECK_MESSAGE(r.ok, (cond + ": " + r.detail));
}

}  // namespace

TEST_CASE("catalog expectations are met and every verdict replays") {
  for (auto const& name : catalog_names()) {
    CAPTURE(name);
    auto cfg = catalog_config(name);
    auto S   = build_semigroup(cfg);
    for (auto const& [cond, expected] : cfg.expect) {
      CAPTURE(cond);
      auto v = find_check(cond).run(*S, cfg.budget);
      CHECK(to_string(v.outcome) == to_string(expected));
      check_replays(*S, cond, v);
    }
  }
}

TEST_CASE("every registered check runs and replays on every catalog family") {
  for (auto const& name : catalog_names()) {
    CAPTURE(name);
    auto cfg = catalog_config(name);
    auto S   = build_semigroup(cfg);
    for (auto const& check : registered_checks()) {
      if (!check.applies(*S)) {
        continue;
      }
      CAPTURE(check.name);
      auto v = check.run(*S, cfg.budget);
      CHECK_FALSE(v.citation.empty());
      check_replays(*S, check.name, v);
    }
  }
}

TEST_CASE("centricity conditions") {
  auto zxn = test::family("zxn");
  auto c1  = check_C1(*zxn, {});
  CHECK(c1.is_holds());
  CHECK(c1.structural);
  auto c2 = check_C2(*zxn, {});
  REQUIRE(c2.is_fails());
  CHECK(format_list(*zxn, c2.data) == "{(1,1), (0,2)}");

  auto nx = test::family("nx");
  CHECK(check_C1(*nx, {}).citation == "trivial unit group: vacuous");
  CHECK(check_C2(*nx, {}).is_holds());

  auto odometer = test::family("odometer");
  CHECK(check_C1(*odometer, {}).is_holds());  // recurrent
  CHECK(check_C2(*odometer, {}).is_fails());  // a . 0 = 1
}

TEST_CASE("D1 and strong effectiveness") {
  for (auto const& name : {"zxn", "zinf-23", "shift-n2", "f2", "poly", "odometer", "lamplighter"}) {
    CAPTURE(name);
    auto v = check_D1(*test::family(name), {});
    CHECK(v.is_holds());
    CHECK(v.structural);
  }

  auto partial = test::family("zz-partial");
  auto se      = check_strong_effectiveness(*partial, {});
  REQUIRE(se.is_fails());
  CHECK(format_list(*partial, se.data) == "{([0,1],1), ([0,0],1)}");
  auto eff = check_effectiveness(*partial, {});
  REQUIRE(eff.is_fails());
  CHECK(eff.data == std::vector<Element>{se.data[0]});

  // never upgraded to Holds without a witness
  auto odometer = test::family("odometer");
  SearchBudget budget;
  budget.depth = 4;
  CHECK(check_strong_effectiveness(*odometer, budget).is_unknown());
  CHECK(check_effectiveness(*odometer, budget).is_holds());
}

TEST_CASE("effectiveness agrees with strong effectiveness on semidirect products") {
  for (auto const& name : catalog_names()) {
    auto S = test::family(name);
    if (!S->semidirect()) {
      continue;
    }
    CAPTURE(name);
    CHECK(check_effectiveness(*S, {}).outcome == check_strong_effectiveness(*S, {}).outcome);
  }
}

TEST_CASE("D3 via the index of theta_q(G)") {
  auto zxn = test::family("zxn");
  auto v   = check_D3(*zxn, {});
  REQUIRE(v.is_fails());
  CHECK(v.structural);
  CHECK(format_list(*zxn, v.data) == "{(0,1), (0,2), (1,2)}");
  CHECK(v.detail.find("index 2") != std::string::npos);

  auto zinf = test::family("zinf-23");
  auto w    = check_D3(*zinf, {});
  REQUIRE(w.is_fails());
  CHECK(format_list(*zinf, w.data) == "{([0],1), ([0],3), ([1],3), ([2],3)}");

  for (auto const& name : {"shift-n2", "f2", "poly"}) {
    CAPTURE(name);
    auto S = test::family(name);
    CHECK(check_D3(*S, {}).is_holds());
  }

  auto nx = test::family("nx");
  auto c  = check_D3(*nx, {});
  REQUIRE(c.is_fails());
  CHECK(format_list(*nx, c.data) == "{1, 2}");
}

TEST_CASE("D3 witnesses") {
  auto S = test::family("shift-n2");
  auto s = S->parse("({},[1,0])");
  auto q = S->parse("({},[0,1])");
  auto v = find_D3_witness(*S, s, {q}, {});
  REQUIRE(v.is_holds());
  CHECK(in_ideal(*S, s, v.data[0]));
  CHECK(S->right_lcm(v.data[0], q).is_disjoint());
  CHECK_THROWS_AS(find_D3_witness(*S, q, {s, q}, {}), PreconditionError);
}

TEST_CASE("D2 witnesses") {
  auto zxn = test::family("zxn");
  auto el  = [&](char const* s) { return zxn->parse(s); };
  D2Input in{el("(0,1)"), el("(0,1)"), el("(1,1)"), {el("(0,2)")}};
  auto v = find_D2_witness(*zxn, in, {});
  REQUIRE(v.is_holds());
  CHECK(zxn->format(v.data[0]) == "(0,3)");
  CHECK(replay_D2_witness(*zxn, in, v.data[0]).ok);
  CHECK_FALSE(replay_D2_witness(*zxn, in, el("(0,2)")).ok);

  CHECK_THROWS_AS(find_D2_witness(*zxn, {el("(0,1)"), el("(0,1)"), el("(0,2)"), {}}, {}),
                  PreconditionError);
  CHECK_THROWS_AS(find_D2_witness(*zxn, {el("(0,1)"), el("(0,1)"), el("(0,1)"), {}}, {}),
                  PreconditionError);
  CHECK_THROWS_AS(find_D2_witness(*zxn, {el("(0,2)"), el("(0,3)"), el("(1,1)"), {}}, {}),
                  PreconditionError);
  CHECK_THROWS_AS(
      find_D2_witness(*zxn, {el("(0,1)"), el("(0,2)"), el("(1,1)"), {el("(0,2)")}}, {}),
      PreconditionError);

  // with no obstacles and s0 = 1 the witness is a strong effectiveness witness
  D2Input bare{el("(0,1)"), el("(0,2)"), el("(1,1)"), {}};
  auto w = find_D2_witness(*zxn, bare, {});
  REQUIRE(w.is_holds());
  CHECK(in_ideal(*zxn, bare.s1, w.data[0]));
  CHECK_FALSE(ideal_equal(*zxn, zxn->multiply(bare.x, w.data[0]), w.data[0]));

  for (auto const& name : {"zxn", "zinf-23"}) {
    CAPTURE(name);
    auto S      = test::family(name);
    auto inputs = sample_D2_inputs(*S, 20, 3, {});
    REQUIRE(inputs.size() == 20);
    for (auto const& input : inputs) {
      auto found = find_D2_witness(*S, input, {});
      REQUIRE(found.is_holds());
      CHECK(replay_D2_witness(*S, input, found.data[0]).ok);
    }
  }
}

TEST_CASE("D2 as a condition") {
  auto shift = test::family("shift-n2");
  auto v     = check_D2(*shift, {});
  CHECK(v.is_holds());
  CHECK(v.citation == "strong effectiveness with D1 and D3 gives D2");
  auto u = check_D2(*test::family("zxn"), {});
  CHECK(u.is_unknown());
  CHECK(u.detail == "witnesses found for 20 of 20 sampled inputs");
  CHECK(check_D2(*test::family("nx"), {}).is_holds());
}

TEST_CASE("self-similar cancellation and recurrence") {
  auto fixed = test::fixture("fixed-letter.cfg");
  auto rc    = check_right_cancellative(*fixed, {});
  REQUIRE(rc.is_fails());
  CHECK(format_list(*fixed, rc.data) == "{(-,s), (-,1), (0,1)}");
  auto se = check_strong_effectiveness(*fixed, {});
  CHECK(se.is_fails());

  auto odometer = test::family("odometer");
  auto* V       = odometer->self_similar();
  auto none     = check_selfsim_right_cancellative(*V, 4, 3);
  CHECK(none.is_unknown());
  CHECK(none.detail.find("|w| <= 4") != std::string::npos);

  auto rec = check_recurrent(*V, {});
  REQUIRE(rec.is_holds());
  check_replays(*odometer, "recurrent", rec);

  auto idle = automaton("01", {"e"}, {{"e", '0', '0', "e"}, {"e", '1', '1', "e"}});
  auto t    = check_recurrent(*idle, {});
  REQUIRE(t.is_fails());
  check_replays(*idle, "recurrent", t);

  auto single = automaton("0", {"e"}, {{"e", '0', '0', "e"}});
  CHECK(check_recurrent(*single, {}).is_holds());
  CHECK(check_right_cancellative(*test::family("n2"), {}).is_holds());
  CHECK(check_right_cancellative(*test::family("zxn"), {}).is_holds());
}

TEST_CASE("report format") {
  auto nx = test::family("nx");
  SearchBudget budget;
  CheckRecord rec{"C1", check_C1(*nx, budget), budget, Outcome::Holds};
  CHECK(format_report(*nx, {rec})
        == "[C1]\n"
           "verdict = Holds\n"
           "detail = no units other than the identity\n"
           "rule = trivial unit group: vacuous\n"
           "structural = yes\n"
           "budget = radius 3, candidates 20000, depth 6\n"
           "expected = Holds\n");
  CHECK_FALSE(contradicts_expectation(rec));
  rec.verdict.outcome = Outcome::Fails;
  CHECK(contradicts_expectation(rec));
  CHECK_THROWS_AS(find_check("D4"), PreconditionError);
}

TEST_CASE("quotient by the unit group") {
  auto zxn = test::family("zxn");
  auto Q   = build_quotient(zxn, {});
  CHECK(format_list(*Q, Q->generators()) == "{[(0,2)], [(0,3)]}");
  CHECK(Q->format(Q->class_of(zxn->parse("(5,6)"))) == "[(0,6)]");
  auto a = Q->parse("[(1,2)]");
  CHECK(Q->multiply(*Q->identity(), a) == a);
  CHECK(Q->format(Q->multiply(a, Q->parse("(7,3)"))) == "[(0,6)]");
  CHECK(Q->is_unit(Q->parse("(4,1)")));
  CHECK(validate_quotient(*Q, {}).is_holds());

  auto nx = build_quotient(test::family("nx"), {});
  CHECK(nx->format(nx->parse("12")) == "[12]");

  CHECK_THROWS_AS(build_quotient(test::family("odometer"), {}), PreconditionError);
}

TEST_CASE("reconstruction as a semidirect product") {
  auto zxn = test::family("zxn");
  CHECK(zxn->format(*theta(*zxn, zxn->parse("(0,2)"), zxn->parse("(1,1)"))) == "(2,1)");

  auto Q = build_quotient(zxn, {});
  auto r = reconstruct_semidirect(*Q, canonical_transversal(*Q), {});
  CHECK_MESSAGE(r.verdict.is_holds(), r.verdict.detail);
  CHECK(r.classes == 10);
  CHECK(r.units == 7);

  // c -> (1, p) is a section but not multiplicative
  auto shifted = [&](Element const& c) {
    Element t = Q->representative(c);
    return c == *Q->identity() ? t : zxn->multiply(zxn->parse("(1,1)"), t);
  };
  auto bad = reconstruct_semidirect(*Q, shifted, {});
  REQUIRE(bad.verdict.is_fails());
  CHECK(bad.verdict.detail == "T is not multiplicative at [(0,2)], [(0,2)]");
}
