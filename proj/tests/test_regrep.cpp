#include <memory>  // for make_shared

#include "doctest.h"
#include "rlcm/families/free_abelian.hpp"
#include "rlcm/families/free_monoid.hpp"
#include "rlcm/regrep.hpp"
#include "rlcm/sampling.hpp"
#include "support.hpp"

using namespace rlcm;

namespace {

std::string diagonal(TruncatedOperator const& op) {
  std::string out;
  for (std::size_t j = 0; j < op.dim(); ++j) {
    out += to_string(op.entry(j, j));
  }
  return out;
}

}  // namespace

TEST_CASE("balls are shortlex and deterministic") {
  StarAlgebra nx(std::make_shared<FreeAbelian>("n23", Presentation::all_primes({2, 3})));
  auto ball = generate_ball(nx, 2);
  CHECK(format_list(nx.semigroup(), ball.elements()) == "{1, 2, 3, 4, 6, 9}");
  CHECK(generate_ball(nx, 0).size() == 1);

  StarAlgebra word(std::make_shared<FreeMonoid>("a", Alphabet("a")));
  CHECK(format_list(word.semigroup(), generate_ball(word, 3).elements()) == "{1, a, aa, aaa}");

  StarAlgebra tilde(test::family("nx-nonunital"));
  auto b = generate_ball(tilde, 1);
  CHECK(format_list(tilde.semigroup(), b.elements()) == "{1, 2, 3, 5}");
}

TEST_CASE("isometries and projections on a ball of N^x") {
  StarAlgebra nx(std::make_shared<FreeAbelian>("n23", Presentation::all_primes({2, 3})));
  auto const& S = nx.semigroup();
  auto ball     = generate_ball(nx, 2);
  auto at       = [&](std::string const& s) { return *ball.index_of(S.parse(s)); };

  auto v2 = represent(nx, nx.parse("v[2]"), ball);
  CHECK(v2.entry(at("6"), at("3")) == Gaussian(1));
  CHECK_FALSE(v2.interior[at("9")]);  // 18 is outside the ball
  CHECK(diagonal(represent(nx, nx.parse("e[2]"), ball)) == "010110");
  auto v23 = represent(nx, nx.parse("v[2] v*[3]"), ball);
  CHECK(v23.entry(at("6"), at("9")) == Gaussian(1));
  CHECK(v23.columns[at("2")].empty());
  CHECK(dump_triplets(v23) == "1 2 1\n3 4 1\n4 5 1\n");

  // V_p^* V_p is the identity wherever V_p stays inside the ball
  auto vv = compose(represent(nx, nx.parse("v*[3]"), ball), represent(nx, nx.parse("v[3]"), ball));
  for (std::size_t j = 0; j < ball.size(); ++j) {
    if (vv.interior[j]) {
      CHECK(vv.columns[j] == std::map<std::size_t, Gaussian>{{j, Gaussian(1)}});
    }
  }
}

TEST_CASE("symbolic products agree with the truncated representation") {
  for (auto const& name : catalog_names()) {
    CAPTURE(name);
    StarAlgebra alg(test::family(name));
    auto ball = generate_ball(alg, 3);
    Sampler rand(alg, 1);
    std::size_t compared = 0;
    for (int i = 0; i < 30; ++i) {
      auto a = rand.algebra_element(3);
      auto b = rand.algebra_element(3);
      auto r = crosscheck_product(alg, a, b, ball);
      CHECK_MESSAGE(r.ok, r.mismatch);
      compared += r.nonzero_entries;
    }
    CHECK(compared > 0);
  }
}

TEST_CASE("the oracle detects a faulty multiplication") {
  StarAlgebra nx(test::family("nx"));
  auto ball = generate_ball(nx, 3);
  auto a    = nx.parse("v*[2]");
  auto b    = nx.parse("v[3]");
  CHECK(crosscheck_product(nx, a, b, ball).ok);
  nx.inject_fault(true);
  auto r = crosscheck_product(nx, a, b, ball);
  CHECK_FALSE(r.ok);
  CHECK(r.mismatch == "2");  // v*[2] v[3] sends e_2 to e_3, the fault to 0
}

TEST_CASE("oracle norms and projections") {
  StarAlgebra nx(test::family("nx"));
  auto ball = generate_ball(nx, 2);
  auto n    = oracle_diagonal_norm(nx, nx.phi_D(nx.parse("e[2] + e[3]")), ball);
  CHECK(n.value == 2);
  CHECK(nx.semigroup().format(*n.witness) == "6");
  CHECK(oracle_diagonal_norm(nx, nx.phi_D(nx.parse("e[4]")), ball).value == 1);

  StarAlgebra zxn(test::family("zxn"));
  auto const& Z = zxn.semigroup();
  DiagonalElement d;
  d.add(zxn.ideal(Z.parse("(0,2)")), 1);
  d.add(zxn.ideal(Z.parse("(1,2)")), 1);
  for (int radius = 0; radius <= 4; ++radius) {
    CHECK(oracle_diagonal_norm(zxn, d, generate_ball(zxn, radius)).value <= 1);
  }

  ProjectionSpec spec;
  spec.F = {nx.ideal(nx.semigroup().parse("2")), nx.ideal(nx.semigroup().parse("3"))};
  CHECK(oracle_projection_nonzero(nx, spec, ball));
  spec.A = spec.F;
  CHECK(oracle_projection_nonzero(nx, spec, ball));
  ProjectionSpec both;
  both.F = {zxn.ideal(Z.parse("(0,2)")), zxn.ideal(Z.parse("(1,2)"))};
  both.A = both.F;
  CHECK_FALSE(oracle_projection_nonzero(zxn, both, generate_ball(zxn, 4)));
}

TEST_CASE("symbolic norms agree with the oracle once the witness is in the ball") {
  SearchBudget budget;
  for (auto const& name : catalog_names()) {
    CAPTURE(name);
    StarAlgebra alg(test::family(name));
    Sampler rand(alg, 9);
    auto ball = generate_ball(alg, 2);
    for (int i = 0; i < 10; ++i) {
      auto d    = rand.diagonal_element(4);
      auto norm = alg.diagonal_norm(d, budget);
      REQUIRE(norm.outcome == Outcome::Holds);
      CHECK(oracle_diagonal_norm(alg, d, ball).value <= norm.value);
      Ball with = ball;
      with.extend({*norm.witness});
      CHECK(oracle_diagonal_norm(alg, d, with).value == norm.value);
    }
  }
}
