#include "doctest.h"
#include "rlcm/arith.hpp"
#include "rlcm/error.hpp"
#include "rlcm/families/free_abelian.hpp"
#include "rlcm/families/polynomial.hpp"
#include "rlcm/rational.hpp"
#include "rlcm/text.hpp"
#include "support.hpp"

using namespace rlcm;

TEST_CASE("checked arithmetic throws instead of wrapping") {
  CHECK(checked_mul(1 << 20, 1 << 20) == (i64{1} << 40));
  CHECK_THROWS_AS(checked_mul(i64{1} << 40, i64{1} << 40), OverflowError);
  CHECK_THROWS_AS(checked_pow(3, 64), OverflowError);
  CHECK(checked_pow(3, 4) == 81);
}

TEST_CASE("extended gcd and floor arithmetic") {
  for (i64 a = -12; a <= 12; ++a) {
    for (i64 b = -12; b <= 12; ++b) {
      auto [d, x, y] = ext_gcd(a, b);
      CHECK(d == rlcm::gcd(a, b));
      CHECK(a * x + b * y == d);
    }
  }
  CHECK(floor_mod(-7, 3) == 2);
  CHECK(floor_div(-7, 3) == -3);
  CHECK(factorize(360) == std::vector<std::pair<u64, unsigned>>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("rationals and gaussian rationals print canonically") {
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(Gaussian(Rational(1, 2), Rational(3, 4))) == "(1/2+3/4i)");
  CHECK(to_string(Gaussian(0, -2)) == "-2i");
  CHECK(to_string(Gaussian(Rational(3, 4))) == "3/4");
  Rational r;
  CHECK(exact_sqrt(Rational(9, 4), r));
  CHECK(r == Rational(3, 2));
  CHECK_FALSE(exact_sqrt(Rational(2), r));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
}

TEST_CASE("polynomial division and bezout identity") {
  Poly a = parse_poly("T^3-1");
  Poly b = parse_poly("T^2+T");
  auto [q, r] = divmod(a, b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
  auto g = ext_gcd(parse_poly("T^2-1"), parse_poly("T^2+2T+1"));
  CHECK(to_string(g.d) == "T+1");
  CHECK(g.s * parse_poly("T^2-1") + g.t * parse_poly("T^2+2T+1") == g.d);
  for (auto s : {"T^2-1/2T+3", "0", "-T", "5/3", "T^4+T"}) {
    CHECK(to_string(parse_poly(s)) == s);
  }
}

TEST_CASE("top level splitting respects brackets") {
  auto parts = split_top_level("(1,2), [3,4],x", ',');
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == "(1,2)");
  CHECK(parts[1] == "[3,4]");
  CHECK_THROWS_AS(split_top_level("(1,2", ','), ParseError);
}

TEST_CASE("elements of different families never compare equal") {
  FreeAbelian A("a", Presentation::tuple(2));
  FreeAbelian B("b", Presentation::tuple(2));
  auto x = A.parse("[1,0]");
  auto y = B.parse("[1,0]");
  CHECK(x != y);
  CHECK(x == A.parse("[1,0]"));
  CHECK_THROWS_AS(A.multiply(x, y), FamilyMismatch);
}

TEST_CASE("free abelian presentations format and parse") {
  FreeAbelian nx("nx", Presentation::all_primes({2, 3, 5}));
  CHECK(nx.format(nx.parse("12")) == "12");
  CHECK(nx.format(*nx.right_lcm(nx.parse("4"), nx.parse("6")).lcm) == "12");
  CHECK(nx.format(*nx.left_divide(nx.parse("3"), nx.parse("12"))) == "4");
  CHECK_FALSE(nx.left_divide(nx.parse("5"), nx.parse("12")));
  FreeAbelian odd("odd", Presentation::integers({4, 9}));
  CHECK(odd.format(odd.multiply(odd.parse("4"), odd.parse("9"))) == "36");
  CHECK_THROWS_AS(Presentation::integers({4, 6}), PreconditionError);
}

TEST_CASE("residual search: ideals covering sigma S give an empty residual") {
  auto S    = test::family("zxn");
  auto zero = residual_nonempty(*S, {S->parse("(2,4)"), {S->parse("(0,2)"), S->parse("(1,2)")}},
                                SearchBudget{});
  CHECK(zero.is_fails());
  auto some = residual_nonempty(*S, {S->parse("(0,1)"), {S->parse("(0,2)"), S->parse("(1,2)")}},
                                SearchBudget{});
  CHECK(some.is_holds());
  CHECK(S->format(some.data.at(0)) == "(0,1)");
}
