#include "doctest.h"
#include "rlcm/config.hpp"
#include "rlcm/error.hpp"
#include "support.hpp"

using namespace rlcm;

namespace {

std::size_t error_line(std::string const& text) {
  try {
    build_semigroup(parse_config(text));
  } catch (ConfigError const& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("every catalog entry parses and builds") {
  auto names = catalog_names();
  CHECK(names.size() >= 12);
  for (auto const& n : names) {
    CAPTURE(n);
    auto cfg = catalog_config(n);
    CHECK(cfg.name == n);
    CHECK_NOTHROW(build_semigroup(cfg));
  }
}

TEST_CASE("config errors carry the offending line") {
  CHECK(error_line("[family]\nkind = free-abelian\n[monoid]\npresentation = tuple\nrank = 2\n"
                   "colour = red\n")
        == 6);
  CHECK(error_line("[family]\nkind = semidirect\n[group]\nkind = free\nrank = 2\n[action]\n"
                   "theta.0 = 2 1\ntheta.1 = 2 2\n")
        == 4);
  CHECK(error_line("[family]\nkind = zappa-szep\n[automaton]\nalphabet = 01\nstates = a\n"
                   "a, 0 -> 0, a\na, 1 -> 0, a\n")
        == 6);
  CHECK(error_line("[nonsense]\n") == 1);
  CHECK(error_line("[family]\nkind = free-abelian\n[expect]\nD7 = Holds\n") == 4);
  CHECK(error_line("[family]\nkind = semidirect\n[monoid]\npresentation = integers\n"
                   "generators = 2 4\n[group]\nkind = lattice\n")
        == 4);
}

TEST_CASE("budget and expectations are read") {
  auto cfg = catalog_config("zxn");
  CHECK(cfg.budget.radius == 3);
  REQUIRE(!cfg.expect.empty());
  CHECK(cfg.expect.front().first == "C1");
  CHECK(cfg.expect.front().second == Outcome::Holds);
}

TEST_CASE("enumeration generators can be replaced") {
  auto cfg = parse_config(
      "[family]\nkind = semidirect\nname = z\n[monoid]\npresentation = primes\n"
      "generators = 2\n[group]\nkind = lattice\n[action]\nscalar = true\n"
      "[generators]\nball = (1,1); (0,2)\n");
  auto S = build_semigroup(cfg);
  CHECK(format_list(*S, S->generators()) == "{(1,1), (0,2)}");
}

TEST_CASE("fixture files load from disk") {
  auto S = test::fixture("fixed-letter.cfg");
  CHECK(S->name() == "fixed-letter");
}
