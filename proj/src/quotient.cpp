#include "rlcm/quotient.hpp"

#include <algorithm>      // for min
#include <set>            // for set
#include <unordered_set>  // for unordered_set

#include "rlcm/properties.hpp"
#include "rlcm/text.hpp"

namespace rlcm {

std::size_t hash_value(UnitClass const& c) {
  return c.rep.hash();
}

Quotient::Quotient(std::shared_ptr<Semigroup const> S) : _S(std::move(S)) {
  auto gens = _S->generators();
  if (gens.empty() || !_S->left_unit_rep(gens.front())) {
    throw PreconditionError(_S->name() + " has no canonical unit-class representatives");
  }
}

Element Quotient::class_of(Element const& a) const {
  auto rep = _S->left_unit_rep(a);
  if (!rep) {
    throw PreconditionError("no class representative for " + _S->format(a));
  }
  return wrap(UnitClass{*rep});
}

std::string Quotient::name() const {
  return _S->name() + "/units";
}

Element Quotient::multiply(Element const& a, Element const& b) const {
  return class_of(_S->multiply(representative(a), representative(b)));
}

std::optional<Element> Quotient::identity() const {
  if (auto one = _S->identity()) {
    return class_of(*one);
  }
  return std::nullopt;
}

bool Quotient::is_unit(Element const& a) const {
  auto one = identity();
  return one && a == *one;
}

Element Quotient::unit_inverse(Element const& a) const {
  if (!is_unit(a)) {
    throw PreconditionError(format(a) + " is not a unit");
  }
  return a;
}

std::optional<Element> Quotient::left_divide(Element const& a, Element const& r) const {
  auto t = _S->left_divide(representative(a), representative(r));
  if (!t) {
    return std::nullopt;
  }
  return class_of(*t);
}

LcmOutcome Quotient::right_lcm(Element const& a, Element const& b) const {
  auto r = _S->right_lcm(representative(a), representative(b));
  if (r.is_disjoint()) {
    return LcmOutcome::disjoint();
  }
  return LcmOutcome::of(class_of(*r.lcm));
}

std::optional<Element> Quotient::unit_left_quotient(Element const& a, Element const& b) const {
  if (a == b) {
    return identity();
  }
  return std::nullopt;
}

std::vector<Element> Quotient::generators() const {
  std::vector<Element> out;
  std::set<Element> seen;
  auto one = identity();
  for (auto const& g : _S->generators()) {
    Element c = class_of(g);
    if ((!one || c != *one) && seen.insert(c).second) {
      out.push_back(c);
    }
  }
  return out;
}

std::string Quotient::format(Element const& a) const {
  return "[" + _S->format(representative(a)) + "]";
}

Element Quotient::parse(std::string_view text) const {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') {
    text = text.substr(1, text.size() - 2);
  }
  return class_of(_S->parse(text));
}

Verdict validate_quotient(Quotient const& Q, SearchBudget const& budget) {
  Semigroup const& S = Q.base();
  int radius         = std::min(budget.radius, 2);
  auto pool          = enumerate_shortlex(S, S.generators(), radius, budget.max_candidates);
  auto ugens         = S.unit_generators();
  auto units         = ugens.empty() ? std::vector<Element>{}
                                     : enumerate_shortlex(S, ugens, radius, budget.max_candidates);
  auto factors       = enumerate_shortlex(S, S.generators(), 1);
  static char const* const kRule = "a ~ xa is a congruence with trivial units";
  std::size_t checks             = 0;
  for (auto const& a : pool) {
    for (auto const& x : units) {
      Element b = S.multiply(x, a);
      ++checks;
      if (Q.class_of(a) != Q.class_of(b)) {
        return Verdict::fails("[" + S.format(a) + "] != [" + S.format(b) + "]", kRule, {a, b});
      }
      for (auto const& c : factors) {
        for (auto const& d : factors) {
          ++checks;
          Element cad = product(S, {c, a, d});
          Element cbd = product(S, {c, b, d});
          if (Q.class_of(cad) != Q.class_of(cbd)) {
            return Verdict::fails("[" + S.format(cad) + "] != [" + S.format(cbd) + "]", kRule,
                                  {cad, cbd});
          }
        }
      }
    }
  }
  if (auto one = Q.identity()) {
    for (auto const& a : pool) {
      for (auto const& b : pool) {
        ++checks;
        Element ab = S.multiply(a, b);
        if (Q.class_of(ab) == *one && Q.class_of(a) != *one) {
          return Verdict::fails("[" + S.format(a) + "] is invertible", kRule, {a, b});
        }
      }
    }
  }
  return Verdict::holds(std::to_string(checks) + " sampled checks", kRule);
}

std::shared_ptr<Quotient const> build_quotient(std::shared_ptr<Semigroup const> S,
                                               SearchBudget const& budget) {
  auto c1 = check_C1(*S, budget);
  if (!c1.is_holds()) {
    throw PreconditionError("the quotient needs C1, which is " + to_string(c1.outcome) + " for "
                            + S->name() + ": " + c1.detail);
  }
  auto Q = std::make_shared<Quotient const>(std::move(S));
  auto v = validate_quotient(*Q, budget);
  if (!v.is_holds()) {
    throw Error("quotient validation failed: " + v.detail);
  }
  return Q;
}

Transversal canonical_transversal(Quotient const& Q) {
  return [&Q](Element const& c) { return Q.representative(c); };
}

std::optional<Element> theta(Semigroup const& S, Element const& p, Element const& x) {
  return S.unit_left_quotient(S.multiply(p, x), p);
}

ReconstructionReport reconstruct_semidirect(Quotient const& Q,
                                            Transversal const& T,
                                            SearchBudget const& budget) {
  static char const* const kRule = "S is S^* x_theta Q via (x, c) -> x T(c)";
  Semigroup const& S             = Q.base();
  ReconstructionReport rep;
  auto fails = [&](std::string detail, std::vector<Element> data) {
    rep.verdict = Verdict::fails(std::move(detail), kRule, std::move(data));
    return rep;
  };

  auto one = S.identity();
  if (!one) {
    rep.verdict = Verdict::unknown("S has no identity", kRule);
    return rep;
  }
  auto ugens   = S.unit_generators();
  auto unit_at = [&](int r) {
    return ugens.empty() ? std::vector<Element>{*one}
                         : enumerate_shortlex(S, ugens, r, budget.max_candidates);
  };
  auto units   = unit_at(budget.radius);
  auto small   = unit_at(std::min(budget.radius, 2));
  auto classes = enumerate_shortlex(Q, Q.generators(), budget.radius, budget.max_candidates);
  rep.units    = units.size();
  rep.classes  = classes.size();

  // T is a multiplicative section.
  for (auto const& c : classes) {
    ++rep.checks;
    if (Q.class_of(T(c)) != c) {
      return fails("T" + Q.format(c) + " = " + S.format(T(c)) + " is not in the class", {c});
    }
    for (auto const& d : classes) {
      ++rep.checks;
      if (T(Q.multiply(c, d)) != S.multiply(T(c), T(d))) {
        return fails("T is not multiplicative at " + Q.format(c) + ", " + Q.format(d), {c, d});
      }
    }
  }

  // theta_c is an injective endomorphism of the units, and c -> theta_c
  // is an action.
  auto th = [&](Element const& c, Element const& x) -> std::optional<Element> {
    return theta(S, T(c), x);
  };
  for (auto const& c : classes) {
    std::set<Element> images;
    for (auto const& x : small) {
      ++rep.checks;
      auto y = th(c, x);
      if (!y || !S.is_unit(*y)) {
        return fails("no unit y with " + S.format(T(c)) + " " + S.format(x) + " = y "
                         + S.format(T(c)),
                     {c, x});
      }
      if (!images.insert(*y).second) {
        return fails("theta" + Q.format(c) + " is not injective", {c, x});
      }
      for (auto const& z : small) {
        ++rep.checks;
        if (th(c, S.multiply(x, z)) != S.multiply(*y, *th(c, z))) {
          return fails("theta" + Q.format(c) + " is not multiplicative", {c, x, z});
        }
      }
      for (auto const& d : classes) {
        ++rep.checks;
        if (th(Q.multiply(c, d), x) != th(c, *th(d, x))) {
          return fails("theta is not an action at " + Q.format(c) + ", " + Q.format(d), {c, d, x});
        }
      }
    }
  }

  // phi is a homomorphism from S^* x_theta Q.
  auto phi = [&](Element const& x, Element const& c) { return S.multiply(x, T(c)); };
  for (auto const& c : classes) {
    for (auto const& x : small) {
      for (auto const& d : classes) {
        for (auto const& y : small) {
          ++rep.checks;
          Element lhs = phi(S.multiply(x, *th(c, y)), Q.multiply(c, d));
          if (lhs != S.multiply(phi(x, c), phi(y, d))) {
            return fails("phi is not multiplicative", {x, c, y, d});
          }
        }
      }
    }
  }

  // Injective on the unit ball times the class ball.
  std::unordered_set<Element, ElementHash> seen;
  for (auto const& c : classes) {
    for (auto const& x : units) {
      ++rep.checks;
      if (!seen.insert(phi(x, c)).second) {
        return fails("phi identifies " + S.format(phi(x, c)) + " twice", {x, c});
      }
    }
  }

  // Every element of the S-ball has a preimage.
  for (auto const& s : enumerate_shortlex(S, S.generators(), budget.radius, budget.max_candidates)) {
    ++rep.checks;
    ++rep.ball_size;
    Element c = Q.class_of(s);
    auto x    = S.unit_left_quotient(s, T(c));
    if (!x || phi(*x, c) != s) {
      return fails(S.format(s) + " has no preimage", {s});
    }
  }

  rep.verdict = Verdict::holds(std::to_string(rep.units) + " units x " + std::to_string(rep.classes)
                                   + " classes injective; " + std::to_string(rep.ball_size)
                                   + " ball elements reached",
                               kRule);
  return rep;
}

}  // namespace rlcm
