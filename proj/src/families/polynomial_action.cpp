#include "actions.hpp"
#include "rlcm/text.hpp"

namespace rlcm::detail {

PolynomialAction::PolynomialAction(std::vector<Poly> gens) : _gens(std::move(gens)) {
  for (std::size_t i = 0; i < _gens.size(); ++i) {
    if (_gens[i].degree() < 1) {
      throw PreconditionError("generator polynomials must be non-constant");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (ext_gcd(_gens[i], _gens[j]).d.degree() > 0) {
        throw PreconditionError("generator polynomials " + to_string(_gens[j]) + " and "
                                + to_string(_gens[i])
                                + " are not relatively prime, so the action does "
                                  "not respect the order");
      }
    }
  }
}

Poly PolynomialAction::multiplier(Exponents const& p) const {
  Poly m = Poly::constant(1);
  for (auto const& [id, e] : p.terms) {
    if (id >= _gens.size()) {
      throw PreconditionError("unknown generator of P");
    }
    m = m * pow(_gens[id], e);
  }
  return m;
}

Poly PolynomialAction::apply(Exponents const& p, Group const& g) const {
  return multiplier(p) * g;
}

std::optional<Poly> PolynomialAction::preimage(Exponents const& p,
                                               Group const& g) const {
  auto [q, r] = divmod(g, multiplier(p));
  if (!r.is_zero()) {
    return std::nullopt;
  }
  return q;
}

Poly PolynomialAction::coset_rep(Exponents const& p, Group const& g) const {
  return divmod(g, multiplier(p)).remainder;
}

std::optional<std::pair<Poly, Poly>> PolynomialAction::solve(Exponents const& p1,
                                                             Exponents const& p2,
                                                             Group const& k) const {
  Poly m1 = multiplier(p1), m2 = multiplier(p2);
  // k = m2 a + m1 b
  auto [d, s, t] = ext_gcd(m2, m1);
  (void) t;
  auto [kd, rem] = divmod(k, d);
  if (!rem.is_zero()) {
    return std::nullopt;
  }
  Poly step = divmod(m1, d).quotient;
  Poly a    = divmod(s * kd, step).remainder;
  Poly b    = divmod(k - m2 * a, m1).quotient;
  return std::make_pair(a, b);
}

IndexInfo PolynomialAction::index(u64, std::vector<Group>*) const {
  return {false, 0};
}

Intersection<Poly> PolynomialAction::intersection(Presentation const&) const {
  if (_gens.empty()) {
    return {ImageIntersection::Kind::Nontrivial, Poly::constant(1), "P is trivial"};
  }
  return {ImageIntersection::Kind::Trivial, std::nullopt,
          "a nonzero polynomial has only finitely many divisors of the form p"};
}

std::vector<Poly> PolynomialAction::unit_generators() const {
  return {Poly::constant(1), Poly::monomial(1, 1)};
}

std::string PolynomialAction::describe() const {
  std::vector<std::string> g;
  for (auto const& p : _gens) {
    g.push_back(to_string(p));
  }
  return "Q[T] with P generated by " + join(g, ", ");
}

}  // namespace rlcm::detail
