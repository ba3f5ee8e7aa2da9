#include "rlcm/sampling.hpp"

namespace rlcm {

Sampler::Sampler(StarAlgebra const& alg, std::uint64_t seed, int radius)
    : _alg(alg), _rng(seed) {
  auto const& S = alg.semigroup();
  _pool         = enumerate_shortlex(S, S.generators(), radius);
  if (_pool.empty()) {
    throw PreconditionError(S.name() + " has an empty sampling ball");
  }
}

std::size_t Sampler::below(std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(_rng);
}

Element Sampler::element() {
  return _pool[below(_pool.size())];
}

Monomial Sampler::monomial() {
  Element p = element();
  Element q = element();
  return _alg.monomial(p, q);
}

Gaussian Sampler::coefficient(bool complex) {
  auto pick = [&] {
    static long const kValues[] = {-3, -2, -1, 1, 2, 3};
    Rational r(kValues[below(6)]);
    if (below(4) == 0) {
      r /= 2;
    }
    return r;
  };
  Rational re = pick();
  if (complex && below(3) == 0) {
    return {below(2) == 0 ? Rational(0) : re, pick()};
  }
  return re;
}

AlgebraElement Sampler::algebra_element(std::size_t max_terms, bool complex) {
  AlgebraElement a;
  std::size_t n = 1 + below(max_terms);
  for (std::size_t i = 0; i < n; ++i) {
    a.add(monomial(), coefficient(complex));
  }
  return a;
}

DiagonalElement Sampler::diagonal_element(std::size_t max_terms, bool complex) {
  DiagonalElement d;
  std::size_t n = 1 + below(max_terms);
  for (std::size_t i = 0; i < n; ++i) {
    d.add(_alg.ideal(element()), coefficient(complex));
  }
  return d;
}

std::set<IdealClass> Sampler::ideal_set(std::size_t max_size) {
  std::set<IdealClass> F;
  std::size_t n = below(max_size + 1);
  for (std::size_t i = 0; i < n; ++i) {
    F.insert(_alg.ideal(element()));
  }
  return F;
}

}  // namespace rlcm
