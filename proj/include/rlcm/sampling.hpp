#pragma once

#include <cstdint>  // for uint64_t
#include <random>   // for mt19937_64
#include <set>      // for set
#include <vector>   // for vector

#include "rlcm/star_algebra.hpp"

namespace rlcm {

//! Deterministic random elements of an algebra, drawn from a shortlex ball
//! of its semigroup. The same seed gives the same sequence.
class Sampler {
 public:
  Sampler(StarAlgebra const& alg, std::uint64_t seed, int radius = 2);

  std::vector<Element> const& pool() const {
    return _pool;
  }
  std::mt19937_64& rng() {
    return _rng;
  }
  std::size_t below(std::size_t n);

  Element element();
  Monomial monomial();
  //! Small nonzero coefficient; purely real unless complex is set.
  Gaussian coefficient(bool complex);
  AlgebraElement algebra_element(std::size_t max_terms, bool complex = true);
  DiagonalElement diagonal_element(std::size_t max_terms, bool complex = false);
  //! Distinct ideal classes, between 0 and max_size of them.
  std::set<IdealClass> ideal_set(std::size_t max_size);

 private:
  StarAlgebra const& _alg;
  std::mt19937_64 _rng;
  std::vector<Element> _pool;
};

}  // namespace rlcm
