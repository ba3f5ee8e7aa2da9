#pragma once

#include <cstddef>        // for size_t
#include <map>            // for map
#include <optional>       // for optional
#include <string>         // for string
#include <unordered_map>  // for unordered_map
#include <vector>         // for vector

#include "rlcm/star_algebra.hpp"

namespace rlcm {

//! Finite set of basis vectors of l^2(S), in a fixed order.
class Ball {
 public:
  Ball() = default;
  Ball(std::vector<Element> elements, int radius);

  std::vector<Element> const& elements() const {
    return _elements;
  }
  std::size_t size() const {
    return _elements.size();
  }
  int radius() const {
    return _radius;
  }
  Element const& operator[](std::size_t i) const {
    return _elements[i];
  }
  std::optional<std::size_t> index_of(Element const& e) const;
  bool contains(Element const& e) const {
    return index_of(e).has_value();
  }
  //! Appends the elements not already present.
  void extend(std::vector<Element> const& extra);

 private:
  std::vector<Element> _elements;
  std::unordered_map<Element, std::size_t, ElementHash> _index;
  int _radius = 0;
};

//! Shortlex ball in the generators of the algebra's semigroup (the
//! unitisation for families without identity). Throws PreconditionError
//! when there are no generators.
Ball generate_ball(StarAlgebra const& alg, int radius);

//! Sparse matrix indexed by a ball. Column j is interior when every image
//! of basis vector j stayed inside the ball; only interior columns are
//! exact.
struct TruncatedOperator {
  //! columns[j] maps row index to entry.
  std::vector<std::map<std::size_t, Gaussian>> columns;
  std::vector<bool> interior;

  std::size_t dim() const {
    return columns.size();
  }
  Gaussian entry(std::size_t row, std::size_t col) const;
};

//! Truncated left regular representation: v_p v_q^* sends e_t to e_{p s}
//! when t = q s, and to 0 when t is not in qS.
TruncatedOperator represent(StarAlgebra const& alg, AlgebraElement const& a, Ball const& ball);

//! a b; a column is interior when it is interior in b and every basis
//! vector it reaches is interior in a.
TruncatedOperator compose(TruncatedOperator const& a, TruncatedOperator const& b);

struct CrosscheckReport {
  bool ok = true;
  std::size_t columns_compared = 0;
  std::size_t nonzero_entries  = 0;
  //! First offending basis vector, when not ok.
  std::string mismatch;
};

//! Compares two operators on the columns interior to both.
CrosscheckReport compare_interior(StarAlgebra const& alg,
                                  TruncatedOperator const& x,
                                  TruncatedOperator const& y,
                                  Ball const& ball);

//! represent(a b) against represent(a) represent(b).
CrosscheckReport crosscheck_product(StarAlgebra const& alg,
                                    AlgebraElement const& a,
                                    AlgebraElement const& b,
                                    Ball const& ball);

struct OracleNorm {
  //! Largest modulus of a diagonal entry, or its square when squared is
  //! set.
  Rational value;
  bool squared = false;
  //! Basis element where the largest entry sits.
  std::optional<Element> witness;
};

//! Lower bound for the norm of a diagonal element, read off the diagonal
//! of its truncated representation.
OracleNorm oracle_diagonal_norm(StarAlgebra const& alg, DiagonalElement const& d, Ball const& ball);

//! True if Q_{F,A} has a nonzero diagonal entry on the ball. False is
//! inconclusive.
bool oracle_projection_nonzero(StarAlgebra const& alg,
                               ProjectionSpec const& spec,
                               Ball const& ball);

//! "row col value" lines, one per nonzero entry, with 0-based ball
//! indices.
std::string dump_triplets(TruncatedOperator const& op);

}  // namespace rlcm
