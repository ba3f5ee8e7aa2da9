#pragma once

#include <map>          // for map
#include <memory>       // for shared_ptr
#include <optional>     // for optional
#include <set>          // for set
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "rlcm/families/unitisation.hpp"
#include "rlcm/rational.hpp"
#include "rlcm/semigroup.hpp"
#include "rlcm/verdict.hpp"

namespace rlcm {

//! The monomial v_p v_q^*. Built through StarAlgebra::monomial, which
//! replaces q by its ideal representative q x and p by p x, so that
//! (p, q) and (p x, q x) give the same key for every unit x.
struct Monomial {
  Element p;
  Element q;

  bool is_diagonal() const {
    return p == q;
  }

  friend bool operator==(Monomial const& a, Monomial const& b) {
    return a.p == b.p && a.q == b.q;
  }
  friend bool operator!=(Monomial const& a, Monomial const& b) {
    return !(a == b);
  }
  friend bool operator<(Monomial const& a, Monomial const& b) {
    if (a.p != b.p) {
      return a.p < b.p;
    }
    return a.q < b.q;
  }
};

//! Finite linear combination with Gaussian rational coefficients. Zero
//! coefficients are never stored.
template <typename Key>
class LinearCombination {
 public:
  using Terms = std::map<Key, Gaussian>;

  LinearCombination() = default;

  static LinearCombination of(Key k, Gaussian c = Gaussian(1)) {
    LinearCombination out;
    out.add(std::move(k), c);
    return out;
  }

  Terms const& terms() const {
    return _terms;
  }
  bool is_zero() const {
    return _terms.empty();
  }
  std::size_t size() const {
    return _terms.size();
  }
  Gaussian coefficient(Key const& k) const {
    auto it = _terms.find(k);
    return it == _terms.end() ? Gaussian() : it->second;
  }

  void add(Key k, Gaussian const& c) {
    if (c.is_zero()) {
      return;
    }
    auto [it, fresh] = _terms.emplace(std::move(k), c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) {
        _terms.erase(it);
      }
    }
  }

  LinearCombination& operator+=(LinearCombination const& o) {
    for (auto const& [k, c] : o._terms) {
      add(k, c);
    }
    return *this;
  }
  LinearCombination& operator-=(LinearCombination const& o) {
    for (auto const& [k, c] : o._terms) {
      add(k, -c);
    }
    return *this;
  }
  friend LinearCombination operator+(LinearCombination a, LinearCombination const& b) {
    return a += b;
  }
  friend LinearCombination operator-(LinearCombination a, LinearCombination const& b) {
    return a -= b;
  }
  friend LinearCombination operator*(Gaussian const& c, LinearCombination const& a) {
    LinearCombination out;
    for (auto const& [k, x] : a._terms) {
      out.add(k, c * x);
    }
    return out;
  }
  friend bool operator==(LinearCombination const& a, LinearCombination const& b) {
    return a._terms == b._terms;
  }
  friend bool operator!=(LinearCombination const& a, LinearCombination const& b) {
    return !(a == b);
  }

 private:
  Terms _terms;
};

//! Element of span{v_p v_q^*}.
using AlgebraElement = LinearCombination<Monomial>;
//! Element of the diagonal, as a combination of the projections e_{pS}.
using DiagonalElement = LinearCombination<IdealClass>;

//! Q_{F,A}: the product of e_X over X in A and of (1 - e_X) over X in F \ A.
struct ProjectionSpec {
  std::set<IdealClass> F;
  std::set<IdealClass> A;
};

//! Exact norm of a diagonal element.
struct DiagonalNorm {
  Outcome outcome = Outcome::Unknown;
  //! The norm, or its square when squared is set (complex coefficients
  //! whose modulus is irrational).
  Rational value;
  bool squared = false;
  //! The subset A attaining the maximum and sigma_A, a basis element on
  //! which the maximum is seen.
  std::set<IdealClass> argmax;
  std::optional<Element> witness;
  std::string detail;
};

//! Exact arithmetic in the span of the monomials v_p v_q^* of a right LCM
//! semigroup. A semigroup without identity is replaced by its unitisation,
//! so the algebra always has a unit 1 = v_1 v_1^*.
class StarAlgebra {
 public:
  explicit StarAlgebra(std::shared_ptr<Semigroup const> S);

  //! The semigroup the algebra is built on (the unitisation when the input
  //! has no identity).
  Semigroup const& semigroup() const {
    return *_S;
  }
  Semigroup const& base() const {
    return *_base;
  }
  bool unitised() const {
    return _unitisation != nullptr;
  }
  //! Maps an element of base() into semigroup().
  Element lift(Element const& s) const;
  Element identity() const {
    return _one;
  }

  Monomial monomial(Element const& p, Element const& q) const;
  AlgebraElement one() const;
  AlgebraElement v(Element const& p) const;
  AlgebraElement v_star(Element const& q) const;
  AlgebraElement e(Element const& p) const;

  //! v_p v_q^* v_r v_s^*: zero when qS and rS are disjoint, otherwise
  //! v_{p q'} v_{s r'}^* with q q' = r r' the lcm of q and r.
  AlgebraElement mono_mul(Monomial const& a, Monomial const& b) const;
  AlgebraElement mul(AlgebraElement const& a, AlgebraElement const& b) const;
  AlgebraElement adjoint(AlgebraElement const& a) const;

  //! Keeps the monomials with p = q.
  DiagonalElement phi_D(AlgebraElement const& a) const;
  //! Keeps the monomials v_p v_q^* with p = x q for a unit x.
  AlgebraElement phi_CI(AlgebraElement const& a) const;
  //! e_{qS} v_x -> [x = 1] e_{qS} on elements of the inner core. Throws
  //! PreconditionError on a monomial outside it.
  AlgebraElement phi_0(AlgebraElement const& a) const;

  AlgebraElement to_algebra(DiagonalElement const& d) const;
  //! e_{pS} e_{qS} = e_{rS} for the lcm r, or 0.
  DiagonalElement diag_mul(DiagonalElement const& a, DiagonalElement const& b) const;
  IdealClass ideal(Element const& p) const;

  //! Exact expansion of Q_{F,A} in the diagonal.
  DiagonalElement q_projection(ProjectionSpec const& spec) const;
  //! Q_{F,A} != 0 iff the lcm sigma_A of A exists and sigma_A S is not
  //! contained in the union of the ideals in F \ A.
  Verdict is_nonzero_projection(ProjectionSpec const& spec,
                                SearchBudget const& budget) const;
  //! Expands the sum of Q_{F,A} over all A in F and compares it with 1.
  bool q_sum_identity(std::set<IdealClass> const& F) const;
  //! max |sum_{X in A} lambda_X| over the A in F with Q_{F,A} != 0.
  DiagonalNorm diagonal_norm(DiagonalElement const& d, SearchBudget const& budget) const;

  std::string format(Monomial const& m) const;
  std::string format(AlgebraElement const& a) const;
  std::string format(DiagonalElement const& d) const;
  //! Sums and products of v[p], v*[q], e[p], 1, i and rational literals,
  //! with parentheses. Juxtaposition or '*' multiplies. Throws ParseError.
  AlgebraElement parse(std::string_view text) const;

  //! Deliberately wrong multiplication, used to check that the oracle
  //! catches rewriting errors: the two lcm cofactors are exchanged.
  void inject_fault(bool on) {
    _fault = on;
  }

 private:
  std::shared_ptr<Semigroup const> _base;
  std::shared_ptr<Unitisation const> _unitisation;
  Semigroup const* _S;
  Element _one;
  bool _fault = false;
};

}  // namespace rlcm
