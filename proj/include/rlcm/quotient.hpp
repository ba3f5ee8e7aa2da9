#pragma once

#include <cstddef>      // for size_t
#include <functional>   // for function
#include <memory>       // for shared_ptr
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "rlcm/semigroup.hpp"
#include "rlcm/verdict.hpp"

namespace rlcm {

//! Payload of a quotient element: the canonical representative of S^* a.
struct UnitClass {
  Element rep;

  friend bool operator==(UnitClass const& a, UnitClass const& b) {
    return a.rep == b.rep;
  }
  friend bool operator<(UnitClass const& a, UnitClass const& b) {
    return a.rep < b.rep;
  }
};

std::size_t hash_value(UnitClass const& c);

//! The quotient of S by a ~ b iff a = xb for a unit x, with
//! [a][b] = [ab]. Requires C1, which makes ~ a congruence.
//!
//! Divisibility and LCMs are computed on the canonical representatives,
//! which is exact when the representatives form a submonoid closed under
//! left division (as (1, p) does in G x P).
class Quotient final : public TypedSemigroup<UnitClass> {
 public:
  //! Throws PreconditionError if S cannot compute canonical class
  //! representatives. Prefer build_quotient, which also checks C1.
  explicit Quotient(std::shared_ptr<Semigroup const> S);

  Semigroup const& base() const {
    return *_S;
  }
  Element class_of(Element const& a) const;
  Element representative(Element const& c) const {
    return unwrap(c).rep;
  }

  std::string name() const override;
  Element multiply(Element const& a, Element const& b) const override;
  std::optional<Element> identity() const override;
  bool is_unit(Element const& a) const override;
  Element unit_inverse(Element const& a) const override;
  std::optional<Element> left_divide(Element const& a, Element const& r) const override;
  LcmOutcome right_lcm(Element const& a, Element const& b) const override;
  Element ideal_rep(Element const& a) const override {
    return a;
  }
  std::optional<Element> unit_left_quotient(Element const& a,
                                            Element const& b) const override;
  std::vector<Element> generators() const override;
  //! "[rep]".
  std::string format(Element const& a) const override;
  //! Accepts "[a]" or a bare element of S.
  Element parse(std::string_view text) const override;
  bool has_trivial_units() const override {
    return true;
  }

 private:
  std::shared_ptr<Semigroup const> _S;
};

//! Checks on sampled data that ~ is a congruence ([cad] = [cbd] for
//! a ~ b) and that the only invertible class is [1].
Verdict validate_quotient(Quotient const& Q, SearchBudget const& budget);

//! Throws PreconditionError unless check_C1 holds, and Error if the
//! sampled validation fails.
std::shared_ptr<Quotient const> build_quotient(std::shared_ptr<Semigroup const> S,
                                               SearchBudget const& budget);

//! A section of S -> Q, mapping classes to elements of S.
using Transversal = std::function<Element(Element const&)>;

//! [a] -> canonical representative.
Transversal canonical_transversal(Quotient const& Q);

//! The unit y with p x = y p, if there is one.
std::optional<Element> theta(Semigroup const& S, Element const& p, Element const& x);

struct ReconstructionReport {
  //! Holds when every check passes; Fails carries the offending elements.
  Verdict verdict;
  std::size_t units   = 0;
  std::size_t classes = 0;
  //! Elements of the S-ball given a preimage.
  std::size_t ball_size = 0;
  std::size_t checks    = 0;
};

//! Rebuilds S as S^* x_theta Q from the transversal T, with
//! theta_c(x) = the unit y with T(c) x = y T(c), and verifies that
//! phi(x, c) = x T(c) is a homomorphism, injective on the unit ball times
//! the class ball, and that every element of the S-ball has a preimage.
//! Radii come from budget.radius; homomorphism and action checks use unit
//! radius at most 2.
ReconstructionReport reconstruct_semidirect(Quotient const& Q,
                                            Transversal const& T,
                                            SearchBudget const& budget);

}  // namespace rlcm
