#pragma once

#include <cstdint>      // for uint64_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for move
#include <vector>       // for vector

#include "rlcm/element.hpp"
#include "rlcm/error.hpp"
#include "rlcm/verdict.hpp"

namespace rlcm {

class SemidirectView;
class SelfSimilarView;

//! Outcome of intersecting two principal right ideals.
struct LcmOutcome {
  //! Empty when pS and qS are disjoint.
  std::optional<Element> lcm;

  static LcmOutcome disjoint() {
    return {};
  }
  static LcmOutcome of(Element r) {
    return {std::move(r)};
  }
  bool is_disjoint() const {
    return !lcm.has_value();
  }
};

//! Interface implemented by every semigroup family.
//!
//! Families are right LCM semigroups: left cancellative, with any two
//! principal right ideals either disjoint or equal to a principal right
//! ideal.
class Semigroup {
 public:
  Semigroup();
  virtual ~Semigroup() = default;

  Semigroup(Semigroup const&)            = delete;
  Semigroup& operator=(Semigroup const&) = delete;

  std::uint64_t id() const noexcept {
    return _id;
  }

  virtual std::string name() const = 0;

  virtual Element multiply(Element const& p, Element const& q) const = 0;

  //! The identity, if the semigroup is a monoid.
  virtual std::optional<Element> identity() const = 0;

  virtual bool is_unit(Element const& p) const = 0;

  //! Throws PreconditionError if x is not a unit.
  virtual Element unit_inverse(Element const& x) const = 0;

  //! The unique s with p s = r, if r lies in pS.
  virtual std::optional<Element> left_divide(Element const& p,
                                             Element const& r) const
      = 0;

  //! Generator of pS intersected with qS, normalised by ideal_rep.
  virtual LcmOutcome right_lcm(Element const& p, Element const& q) const = 0;

  //! Deterministic representative of pS.
  virtual Element ideal_rep(Element const& p) const = 0;

  //! A unit x with p = x q, if one exists.
  virtual std::optional<Element> unit_left_quotient(Element const& p,
                                                    Element const& q) const
      = 0;

  //! Registered generators, in enumeration order.
  virtual std::vector<Element> generators() const = 0;

  //! Generators of the unit group, used to sample units. Defaults to the
  //! units among generators() and their inverses.
  virtual std::vector<Element> unit_generators() const;

  virtual std::string format(Element const& p) const = 0;

  //! Throws ParseError on malformed text.
  virtual Element parse(std::string_view text) const = 0;

  //! True when the only unit is the identity (or there are none).
  virtual bool has_trivial_units() const = 0;

  //! Canonical representative of the class S^* a, when the family can
  //! compute it.
  virtual std::optional<Element> left_unit_rep(Element const& a) const;

  //! Structural data for semidirect products, or nullptr.
  virtual SemidirectView const* semidirect() const {
    return nullptr;
  }
  //! Structural data for Zappa-Szep products of self-similar actions.
  virtual SelfSimilarView const* self_similar() const {
    return nullptr;
  }

  //! Throws FamilyMismatch unless e was created by this family.
  void check_family(Element const& e) const;

 private:
  std::uint64_t _id;
};

//! Helper base for families with a single payload type.
template <typename Value>
class TypedSemigroup : public Semigroup {
 protected:
  Element wrap(Value v) const {
    return Element::make<Value>(id(), std::move(v));
  }
  Value const& unwrap(Element const& e) const {
    check_family(e);
    return e.get<Value>();
  }
};

//! A principal right ideal pS, held by its canonical representative.
struct IdealClass {
  Element rep;

  friend bool operator==(IdealClass const& a, IdealClass const& b) {
    return a.rep == b.rep;
  }
  friend bool operator!=(IdealClass const& a, IdealClass const& b) {
    return !(a == b);
  }
  friend bool operator<(IdealClass const& a, IdealClass const& b) {
    return a.rep < b.rep;
  }
};

IdealClass ideal_class(Semigroup const& S, Element const& p);

//! pS = qS, i.e. q = p x for a unit x.
bool ideal_equal(Semigroup const& S, Element const& p, Element const& q);

//! t lies in pS.
bool in_ideal(Semigroup const& S, Element const& p, Element const& t);

//! qS is contained in pS.
bool ideal_contains(Semigroup const& S, Element const& p, Element const& q);

//! Product of a nonempty list of factors, left to right.
Element product(Semigroup const& S, std::vector<Element> const& factors);

//! Does sigma S meet S minus the union of the obstacle ideals?
struct ResidualQuery {
  Element sigma;
  std::vector<Element> obstacles;
};

//! Holds with a witness in sigma S outside every obstacle ideal, Fails when
//! sigma S is contained in an obstacle ideal, Unknown when the bounded
//! search is exhausted.
Verdict residual_nonempty(Semigroup const& S,
                          ResidualQuery const& query,
                          SearchBudget const& budget);

//! Elements reachable by words of length at most radius in the given
//! generators, in shortlex order of their least word. Starts from the
//! identity when there is one. Stops after max_size elements (0: no limit).
std::vector<Element> enumerate_shortlex(Semigroup const& S,
                                        std::vector<Element> const& gens,
                                        int radius,
                                        std::size_t max_size = 0);

//! Formats a list of elements as "{a, b, c}".
std::string format_list(Semigroup const& S, std::vector<Element> const& xs);

}  // namespace rlcm
