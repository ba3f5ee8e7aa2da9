#pragma once

#include <memory>       // for shared_ptr
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "rlcm/semigroup.hpp"

namespace rlcm {

//! Payload of the unitisation: empty for the adjoined identity.
struct MaybeElement {
  std::optional<Element> inner;

  friend bool operator==(MaybeElement const& a, MaybeElement const& b) {
    return a.inner == b.inner;
  }
  friend bool operator<(MaybeElement const& a, MaybeElement const& b) {
    if (!a.inner || !b.inner) {
      return !a.inner && b.inner;
    }
    return *a.inner < *b.inner;
  }
};

std::size_t hash_value(MaybeElement const& m);

//! S with an identity adjoined, for a semigroup S without units.
//!
//! Right LCMs of elements of S agree in S and in the unitisation: equal
//! elements and comparable ideals are handled directly, everything else is
//! delegated to S.
class Unitisation final : public TypedSemigroup<MaybeElement> {
 public:
  //! Throws PreconditionError if inner already has an identity.
  explicit Unitisation(std::shared_ptr<Semigroup const> inner);

  std::string name() const override;
  Element multiply(Element const& p, Element const& q) const override;
  std::optional<Element> identity() const override;
  bool is_unit(Element const& p) const override;
  Element unit_inverse(Element const& x) const override;
  std::optional<Element> left_divide(Element const& p, Element const& r) const override;
  LcmOutcome right_lcm(Element const& p, Element const& q) const override;
  Element ideal_rep(Element const& p) const override;
  std::optional<Element> unit_left_quotient(Element const& p,
                                            Element const& q) const override;
  std::vector<Element> generators() const override;
  std::string format(Element const& p) const override;
  Element parse(std::string_view text) const override;
  bool has_trivial_units() const override {
    return true;
  }

  Semigroup const& inner() const {
    return *_inner;
  }
  //! Embeds an element of S.
  Element embed(Element const& s) const;
  //! The element of S, or empty for the adjoined identity.
  std::optional<Element> restrict(Element const& p) const {
    return unwrap(p).inner;
  }

 private:
  std::shared_ptr<Semigroup const> _inner;
};

}  // namespace rlcm
