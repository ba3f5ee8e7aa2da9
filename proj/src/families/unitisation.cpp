#include "rlcm/families/unitisation.hpp"

#include "rlcm/arith.hpp"
#include "rlcm/text.hpp"

namespace rlcm {

std::size_t hash_value(MaybeElement const& m) {
  return m.inner ? hash_combine(0x1234, m.inner->hash()) : 0x9876;
}

Unitisation::Unitisation(std::shared_ptr<Semigroup const> inner)
    : _inner(std::move(inner)) {
  if (_inner->identity()) {
    throw PreconditionError(_inner->name() + " already has an identity");
  }
}

std::string Unitisation::name() const {
  return _inner->name() + "~";
}

Element Unitisation::embed(Element const& s) const {
  _inner->check_family(s);
  return wrap(MaybeElement{s});
}

Element Unitisation::multiply(Element const& p, Element const& q) const {
  auto const& a = unwrap(p);
  auto const& b = unwrap(q);
  if (!a.inner) {
    return q;
  }
  if (!b.inner) {
    return p;
  }
  return wrap(MaybeElement{_inner->multiply(*a.inner, *b.inner)});
}

std::optional<Element> Unitisation::identity() const {
  return wrap(MaybeElement{});
}

bool Unitisation::is_unit(Element const& p) const {
  return !unwrap(p).inner;
}

Element Unitisation::unit_inverse(Element const& x) const {
  if (!is_unit(x)) {
    throw PreconditionError(format(x) + " is not a unit");
  }
  return x;
}

std::optional<Element> Unitisation::left_divide(Element const& p,
                                                Element const& r) const {
  auto const& a = unwrap(p);
  auto const& b = unwrap(r);
  if (!a.inner) {
    return r;
  }
  if (!b.inner) {
    return std::nullopt;
  }
  if (*a.inner == *b.inner) {
    return identity();
  }
  auto s = _inner->left_divide(*a.inner, *b.inner);
  if (!s) {
    return std::nullopt;
  }
  return wrap(MaybeElement{*s});
}

LcmOutcome Unitisation::right_lcm(Element const& p, Element const& q) const {
  auto const& a = unwrap(p);
  auto const& b = unwrap(q);
  if (!a.inner) {
    return LcmOutcome::of(q);
  }
  if (!b.inner || *a.inner == *b.inner) {
    return LcmOutcome::of(p);
  }
  if (_inner->left_divide(*a.inner, *b.inner)) {
    return LcmOutcome::of(q);
  }
  if (_inner->left_divide(*b.inner, *a.inner)) {
    return LcmOutcome::of(p);
  }
  auto r = _inner->right_lcm(*a.inner, *b.inner);
  if (r.is_disjoint()) {
    return LcmOutcome::disjoint();
  }
  return LcmOutcome::of(wrap(MaybeElement{*r.lcm}));
}

Element Unitisation::ideal_rep(Element const& p) const {
  check_family(p);
  return p;
}

std::optional<Element> Unitisation::unit_left_quotient(Element const& p,
                                                       Element const& q) const {
  if (unwrap(p) == unwrap(q)) {
    return identity();
  }
  return std::nullopt;
}

std::vector<Element> Unitisation::generators() const {
  std::vector<Element> out;
  for (auto const& g : _inner->generators()) {
    out.push_back(wrap(MaybeElement{g}));
  }
  return out;
}

std::string Unitisation::format(Element const& p) const {
  auto const& a = unwrap(p);
  return a.inner ? _inner->format(*a.inner) : "1";
}

Element Unitisation::parse(std::string_view text) const {
  if (trim(text) == "1") {
    return *identity();
  }
  return wrap(MaybeElement{_inner->parse(text)});
}

}  // namespace rlcm
