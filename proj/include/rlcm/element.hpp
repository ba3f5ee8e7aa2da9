#pragma once

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t
#include <memory>   // for shared_ptr, make_shared
#include <utility>  // for move

namespace rlcm {

namespace detail {

class ElementConcept {
 public:
  ElementConcept(std::uint64_t family, std::size_t hash)
      : family(family), hash(hash) {}
  virtual ~ElementConcept() = default;

  // Both sides are guaranteed to have the same dynamic type.
  virtual bool equals(ElementConcept const& other) const = 0;
  virtual bool less(ElementConcept const& other) const   = 0;

  std::uint64_t const family;
  std::size_t const hash;
};

template <typename T>
class ElementModel final : public ElementConcept {
 public:
  ElementModel(std::uint64_t family, std::size_t hash, T v)
      : ElementConcept(family, hash), value(std::move(v)) {}

  bool equals(ElementConcept const& other) const override {
    return value == static_cast<ElementModel const&>(other).value;
  }
  bool less(ElementConcept const& other) const override {
    return value < static_cast<ElementModel const&>(other).value;
  }

  T const value;
};

}  // namespace detail

//! An immutable element of some semigroup family.
//!
//! The payload type is private to the family that created the element; the
//! family id guards against mixing elements of different semigroups.
//! Equality is structural on the canonical payload.
class Element {
 public:
  Element() = default;

  //! T must provide ==, < and a free function hash_value(T const&).
  template <typename T>
  static Element make(std::uint64_t family, T value) {
    std::size_t h = hash_value(value);
    Element e;
    e._impl = std::make_shared<detail::ElementModel<T> const>(
        family, h, std::move(value));
    return e;
  }

  bool valid() const noexcept {
    return _impl != nullptr;
  }
  std::uint64_t family() const noexcept {
    return _impl ? _impl->family : 0;
  }
  std::size_t hash() const noexcept {
    return _impl ? _impl->hash : 0;
  }

  template <typename T>
  T const& get() const {
    return static_cast<detail::ElementModel<T> const&>(*_impl).value;
  }

  friend bool operator==(Element const& a, Element const& b) {
    if (a._impl == b._impl) {
      return true;
    }
    if (!a._impl || !b._impl || a.family() != b.family() || a.hash() != b.hash()) {
      return false;
    }
    return a._impl->equals(*b._impl);
  }
  friend bool operator!=(Element const& a, Element const& b) {
    return !(a == b);
  }
  //! Total order: by family, then by the family's payload order.
  friend bool operator<(Element const& a, Element const& b) {
    if (a._impl == b._impl) {
      return false;
    }
    if (!a._impl || !b._impl) {
      return !a._impl;
    }
    if (a.family() != b.family()) {
      return a.family() < b.family();
    }
    return a._impl->less(*b._impl);
  }

 private:
  std::shared_ptr<detail::ElementConcept const> _impl;
};

struct ElementHash {
  std::size_t operator()(Element const& e) const noexcept {
    return e.hash();
  }
};

}  // namespace rlcm
