#pragma once

#include <cstdint>      // for uint32_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "rlcm/arith.hpp"
#include "rlcm/semigroup.hpp"

namespace rlcm {

//! Finitely supported exponent vector: an element of the free commutative
//! monoid on generators indexed by u64 ids. Terms are sorted by id and have
//! positive exponents.
struct Exponents {
  std::vector<std::pair<u64, std::uint32_t>> terms;

  bool is_one() const {
    return terms.empty();
  }
  std::uint32_t exponent(u64 id) const;
  u64 degree() const;

  static Exponents generator(u64 id, std::uint32_t e = 1);

  friend bool operator==(Exponents const& a, Exponents const& b) {
    return a.terms == b.terms;
  }
  //! Total degree first, then lexicographic on terms.
  friend bool operator<(Exponents const& a, Exponents const& b);
};

std::size_t hash_value(Exponents const& e);

Exponents operator+(Exponents const& a, Exponents const& b);
//! Componentwise maximum.
Exponents lcm(Exponents const& a, Exponents const& b);
//! Componentwise minimum.
Exponents gcd(Exponents const& a, Exponents const& b);
bool divides(Exponents const& a, Exponents const& b);
//! b - a, if a divides b.
std::optional<Exponents> quotient(Exponents const& b, Exponents const& a);

//! How generator ids are named, printed and parsed.
class Presentation {
 public:
  enum class Kind {
    //! All of N^x: ids are the primes; printed as integers.
    AllPrimes,
    //! Submonoid of N^x on pairwise coprime integers; ids are the values.
    Integers,
    //! N^k with ids 0..k-1; printed as [e0,...,e(k-1)].
    Tuple
  };

  //! ball_primes are the generators used for enumeration.
  static Presentation all_primes(std::vector<u64> ball_primes);
  //! Throws PreconditionError unless the values are pairwise coprime and > 1.
  static Presentation integers(std::vector<u64> values);
  static Presentation tuple(unsigned rank);

  Kind kind() const {
    return _kind;
  }
  //! Generator ids used for enumeration.
  std::vector<u64> const& ids() const {
    return _ids;
  }
  bool is_integer() const {
    return _kind != Kind::Tuple;
  }
  //! Whether id names a generator of the monoid.
  bool valid_id(u64 id) const;
  //! Integer value of an element, saturating at the maximum u64.
  u64 value(Exponents const& e) const;
  //! Name of a single generator, e.g. "3" or "1".
  std::string id_name(u64 id) const;
  //! Inverse of id_name.
  u64 parse_id(std::string_view s) const;

  std::string format(Exponents const& e) const;
  Exponents parse(std::string_view s) const;

 private:
  Kind _kind = Kind::Tuple;
  std::vector<u64> _ids;
};

//! Free commutative monoids (N^x, N^k, submonoids of N^x on coprime
//! generators) and, with unital = false, the same monoid with the identity
//! removed.
class FreeAbelian final : public TypedSemigroup<Exponents> {
 public:
  FreeAbelian(std::string name, Presentation pres, bool unital = true);

  std::string name() const override {
    return _name;
  }
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

  Presentation const& presentation() const {
    return _pres;
  }
  bool unital() const {
    return _unital;
  }
  Element make(Exponents e) const;
  Exponents const& exponents(Element const& p) const {
    return unwrap(p);
  }

 private:
  std::string _name;
  Presentation _pres;
  bool _unital;
};

}  // namespace rlcm
