#pragma once

#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "rlcm/rational.hpp"

namespace rlcm {

//! Polynomial in Q[T]; coeffs[i] is the coefficient of T^i, with no
//! trailing zeros (the zero polynomial has no coefficients).
struct Poly {
  std::vector<Rational> coeffs;

  Poly() = default;
  explicit Poly(std::vector<Rational> c);
  static Poly constant(Rational c);
  static Poly monomial(Rational c, std::size_t degree);

  bool is_zero() const {
    return coeffs.empty();
  }
  //! -1 for the zero polynomial.
  long degree() const {
    return static_cast<long>(coeffs.size()) - 1;
  }
  Rational const& lead() const {
    return coeffs.back();
  }

  friend bool operator==(Poly const& a, Poly const& b) {
    return a.coeffs == b.coeffs;
  }
  //! Degree first, then coefficients from the top.
  friend bool operator<(Poly const& a, Poly const& b);
};

std::size_t hash_value(Poly const& p);

Poly operator+(Poly const& a, Poly const& b);
Poly operator-(Poly const& a, Poly const& b);
Poly operator-(Poly const& a);
Poly operator*(Poly const& a, Poly const& b);
Poly pow(Poly const& a, unsigned e);

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};
//! Throws PreconditionError on division by zero.
PolyDivision divmod(Poly const& a, Poly const& b);

//! Monic gcd with Bezout coefficients: s*a + t*b = d.
struct PolyGcd {
  Poly d, s, t;
};
PolyGcd ext_gcd(Poly const& a, Poly const& b);

//! Formats as e.g. "T^2-1/2T+3"; zero is "0".
std::string to_string(Poly const& p);
//! Parses the format of to_string; throws ParseError.
Poly parse_poly(std::string_view s);

}  // namespace rlcm
