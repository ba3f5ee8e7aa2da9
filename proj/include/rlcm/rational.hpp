#pragma once

#include <gmpxx.h>

#include <cstddef>      // for size_t
#include <string>       // for string
#include <string_view>  // for string_view

namespace rlcm {

using Rational = mpq_class;
using Integer  = mpz_class;

std::size_t hash_value(Rational const& q);
std::string to_string(Rational const& q);

//! Parses "a" or "a/b" with an optional leading sign.
Rational parse_rational(std::string_view text);

//! Exact a + bi with rational parts.
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(Rational r) : re(std::move(r)), im(0) {}  // NOLINT(runtime/explicit)
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  Gaussian(long v) : re(v), im(0) {}  // NOLINT(runtime/explicit)

  bool is_zero() const {
    return sgn(re) == 0 && sgn(im) == 0;
  }
  bool is_real() const {
    return sgn(im) == 0;
  }
  Gaussian conj() const {
    return {re, -im};
  }
  //! |z|^2, always rational.
  Rational norm_squared() const {
    return re * re + im * im;
  }

  Gaussian& operator+=(Gaussian const& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian& operator-=(Gaussian const& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend Gaussian operator+(Gaussian a, Gaussian const& b) {
    return a += b;
  }
  friend Gaussian operator-(Gaussian a, Gaussian const& b) {
    return a -= b;
  }
  friend Gaussian operator-(Gaussian const& a) {
    return {-a.re, -a.im};
  }
  friend Gaussian operator*(Gaussian const& a, Gaussian const& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(Gaussian const& a, Gaussian const& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(Gaussian const& a, Gaussian const& b) {
    return !(a == b);
  }
};

//! Formats as "3/4", "-2i", "(1/2+3/4i)".
std::string to_string(Gaussian const& z);

//! Exact square root if q is the square of a rational.
bool exact_sqrt(Rational const& q, Rational& root);

}  // namespace rlcm
