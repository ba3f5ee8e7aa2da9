#include "rlcm/families/polynomial.hpp"

#include <cctype>  // for isdigit, isspace

#include "rlcm/arith.hpp"
#include "rlcm/error.hpp"

namespace rlcm {

namespace {
void normalize(std::vector<Rational>& c) {
  while (!c.empty() && sgn(c.back()) == 0) {
    c.pop_back();
  }
}
}  // namespace

Poly::Poly(std::vector<Rational> c) : coeffs(std::move(c)) {
  normalize(coeffs);
}

Poly Poly::constant(Rational c) {
  return Poly(std::vector<Rational>{std::move(c)});
}

Poly Poly::monomial(Rational c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = std::move(c);
  return Poly(std::move(v));
}

bool operator<(Poly const& a, Poly const& b) {
  if (a.degree() != b.degree()) {
    return a.degree() < b.degree();
  }
  for (long i = a.degree(); i >= 0; --i) {
    if (a.coeffs[i] != b.coeffs[i]) {
      return a.coeffs[i] < b.coeffs[i];
    }
  }
  return false;
}

std::size_t hash_value(Poly const& p) {
  std::size_t h = 0xabcdef;
  for (auto const& c : p.coeffs) {
    h = hash_combine(h, hash_value(c));
  }
  return h;
}

Poly operator+(Poly const& a, Poly const& b) {
  std::vector<Rational> c(std::max(a.coeffs.size(), b.coeffs.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    c[i] += a.coeffs[i];
  }
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) {
    c[i] += b.coeffs[i];
  }
  return Poly(std::move(c));
}

Poly operator-(Poly const& a) {
  std::vector<Rational> c = a.coeffs;
  for (auto& x : c) {
    x = -x;
  }
  return Poly(std::move(c));
}

Poly operator-(Poly const& a, Poly const& b) {
  return a + (-b);
}

Poly operator*(Poly const& a, Poly const& b) {
  if (a.is_zero() || b.is_zero()) {
    return {};
  }
  std::vector<Rational> c(a.coeffs.size() + b.coeffs.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      c[i + j] += a.coeffs[i] * b.coeffs[j];
    }
  }
  return Poly(std::move(c));
}

Poly pow(Poly const& a, unsigned e) {
  Poly r = Poly::constant(1);
  for (unsigned i = 0; i < e; ++i) {
    r = r * a;
  }
  return r;
}

PolyDivision divmod(Poly const& a, Poly const& b) {
  if (b.is_zero()) {
    throw PreconditionError("polynomial division by zero");
  }
  Poly r = a;
  std::vector<Rational> q(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0,
                          Rational(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    std::size_t shift = r.degree() - b.degree();
    Rational f        = r.lead() / b.lead();
    q[shift]          = f;
    r                 = r - Poly::monomial(f, shift) * b;
  }
  return {Poly(std::move(q)), r};
}

PolyGcd ext_gcd(Poly const& a, Poly const& b) {
  Poly old_r = a, r = b;
  Poly old_s = Poly::constant(1), s;
  Poly old_t, t = Poly::constant(1);
  while (!r.is_zero()) {
    auto [q, rem] = divmod(old_r, r);
    old_r         = r;
    r             = rem;
    Poly tmp      = old_s - q * s;
    old_s         = s;
    s             = tmp;
    tmp           = old_t - q * t;
    old_t         = t;
    t             = tmp;
  }
  if (old_r.is_zero()) {
    return {old_r, old_s, old_t};
  }
  Poly inv = Poly::constant(1 / old_r.lead());
  return {old_r * inv, old_s * inv, old_t * inv};
}

std::string to_string(Poly const& p) {
  if (p.is_zero()) {
    return "0";
  }
  std::string out;
  for (long i = p.degree(); i >= 0; --i) {
    Rational const& c = p.coeffs[i];
    if (sgn(c) == 0) {
      continue;
    }
    Rational mag = abs(c);
    if (sgn(c) < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (i == 0 || mag != 1) {
      out += to_string(mag);
    }
    if (i >= 1) {
      out += "T";
    }
    if (i >= 2) {
      out += "^" + std::to_string(i);
    }
  }
  return out;
}

Poly parse_poly(std::string_view s) {
  std::string t;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      t += c;
    }
  }
  if (t.empty()) {
    throw ParseError("empty polynomial", 0);
  }
  Poly out;
  std::size_t i = 0;
  auto number   = [&]() {
    std::size_t start = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
      ++i;
    }
    if (i < t.size() && t[i] == '/') {
      ++i;
      while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
        ++i;
      }
    }
    return parse_rational(std::string_view(t).substr(start, i - start));
  };
  while (i < t.size()) {
    Rational sign = 1;
    if (t[i] == '+' || t[i] == '-') {
      sign = t[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw ParseError("expected '+' or '-'", i);
    }
    Rational coef = 1;
    bool have     = false;
    if (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
      coef = number();
      have = true;
    }
    if (i < t.size() && t[i] == '*') {
      ++i;
    }
    std::size_t deg = 0;
    if (i < t.size() && t[i] == 'T') {
      ++i;
      deg = 1;
      if (i < t.size() && t[i] == '^') {
        ++i;
        std::size_t start = i;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
          ++i;
        }
        if (start == i) {
          throw ParseError("expected exponent", i);
        }
        deg = std::stoul(t.substr(start, i - start));
      }
    } else if (!have) {
      throw ParseError("expected a coefficient or T", i);
    }
    out = out + Poly::monomial(sign * coef, deg);
  }
  return out;
}

}  // namespace rlcm
