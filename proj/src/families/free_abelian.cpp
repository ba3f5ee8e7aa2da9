#include "rlcm/families/free_abelian.hpp"

#include <algorithm>  // for max, min
#include <limits>     // for numeric_limits

#include "rlcm/text.hpp"

namespace rlcm {

std::uint32_t Exponents::exponent(u64 id) const {
  for (auto const& [i, e] : terms) {
    if (i == id) {
      return e;
    }
  }
  return 0;
}

u64 Exponents::degree() const {
  u64 d = 0;
  for (auto const& t : terms) {
    d += t.second;
  }
  return d;
}

Exponents Exponents::generator(u64 id, std::uint32_t e) {
  Exponents x;
  if (e > 0) {
    x.terms.emplace_back(id, e);
  }
  return x;
}

bool operator<(Exponents const& a, Exponents const& b) {
  u64 da = a.degree(), db = b.degree();
  if (da != db) {
    return da < db;
  }
  // Larger exponent on the smaller id comes first: 2 < 3 < 5 in N^x.
  std::size_t n = std::min(a.terms.size(), b.terms.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.terms[i].first != b.terms[i].first) {
      return a.terms[i].first < b.terms[i].first;
    }
    if (a.terms[i].second != b.terms[i].second) {
      return a.terms[i].second > b.terms[i].second;
    }
  }
  return a.terms.size() < b.terms.size();
}

std::size_t hash_value(Exponents const& e) {
  std::size_t h = 0x51ed27;
  for (auto const& [i, x] : e.terms) {
    h = hash_combine(hash_combine(h, i), x);
  }
  return h;
}

namespace {

template <typename F>
Exponents merge(Exponents const& a, Exponents const& b, F combine) {
  Exponents out;
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    u64 id;
    std::uint32_t x = 0, y = 0;
    if (j == b.terms.size()
        || (i < a.terms.size() && a.terms[i].first < b.terms[j].first)) {
      id = a.terms[i].first;
      x  = a.terms[i++].second;
    } else if (i == a.terms.size() || b.terms[j].first < a.terms[i].first) {
      id = b.terms[j].first;
      y  = b.terms[j++].second;
    } else {
      id = a.terms[i].first;
      x  = a.terms[i++].second;
      y  = b.terms[j++].second;
    }
    std::uint32_t z = combine(x, y);
    if (z > 0) {
      out.terms.emplace_back(id, z);
    }
  }
  return out;
}

}  // namespace

Exponents operator+(Exponents const& a, Exponents const& b) {
  return merge(a, b, [](std::uint32_t x, std::uint32_t y) { return x + y; });
}

Exponents lcm(Exponents const& a, Exponents const& b) {
  return merge(a, b, [](std::uint32_t x, std::uint32_t y) { return std::max(x, y); });
}

Exponents gcd(Exponents const& a, Exponents const& b) {
  return merge(a, b, [](std::uint32_t x, std::uint32_t y) { return std::min(x, y); });
}

bool divides(Exponents const& a, Exponents const& b) {
  for (auto const& [id, e] : a.terms) {
    if (b.exponent(id) < e) {
      return false;
    }
  }
  return true;
}

std::optional<Exponents> quotient(Exponents const& b, Exponents const& a) {
  if (!divides(a, b)) {
    return std::nullopt;
  }
  return merge(b, a, [](std::uint32_t x, std::uint32_t y) { return x - y; });
}

////////////////////////////////////////////////////////////////////////
// Presentation
////////////////////////////////////////////////////////////////////////

Presentation Presentation::all_primes(std::vector<u64> ball_primes) {
  for (u64 p : ball_primes) {
    if (!is_prime(p)) {
      throw PreconditionError(std::to_string(p) + " is not prime");
    }
  }
  Presentation P;
  P._kind = Kind::AllPrimes;
  P._ids  = std::move(ball_primes);
  return P;
}

Presentation Presentation::integers(std::vector<u64> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 2) {
      throw PreconditionError("generators must be at least 2");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (rlcm::gcd(static_cast<i64>(values[i]), static_cast<i64>(values[j])) != 1) {
        throw PreconditionError("generators " + std::to_string(values[j]) + " and "
                                + std::to_string(values[i])
                                + " are not relatively prime");
      }
    }
  }
  Presentation P;
  P._kind = Kind::Integers;
  P._ids  = std::move(values);
  return P;
}

Presentation Presentation::tuple(unsigned rank) {
  Presentation P;
  P._kind = Kind::Tuple;
  for (unsigned i = 0; i < rank; ++i) {
    P._ids.push_back(i);
  }
  return P;
}

bool Presentation::valid_id(u64 id) const {
  if (_kind == Kind::AllPrimes) {
    return is_prime(id);
  }
  return std::find(_ids.begin(), _ids.end(), id) != _ids.end();
}

u64 Presentation::value(Exponents const& e) const {
  if (_kind == Kind::Tuple) {
    throw PreconditionError("tuple presentation has no integer value");
  }
  constexpr u64 kMax = std::numeric_limits<u64>::max();
  u64 v              = 1;
  for (auto const& [id, x] : e.terms) {
    for (std::uint32_t k = 0; k < x; ++k) {
      if (v > kMax / id) {
        return kMax;
      }
      v *= id;
    }
  }
  return v;
}

std::string Presentation::id_name(u64 id) const {
  return std::to_string(id);
}

u64 Presentation::parse_id(std::string_view s) const {
  i64 v = parse_int(s);
  if (v < 0 || !valid_id(static_cast<u64>(v))) {
    throw ParseError("unknown generator '" + std::string(s) + "'", 0);
  }
  return static_cast<u64>(v);
}

std::string Presentation::format(Exponents const& e) const {
  if (_kind == Kind::Tuple) {
    std::vector<std::string> parts;
    for (u64 id : _ids) {
      parts.push_back(std::to_string(e.exponent(id)));
    }
    return "[" + join(parts, ",") + "]";
  }
  u64 v = value(e);
  if (v == std::numeric_limits<u64>::max()) {
    std::vector<std::string> parts;
    for (auto const& [id, x] : e.terms) {
      parts.push_back(std::to_string(id) + "^" + std::to_string(x));
    }
    return join(parts, "*");
  }
  return std::to_string(v);
}

Exponents Presentation::parse(std::string_view s) const {
  s = trim(s);
  if (_kind == Kind::Tuple) {
    if (s == "1") {
      return {};
    }
    auto parts = split_top_level(unwrap(s, '[', ']'), ',');
    if (parts.size() != _ids.size()) {
      throw ParseError("expected " + std::to_string(_ids.size()) + " exponents in '"
                           + std::string(s) + "'",
                       0);
    }
    Exponents e;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      i64 x = parse_int(parts[i]);
      if (x < 0) {
        throw ParseError("negative exponent", 0);
      }
      if (x > 0) {
        e.terms.emplace_back(_ids[i], static_cast<std::uint32_t>(x));
      }
    }
    return e;
  }
  i64 v = parse_int(s);
  if (v < 1) {
    throw ParseError("expected a positive integer, got '" + std::string(s) + "'", 0);
  }
  u64 n = static_cast<u64>(v);
  Exponents e;
  if (_kind == Kind::AllPrimes) {
    for (auto const& [p, x] : factorize(n)) {
      e.terms.emplace_back(p, x);
    }
    return e;
  }
  std::vector<u64> sorted = _ids;
  std::sort(sorted.begin(), sorted.end());
  for (u64 g : sorted) {
    std::uint32_t x = 0;
    while (n % g == 0) {
      n /= g;
      ++x;
    }
    if (x > 0) {
      e.terms.emplace_back(g, x);
    }
  }
  if (n != 1) {
    throw ParseError(std::string(s) + " is not in the monoid", 0);
  }
  return e;
}

////////////////////////////////////////////////////////////////////////
// FreeAbelian
////////////////////////////////////////////////////////////////////////

FreeAbelian::FreeAbelian(std::string name, Presentation pres, bool unital)
    : _name(std::move(name)), _pres(std::move(pres)), _unital(unital) {
  if (_pres.ids().empty() && !_unital) {
    throw PreconditionError("a semigroup without identity needs generators");
  }
}

Element FreeAbelian::make(Exponents e) const {
  if (e.is_one() && !_unital) {
    throw PreconditionError("the identity is not an element of " + _name);
  }
  return wrap(std::move(e));
}

Element FreeAbelian::multiply(Element const& p, Element const& q) const {
  return wrap(unwrap(p) + unwrap(q));
}

std::optional<Element> FreeAbelian::identity() const {
  if (!_unital) {
    return std::nullopt;
  }
  return wrap(Exponents{});
}

bool FreeAbelian::is_unit(Element const& p) const {
  return unwrap(p).is_one();
}

Element FreeAbelian::unit_inverse(Element const& x) const {
  if (!is_unit(x)) {
    throw PreconditionError(format(x) + " is not a unit");
  }
  return x;
}

std::optional<Element> FreeAbelian::left_divide(Element const& p,
                                                Element const& r) const {
  auto q = quotient(unwrap(r), unwrap(p));
  if (!q || (!_unital && q->is_one())) {
    return std::nullopt;
  }
  return wrap(std::move(*q));
}

LcmOutcome FreeAbelian::right_lcm(Element const& p, Element const& q) const {
  return LcmOutcome::of(wrap(lcm(unwrap(p), unwrap(q))));
}

Element FreeAbelian::ideal_rep(Element const& p) const {
  check_family(p);
  return p;
}

std::optional<Element> FreeAbelian::unit_left_quotient(Element const& p,
                                                       Element const& q) const {
  if (_unital && unwrap(p) == unwrap(q)) {
    return identity();
  }
  return std::nullopt;
}

std::vector<Element> FreeAbelian::generators() const {
  std::vector<Element> out;
  for (u64 id : _pres.ids()) {
    out.push_back(wrap(Exponents::generator(id)));
  }
  return out;
}

std::string FreeAbelian::format(Element const& p) const {
  return _pres.format(unwrap(p));
}

Element FreeAbelian::parse(std::string_view text) const {
  Exponents e = _pres.parse(text);
  if (e.is_one() && !_unital) {
    throw ParseError("the identity is not an element of " + _name, 0);
  }
  return wrap(std::move(e));
}

}  // namespace rlcm
