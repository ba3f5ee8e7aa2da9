#include "rlcm/families/free_monoid.hpp"

#include <algorithm>  // for equal
#include <cctype>     // for isspace

#include "rlcm/arith.hpp"
#include "rlcm/text.hpp"

namespace rlcm {

bool Word::has_prefix(Word const& p) const {
  return p.size() <= size()
         && std::equal(p.letters.begin(), p.letters.end(), letters.begin());
}

std::size_t hash_value(Word const& w) {
  std::size_t h = 0x3c6ef372;
  for (auto c : w.letters) {
    h = hash_combine(h, c);
  }
  return hash_combine(h, w.size());
}

Word operator+(Word const& a, Word const& b) {
  Word w = a;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

Alphabet::Alphabet(std::string letters) : _letters(std::move(letters)) {
  if (_letters.empty() || _letters.size() > 64) {
    throw PreconditionError("alphabet must have between 1 and 64 letters");
  }
  for (std::size_t i = 0; i < _letters.size(); ++i) {
    char c = _letters[i];
    if (c == '-' || c == ',' || c == '(' || c == ')' || c == '[' || c == ']'
        || std::isspace(static_cast<unsigned char>(c))) {
      throw PreconditionError(std::string("letter '") + c + "' is reserved");
    }
    if (_letters.find(c) != i) {
      throw PreconditionError(std::string("letter '") + c + "' repeated");
    }
  }
}

std::uint8_t Alphabet::index(char c) const {
  auto i = _letters.find(c);
  if (i == std::string::npos) {
    throw PreconditionError(std::string("letter '") + c + "' is not in the alphabet");
  }
  return static_cast<std::uint8_t>(i);
}

std::string Alphabet::format(Word const& w) const {
  if (w.empty()) {
    return _letters.find('1') == std::string::npos ? "1" : "-";
  }
  std::string s;
  for (auto i : w.letters) {
    s += _letters[i];
  }
  return s;
}

Word Alphabet::parse(std::string_view s) const {
  s = trim(s);
  Word w;
  if (s.empty() || s == "-" || (s == "1" && _letters.find('1') == std::string::npos)) {
    return w;
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto k = _letters.find(s[i]);
    if (k == std::string::npos) {
      throw ParseError(std::string("letter '") + s[i] + "' is not in the alphabet", i);
    }
    w.letters.push_back(static_cast<std::uint8_t>(k));
  }
  return w;
}

FreeMonoid::FreeMonoid(std::string name, Alphabet alphabet)
    : _name(std::move(name)), _alphabet(std::move(alphabet)) {}

Element FreeMonoid::multiply(Element const& p, Element const& q) const {
  return wrap(unwrap(p) + unwrap(q));
}

std::optional<Element> FreeMonoid::identity() const {
  return wrap(Word{});
}

bool FreeMonoid::is_unit(Element const& p) const {
  return unwrap(p).empty();
}

Element FreeMonoid::unit_inverse(Element const& x) const {
  if (!is_unit(x)) {
    throw PreconditionError(format(x) + " is not a unit");
  }
  return x;
}

std::optional<Element> FreeMonoid::left_divide(Element const& p,
                                               Element const& r) const {
  Word const& a = unwrap(p);
  Word const& b = unwrap(r);
  if (!b.has_prefix(a)) {
    return std::nullopt;
  }
  Word s;
  s.letters.assign(b.letters.begin() + a.size(), b.letters.end());
  return wrap(std::move(s));
}

LcmOutcome FreeMonoid::right_lcm(Element const& p, Element const& q) const {
  Word const& a = unwrap(p);
  Word const& b = unwrap(q);
  if (b.has_prefix(a)) {
    return LcmOutcome::of(q);
  }
  if (a.has_prefix(b)) {
    return LcmOutcome::of(p);
  }
  return LcmOutcome::disjoint();
}

Element FreeMonoid::ideal_rep(Element const& p) const {
  check_family(p);
  return p;
}

std::optional<Element> FreeMonoid::unit_left_quotient(Element const& p,
                                                      Element const& q) const {
  if (unwrap(p) == unwrap(q)) {
    return identity();
  }
  return std::nullopt;
}

std::vector<Element> FreeMonoid::generators() const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < _alphabet.size(); ++i) {
    out.push_back(wrap(Word{{static_cast<std::uint8_t>(i)}}));
  }
  return out;
}

std::string FreeMonoid::format(Element const& p) const {
  return _alphabet.format(unwrap(p));
}

Element FreeMonoid::parse(std::string_view text) const {
  return wrap(_alphabet.parse(text));
}

}  // namespace rlcm
