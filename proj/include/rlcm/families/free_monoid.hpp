#pragma once

#include <cstdint>      // for uint8_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "rlcm/semigroup.hpp"

namespace rlcm {

//! Word over a finite alphabet, letters stored as indices.
struct Word {
  std::vector<std::uint8_t> letters;

  std::size_t size() const {
    return letters.size();
  }
  bool empty() const {
    return letters.empty();
  }
  bool has_prefix(Word const& p) const;

  friend bool operator==(Word const& a, Word const& b) {
    return a.letters == b.letters;
  }
  //! Shortlex.
  friend bool operator<(Word const& a, Word const& b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a.letters < b.letters;
  }
};

std::size_t hash_value(Word const& w);
Word operator+(Word const& a, Word const& b);

//! A finite alphabet of single-character letters.
class Alphabet {
 public:
  explicit Alphabet(std::string letters);

  std::size_t size() const {
    return _letters.size();
  }
  char letter(std::uint8_t i) const {
    return _letters[i];
  }
  //! Throws PreconditionError for letters outside the alphabet.
  std::uint8_t index(char c) const;
  std::string const& letters() const {
    return _letters;
  }

  std::string format(Word const& w) const;
  //! The empty word is written "1", or "-" when '1' is a letter; "" and
  //! "-" are always accepted.
  Word parse(std::string_view s) const;

 private:
  std::string _letters;
};

//! The free monoid X^*; pS is the set of words with prefix p.
class FreeMonoid final : public TypedSemigroup<Word> {
 public:
  FreeMonoid(std::string name, Alphabet alphabet);

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

  Element make(Word w) const {
    return wrap(std::move(w));
  }

 private:
  std::string _name;
  Alphabet _alphabet;
};

}  // namespace rlcm
