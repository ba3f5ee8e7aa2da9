#pragma once

#include <cstdint>        // for uint16_t
#include <map>            // for map
#include <optional>       // for optional
#include <string>         // for string
#include <string_view>    // for string_view
#include <utility>        // for pair
#include <vector>         // for vector

#include "rlcm/families/free_monoid.hpp"
#include "rlcm/semigroup.hpp"

namespace rlcm {

//! Word in the states of an automaton and their inverses: entry s + 1
//! stands for state s, -(s + 1) for its inverse.
using StateWord = std::vector<int>;

//! Finite-state transducer: state s reads letter x, writes output(s, x)
//! and continues in next(s, x). Each state permutes the alphabet.
class MealyAutomaton {
 public:
  struct Row {
    std::string state;
    char letter;
    char output;
    std::string next;
  };

  //! Throws PreconditionError unless every (state, letter) has exactly one
  //! row and every state permutes the alphabet.
  MealyAutomaton(Alphabet alphabet, std::vector<std::string> states, std::vector<Row> rows);

  Alphabet const& alphabet() const {
    return _alphabet;
  }
  std::size_t num_states() const {
    return _names.size();
  }
  std::string const& state_name(std::size_t s) const {
    return _names[s];
  }
  std::optional<std::size_t> state_index(std::string_view name) const;
  //! States acting trivially at every depth.
  bool is_identity_state(std::size_t s) const {
    return _identity[s];
  }
  std::uint8_t output(std::size_t s, std::uint8_t x) const {
    return _out[s][x];
  }
  std::size_t next(std::size_t s, std::uint8_t x) const {
    return _next[s][x];
  }

  //! Drops identity states and cancels adjacent inverse pairs.
  StateWord reduce(StateWord const& g) const;
  StateWord inverse(StateWord const& g) const;
  StateWord multiply(StateWord const& g, StateWord const& h) const;

  //! g . x and g|_x for a single letter; the restriction is reduced.
  std::pair<std::uint8_t, StateWord> act_letter(StateWord const& g, std::uint8_t x) const;
  Word act(StateWord const& g, Word const& w) const;
  StateWord restrict(StateWord const& g, Word const& w) const;

  std::string format(StateWord const& g) const;
  //! State names with optional "^n" exponents, juxtaposed or separated by
  //! '.'; "1" is the identity.
  StateWord parse(std::string_view s) const;

 private:
  Alphabet _alphabet;
  std::vector<std::string> _names;
  std::vector<std::vector<std::uint8_t>> _out;
  std::vector<std::vector<std::size_t>> _next;
  // _inv_out[s][y] is the letter x with output(s, x) = y.
  std::vector<std::vector<std::uint8_t>> _inv_out;
  std::vector<bool> _identity;
};

//! Group element of a self-similar action: a reduced state word together
//! with its action on X^depth. Equality compares the action only, so it is
//! equality up to the configured depth.
struct SelfSimilarGroupElement {
  StateWord word;
  std::vector<std::uint16_t> portrait;

  friend bool operator==(SelfSimilarGroupElement const& a,
                         SelfSimilarGroupElement const& b) {
    return a.portrait == b.portrait;
  }
  friend bool operator<(SelfSimilarGroupElement const& a,
                        SelfSimilarGroupElement const& b) {
    return a.portrait < b.portrait;
  }
};

std::size_t hash_value(SelfSimilarGroupElement const& g);

//! Element (w, g) of the Zappa-Szep product X^* x G.
struct ZappaSzepValue {
  Word w;
  SelfSimilarGroupElement g;

  friend bool operator==(ZappaSzepValue const& a, ZappaSzepValue const& b) {
    return a.w == b.w && a.g == b.g;
  }
  friend bool operator<(ZappaSzepValue const& a, ZappaSzepValue const& b) {
    if (!(a.w == b.w)) {
      return a.w < b.w;
    }
    return a.g < b.g;
  }
};

std::size_t hash_value(ZappaSzepValue const& v);

//! Structural access used by the self-similar checkers.
class SelfSimilarView {
 public:
  virtual ~SelfSimilarView() = default;

  virtual Semigroup const& semigroup() const               = 0;
  virtual MealyAutomaton const& automaton() const          = 0;
  //! Depth at which group elements are compared.
  virtual unsigned depth() const                           = 0;
  //! Units (empty word, g) for g in the group ball, shortlex.
  virtual std::vector<Element> group_ball(int radius) const = 0;
  virtual Element unit(StateWord const& g) const           = 0;
  virtual Element word(Word const& w) const                = 0;
  virtual Word word_part(Element const& a) const           = 0;
  //! Reduced state word of the group part.
  virtual StateWord group_word(Element const& a) const     = 0;
  //! g . w for a unit (empty, g).
  virtual Word act(Element const& unit, Word const& w) const = 0;
  //! The unit (empty, g|_w).
  virtual Element restrict(Element const& unit, Word const& w) const = 0;
};

//! The Zappa-Szep product X^* x G of a self-similar action given by a
//! Mealy automaton, with (x, g)(y, h) = (x (g . y), g|_y h).
//!
//! Principal right ideals are determined by the word part: (w, g)S = wX^* x G.
class ZappaSzep final : public TypedSemigroup<ZappaSzepValue>, public SelfSimilarView {
 public:
  //! Group elements are compared on X^depth. Reduced words from the group
  //! ball of the given radius serve as printed names.
  ZappaSzep(std::string name, MealyAutomaton automaton, unsigned depth = 6, int ball_radius = 5);

  std::string name() const override {
    return _name;
  }
  Element multiply(Element const& a, Element const& b) const override;
  std::optional<Element> identity() const override;
  bool is_unit(Element const& a) const override;
  Element unit_inverse(Element const& x) const override;
  std::optional<Element> left_divide(Element const& a, Element const& r) const override;
  LcmOutcome right_lcm(Element const& a, Element const& b) const override;
  Element ideal_rep(Element const& a) const override;
  //! Searches the group ball; throws Undecided when no unit is found there
  //! although the word lengths agree.
  std::optional<Element> unit_left_quotient(Element const& a,
                                            Element const& b) const override;
  std::vector<Element> generators() const override;
  std::vector<Element> unit_generators() const override;
  std::string format(Element const& a) const override;
  Element parse(std::string_view text) const override;
  bool has_trivial_units() const override;
  std::optional<Element> left_unit_rep(Element const&) const override {
    return std::nullopt;
  }
  SelfSimilarView const* self_similar() const override {
    return this;
  }

  Semigroup const& semigroup() const override {
    return *this;
  }
  MealyAutomaton const& automaton() const override {
    return _aut;
  }
  unsigned depth() const override {
    return _depth;
  }
  std::vector<Element> group_ball(int radius) const override;
  Element unit(StateWord const& g) const override;
  Element word(Word const& w) const override;
  Word word_part(Element const& a) const override;
  StateWord group_word(Element const& a) const override;
  Word act(Element const& unit, Word const& w) const override;
  Element restrict(Element const& unit, Word const& w) const override;

 private:
  SelfSimilarGroupElement group(StateWord g) const;
  std::vector<std::uint16_t> portrait(StateWord const& g) const;
  Element make(Word w, SelfSimilarGroupElement g) const;

  std::string _name;
  MealyAutomaton _aut;
  unsigned _depth;
  std::size_t _level_size;
  // Portraits of each state and of its inverse.
  std::vector<std::vector<std::uint16_t>> _state_portrait, _inverse_portrait;
  // Shortlex-least reduced word for every portrait met in the ball.
  std::map<std::vector<std::uint16_t>, StateWord> _names;
  std::vector<StateWord> _ball;  // shortlex order
};

}  // namespace rlcm
