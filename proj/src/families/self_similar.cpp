#include "rlcm/families/self_similar.hpp"

#include <algorithm>  // for all_of
#include <cctype>     // for isspace, isdigit
#include <numeric>    // for iota

#include "rlcm/text.hpp"

namespace rlcm {

namespace {

std::size_t state_of(int token) {
  return static_cast<std::size_t>(token > 0 ? token - 1 : -token - 1);
}

}  // namespace

MealyAutomaton::MealyAutomaton(Alphabet alphabet,
                               std::vector<std::string> states,
                               std::vector<Row> rows)
    : _alphabet(std::move(alphabet)), _names(std::move(states)) {
  std::size_t n = _alphabet.size();
  if (_names.empty()) {
    throw PreconditionError("automaton needs at least one state");
  }
  for (std::size_t s = 0; s < _names.size(); ++s) {
    auto const& name = _names[s];
    if (name.empty() || name == "1"
        || !std::all_of(name.begin(), name.end(),
                        [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; })) {
      throw PreconditionError("invalid state name '" + name + "'");
    }
    for (std::size_t t = 0; t < s; ++t) {
      if (_names[t] == name) {
        throw PreconditionError("state '" + name + "' repeated");
      }
    }
  }
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  _out.assign(_names.size(), std::vector<std::uint8_t>(n, 0));
  _next.assign(_names.size(), std::vector<std::size_t>(n, kUnset));
  for (auto const& r : rows) {
    auto s = state_index(r.state);
    auto t = state_index(r.next);
    if (!s || !t) {
      throw PreconditionError("row mentions unknown state '" + (s ? r.next : r.state) + "'");
    }
    std::uint8_t x = _alphabet.index(r.letter);
    if (_next[*s][x] != kUnset) {
      throw PreconditionError("two rows for state '" + r.state + "' and letter '"
                              + std::string(1, r.letter) + "'");
    }
    _out[*s][x]  = _alphabet.index(r.output);
    _next[*s][x] = *t;
  }
  _inv_out.assign(_names.size(), std::vector<std::uint8_t>(n, 0));
  for (std::size_t s = 0; s < _names.size(); ++s) {
    std::vector<bool> hit(n, false);
    for (std::uint8_t x = 0; x < n; ++x) {
      if (_next[s][x] == kUnset) {
        throw PreconditionError("no row for state '" + _names[s] + "' and letter '"
                                + std::string(1, _alphabet.letter(x)) + "'");
      }
      if (hit[_out[s][x]]) {
        throw PreconditionError("state '" + _names[s]
                                + "' does not permute the alphabet");
      }
      hit[_out[s][x]]        = true;
      _inv_out[s][_out[s][x]] = x;
    }
  }
  // Greatest set of states that fix every letter and restrict into the set.
  _identity.assign(_names.size(), false);
  for (std::size_t s = 0; s < _names.size(); ++s) {
    bool fixes = true;
    for (std::uint8_t x = 0; x < n; ++x) {
      fixes = fixes && _out[s][x] == x;
    }
    _identity[s] = fixes;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t s = 0; s < _names.size(); ++s) {
      if (!_identity[s]) {
        continue;
      }
      for (std::uint8_t x = 0; x < n; ++x) {
        if (!_identity[_next[s][x]]) {
          _identity[s] = false;
          changed      = true;
          break;
        }
      }
    }
  }
}

std::optional<std::size_t> MealyAutomaton::state_index(std::string_view name) const {
  for (std::size_t s = 0; s < _names.size(); ++s) {
    if (_names[s] == name) {
      return s;
    }
  }
  return std::nullopt;
}

StateWord MealyAutomaton::reduce(StateWord const& g) const {
  StateWord r;
  for (int t : g) {
    if (t == 0 || state_of(t) >= _names.size()) {
      throw PreconditionError("invalid state token");
    }
    if (_identity[state_of(t)]) {
      continue;
    }
    if (!r.empty() && r.back() == -t) {
      r.pop_back();
    } else {
      r.push_back(t);
    }
  }
  return r;
}

StateWord MealyAutomaton::inverse(StateWord const& g) const {
  StateWord r(g.rbegin(), g.rend());
  for (int& t : r) {
    t = -t;
  }
  return r;
}

StateWord MealyAutomaton::multiply(StateWord const& g, StateWord const& h) const {
  StateWord r = g;
  r.insert(r.end(), h.begin(), h.end());
  return reduce(r);
}

std::pair<std::uint8_t, StateWord> MealyAutomaton::act_letter(StateWord const& g,
                                                              std::uint8_t x) const {
  // (s1 ... sk) . x applies sk first; the restriction is
  // s1|_{(s2...sk).x} ... sk|_x.
  StateWord rest(g.size());
  std::uint8_t cur = x;
  for (std::size_t i = g.size(); i-- > 0;) {
    std::size_t s = state_of(g[i]);
    if (g[i] > 0) {
      rest[i] = static_cast<int>(_next[s][cur]) + 1;
      cur     = _out[s][cur];
    } else {
      std::uint8_t y = _inv_out[s][cur];
      rest[i]        = -(static_cast<int>(_next[s][y]) + 1);
      cur            = y;
    }
  }
  return {cur, reduce(rest)};
}

Word MealyAutomaton::act(StateWord const& g, Word const& w) const {
  Word out;
  StateWord cur = g;
  for (auto x : w.letters) {
    auto [y, r] = act_letter(cur, x);
    out.letters.push_back(y);
    cur = std::move(r);
  }
  return out;
}

StateWord MealyAutomaton::restrict(StateWord const& g, Word const& w) const {
  StateWord cur = reduce(g);
  for (auto x : w.letters) {
    cur = act_letter(cur, x).second;
  }
  return cur;
}

std::string MealyAutomaton::format(StateWord const& g) const {
  if (g.empty()) {
    return "1";
  }
  bool short_names = std::all_of(_names.begin(), _names.end(),
                                 [](auto const& s) { return s.size() == 1; });
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < g.size();) {
    std::size_t j = i;
    while (j < g.size() && g[j] == g[i]) {
      ++j;
    }
    i64 e         = static_cast<i64>(j - i) * (g[i] > 0 ? 1 : -1);
    std::string t = _names[state_of(g[i])];
    if (e != 1) {
      t += "^" + std::to_string(e);
    }
    parts.push_back(t);
    i = j;
  }
  return join(parts, short_names ? "" : ".");
}

StateWord MealyAutomaton::parse(std::string_view s) const {
  s = trim(s);
  StateWord g;
  if (s == "1") {
    return g;
  }
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '.' || c == '*') {
      ++i;
      continue;
    }
    std::size_t best = 0, len = 0;
    for (std::size_t t = 0; t < _names.size(); ++t) {
      auto const& name = _names[t];
      if (name.size() > len && s.substr(i, name.size()) == name) {
        best = t;
        len  = name.size();
      }
    }
    if (len == 0) {
      throw ParseError("unknown state at '" + std::string(s.substr(i)) + "'", i);
    }
    i += len;
    i64 e = 1;
    if (i < s.size() && s[i] == '^') {
      std::size_t start = ++i;
      if (i < s.size() && s[i] == '-') {
        ++i;
      }
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        ++i;
      }
      e = parse_int(s.substr(start, i - start));
    }
    int token = static_cast<int>(best) + 1;
    for (i64 k = 0; k < (e < 0 ? -e : e); ++k) {
      g.push_back(e < 0 ? -token : token);
    }
  }
  return reduce(g);
}

std::size_t hash_value(SelfSimilarGroupElement const& g) {
  std::size_t h = 0x55;
  for (auto x : g.portrait) {
    h = hash_combine(h, x);
  }
  return h;
}

std::size_t hash_value(ZappaSzepValue const& v) {
  return hash_combine(hash_value(v.w), hash_value(v.g));
}

namespace {

// Reduced state words of length <= radius in shortlex order, keeping the
// first word for each portrait.
template <typename PortraitFn>
std::vector<StateWord> group_ball_words(MealyAutomaton const& aut,
                                        int radius,
                                        PortraitFn portrait,
                                        std::map<std::vector<std::uint16_t>, StateWord>& seen) {
  std::vector<int> gens;
  for (std::size_t s = 0; s < aut.num_states(); ++s) {
    if (!aut.is_identity_state(s)) {
      gens.push_back(static_cast<int>(s) + 1);
      gens.push_back(-(static_cast<int>(s) + 1));
    }
  }
  std::vector<StateWord> out{StateWord{}};
  seen.emplace(portrait(StateWord{}), StateWord{});
  std::vector<StateWord> frontier{StateWord{}};
  for (int r = 0; r < radius; ++r) {
    std::vector<StateWord> next;
    for (auto const& w : frontier) {
      for (int t : gens) {
        if (!w.empty() && w.back() == -t) {
          continue;
        }
        StateWord v = w;
        v.push_back(t);
        if (seen.emplace(portrait(v), v).second) {
          out.push_back(v);
          next.push_back(std::move(v));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

ZappaSzep::ZappaSzep(std::string name, MealyAutomaton automaton, unsigned depth, int ball_radius)
    : _name(std::move(name)), _aut(std::move(automaton)), _depth(depth) {
  std::size_t n = _aut.alphabet().size();
  _level_size   = 1;
  for (unsigned d = 0; d < depth; ++d) {
    _level_size *= n;
    if (_level_size > 65536) {
      throw PreconditionError("comparison depth too large for the alphabet");
    }
  }
  // Portraits of single states, computed letter by letter.
  auto encode = [&](Word const& w) {
    std::size_t i = 0;
    for (auto x : w.letters) {
      i = i * n + x;
    }
    return static_cast<std::uint16_t>(i);
  };
  std::vector<Word> level(_level_size);
  for (std::size_t i = 0; i < _level_size; ++i) {
    Word w;
    w.letters.resize(depth);
    std::size_t k = i;
    for (unsigned d = depth; d-- > 0;) {
      w.letters[d] = static_cast<std::uint8_t>(k % n);
      k /= n;
    }
    level[i] = std::move(w);
  }
  for (std::size_t s = 0; s < _aut.num_states(); ++s) {
    std::vector<std::uint16_t> p(_level_size), q(_level_size);
    for (std::size_t i = 0; i < _level_size; ++i) {
      p[i] = encode(_aut.act({static_cast<int>(s) + 1}, level[i]));
    }
    for (std::size_t i = 0; i < _level_size; ++i) {
      q[p[i]] = static_cast<std::uint16_t>(i);
    }
    _state_portrait.push_back(std::move(p));
    _inverse_portrait.push_back(std::move(q));
  }
  _ball = group_ball_words(_aut, ball_radius, [&](StateWord const& g) { return portrait(g); },
                           _names);
}

std::vector<std::uint16_t> ZappaSzep::portrait(StateWord const& g) const {
  std::vector<std::uint16_t> p(_level_size);
  std::iota(p.begin(), p.end(), std::uint16_t{0});
  for (std::size_t i = g.size(); i-- > 0;) {
    auto const& q = g[i] > 0 ? _state_portrait[state_of(g[i])]
                             : _inverse_portrait[state_of(g[i])];
    for (auto& x : p) {
      x = q[x];
    }
  }
  return p;
}

SelfSimilarGroupElement ZappaSzep::group(StateWord g) const {
  // Keep the actual word: ball names only agree with g on X^depth, and
  // products and restrictions must be computed exactly.
  g      = _aut.reduce(g);
  auto p = portrait(g);
  return {std::move(g), std::move(p)};
}

Element ZappaSzep::make(Word w, SelfSimilarGroupElement g) const {
  return wrap(ZappaSzepValue{std::move(w), std::move(g)});
}

Element ZappaSzep::multiply(Element const& a, Element const& b) const {
  auto const& x = unwrap(a);
  auto const& y = unwrap(b);
  Word w        = x.w + _aut.act(x.g.word, y.w);
  return make(std::move(w),
              group(_aut.multiply(_aut.restrict(x.g.word, y.w), y.g.word)));
}

std::optional<Element> ZappaSzep::identity() const {
  return make({}, group({}));
}

bool ZappaSzep::is_unit(Element const& a) const {
  return unwrap(a).w.empty();
}

Element ZappaSzep::unit_inverse(Element const& x) const {
  auto const& v = unwrap(x);
  if (!v.w.empty()) {
    throw PreconditionError(format(x) + " is not a unit");
  }
  return make({}, group(_aut.inverse(v.g.word)));
}

std::optional<Element> ZappaSzep::left_divide(Element const& a, Element const& r) const {
  auto const& x = unwrap(a);
  auto const& z = unwrap(r);
  if (!z.w.has_prefix(x.w)) {
    return std::nullopt;
  }
  Word u;
  u.letters.assign(z.w.letters.begin() + static_cast<long>(x.w.size()), z.w.letters.end());
  // (x, g)(y, h) = (x (g . y), g|_y h) = (z, k)
  Word y           = _aut.act(_aut.inverse(x.g.word), u);
  StateWord gy_inv = _aut.inverse(_aut.restrict(x.g.word, y));
  return make(std::move(y), group(_aut.multiply(gy_inv, z.g.word)));
}

LcmOutcome ZappaSzep::right_lcm(Element const& a, Element const& b) const {
  auto const& x = unwrap(a);
  auto const& y = unwrap(b);
  if (y.w.has_prefix(x.w)) {
    return LcmOutcome::of(make(y.w, group({})));
  }
  if (x.w.has_prefix(y.w)) {
    return LcmOutcome::of(make(x.w, group({})));
  }
  return LcmOutcome::disjoint();
}

Element ZappaSzep::ideal_rep(Element const& a) const {
  return make(unwrap(a).w, group({}));
}

std::optional<Element> ZappaSzep::unit_left_quotient(Element const& a,
                                                     Element const& b) const {
  auto const& x = unwrap(a);
  auto const& y = unwrap(b);
  if (x.w.size() != y.w.size()) {
    return std::nullopt;
  }
  // (w, g) = (u . z, u|_z h)
  auto target = group(_aut.multiply(x.g.word, _aut.inverse(y.g.word)));
  if (y.w.empty()) {
    return make({}, target);
  }
  for (auto const& u : _ball) {
    if (_aut.act(u, y.w) == x.w && group(_aut.restrict(u, y.w)) == target) {
      return make({}, group(u));
    }
  }
  throw Undecided("no unit u in the group ball with " + format(a) + " = u " + format(b));
}

std::vector<Element> ZappaSzep::generators() const {
  std::vector<Element> out;
  for (std::uint8_t x = 0; x < _aut.alphabet().size(); ++x) {
    out.push_back(make(Word{{x}}, group({})));
  }
  for (std::size_t s = 0; s < _aut.num_states(); ++s) {
    if (!_aut.is_identity_state(s)) {
      out.push_back(make({}, group({static_cast<int>(s) + 1})));
    }
  }
  return out;
}

std::vector<Element> ZappaSzep::unit_generators() const {
  std::vector<Element> out;
  for (std::size_t s = 0; s < _aut.num_states(); ++s) {
    if (!_aut.is_identity_state(s)) {
      out.push_back(make({}, group({static_cast<int>(s) + 1})));
      out.push_back(make({}, group({-(static_cast<int>(s) + 1)})));
    }
  }
  return out;
}

std::string ZappaSzep::format(Element const& a) const {
  auto const& x = unwrap(a);
  auto it = _names.find(x.g.portrait);
  StateWord const& g = it != _names.end() ? it->second : x.g.word;
  return "(" + _aut.alphabet().format(x.w) + "," + _aut.format(g) + ")";
}

Element ZappaSzep::parse(std::string_view text) const {
  text = trim(text);
  if (text == "1") {
    return *identity();
  }
  auto parts = split_top_level(rlcm::unwrap(text, '(', ')'), ',');
  if (parts.size() != 2) {
    throw ParseError("expected (word,group element) in '" + std::string(text) + "'", 0);
  }
  return make(_aut.alphabet().parse(parts[0]), group(_aut.parse(parts[1])));
}

bool ZappaSzep::has_trivial_units() const {
  for (std::size_t s = 0; s < _aut.num_states(); ++s) {
    if (!_aut.is_identity_state(s)) {
      return false;
    }
  }
  return true;
}

std::vector<Element> ZappaSzep::group_ball(int radius) const {
  std::map<std::vector<std::uint16_t>, StateWord> seen;
  std::vector<Element> out;
  for (auto const& g :
       group_ball_words(_aut, radius, [&](StateWord const& w) { return portrait(w); }, seen)) {
    out.push_back(make({}, group(g)));
  }
  return out;
}

Element ZappaSzep::unit(StateWord const& g) const {
  return make({}, group(g));
}

Element ZappaSzep::word(Word const& w) const {
  for (auto x : w.letters) {
    if (x >= _aut.alphabet().size()) {
      throw PreconditionError("letter outside the alphabet");
    }
  }
  return make(w, group({}));
}

Word ZappaSzep::word_part(Element const& a) const {
  return unwrap(a).w;
}

StateWord ZappaSzep::group_word(Element const& a) const {
  return unwrap(a).g.word;
}

Word ZappaSzep::act(Element const& u, Word const& w) const {
  return _aut.act(unwrap(u).g.word, w);
}

Element ZappaSzep::restrict(Element const& u, Word const& w) const {
  return make({}, group(_aut.restrict(unwrap(u).g.word, w)));
}

}  // namespace rlcm
