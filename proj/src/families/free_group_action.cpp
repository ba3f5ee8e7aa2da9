#include <cctype>  // for islower, isspace

#include "actions.hpp"
#include "rlcm/text.hpp"

namespace rlcm::detail {

std::size_t hash_value(FreeWord const& w) {
  std::size_t h = 0xf2;
  for (auto const& [g, e] : w.syl) {
    h = hash_combine(hash_combine(h, g), static_cast<std::size_t>(e));
  }
  return h;
}

FreeGroupAction::FreeGroupAction(unsigned rank, std::vector<std::vector<i64>> m)
    : _rank(rank), _m(std::move(m)) {
  if (rank == 0 || rank > 26) {
    throw PreconditionError("free group rank must be between 1 and 26");
  }
  for (std::size_t i = 0; i < _m.size(); ++i) {
    if (_m[i].size() != rank) {
      throw PreconditionError("generator " + std::to_string(i) + " needs "
                              + std::to_string(rank) + " exponents");
    }
    bool moves = false;
    for (i64 x : _m[i]) {
      if (x < 1) {
        throw PreconditionError("exponents must be positive");
      }
      moves = moves || x > 1;
    }
    if (!moves) {
      throw PreconditionError("generator " + std::to_string(i)
                              + " must raise some free generator to a power > 1");
    }
    for (std::size_t j = 0; j < i; ++j) {
      for (unsigned k = 0; k < rank; ++k) {
        if (rlcm::gcd(_m[i][k], _m[j][k]) != 1) {
          throw PreconditionError("exponents of generators " + std::to_string(j)
                                  + " and " + std::to_string(i) + " on a_"
                                  + std::to_string(k) + " are not relatively prime");
        }
      }
    }
  }
}

i64 FreeGroupAction::multiplier(Exponents const& p, unsigned k) const {
  i64 m = 1;
  for (auto const& [id, e] : p.terms) {
    if (id >= _m.size()) {
      throw PreconditionError("unknown generator of P");
    }
    m = checked_mul(m, checked_pow(_m[id][k], e));
  }
  return m;
}

namespace {

void push(FreeWord& w, unsigned g, i64 e) {
  if (e == 0) {
    return;
  }
  if (!w.syl.empty() && w.syl.back().first == g) {
    w.syl.back().second = checked_add(w.syl.back().second, e);
    if (w.syl.back().second == 0) {
      w.syl.pop_back();
    }
    return;
  }
  w.syl.emplace_back(g, e);
}

}  // namespace

FreeWord FreeGroupAction::mul(Group const& a, Group const& b) const {
  FreeWord r = a;
  for (auto const& [g, e] : b.syl) {
    push(r, g, e);
  }
  return r;
}

FreeWord FreeGroupAction::inv(Group const& a) const {
  FreeWord r;
  for (auto it = a.syl.rbegin(); it != a.syl.rend(); ++it) {
    r.syl.emplace_back(it->first, checked_sub(0, it->second));
  }
  return r;
}

FreeWord FreeGroupAction::apply(Exponents const& p, Group const& g) const {
  FreeWord r = g;
  for (auto& [k, e] : r.syl) {
    e = checked_mul(e, multiplier(p, k));
  }
  return r;
}

std::optional<FreeWord> FreeGroupAction::preimage(Exponents const& p,
                                                  Group const& g) const {
  FreeWord r = g;
  for (auto& [k, e] : r.syl) {
    i64 m = multiplier(p, k);
    if (e % m != 0) {
      return std::nullopt;
    }
    e /= m;
  }
  return r;
}

FreeWord FreeGroupAction::coset_rep(Exponents const& p, Group const& g) const {
  // Trailing syllables can be shortened by elements of theta_p(G); the
  // result is unique in its left coset.
  FreeWord r = g;
  while (!r.syl.empty()) {
    auto& [k, e] = r.syl.back();
    i64 x        = floor_mod(e, multiplier(p, k));
    if (x != 0) {
      e = x;
      break;
    }
    r.syl.pop_back();
  }
  return r;
}

std::optional<std::pair<FreeWord, FreeWord>> FreeGroupAction::solve(
    Exponents const& p1,
    Exponents const& p2,
    Group const& k) const {
  // k = u w with u in theta_p2(G), w in theta_p1(G). After cancelling whole
  // syllables, u and w meet in at most one merged syllable.
  std::size_t n = k.syl.size();
  auto div      = [&](std::size_t i, Exponents const& p) {
    return k.syl[i].second % multiplier(p, k.syl[i].first) == 0;
  };
  std::vector<bool> pre(n + 1, true), suf(n + 1, true);
  for (std::size_t i = 0; i < n; ++i) {
    pre[i + 1] = pre[i] && div(i, p2);
  }
  for (std::size_t i = n; i-- > 0;) {
    suf[i] = suf[i + 1] && div(i, p1);
  }
  auto finish = [&](FreeWord const& u, FreeWord const& w)
      -> std::optional<std::pair<FreeWord, FreeWord>> {
    auto a = preimage(p2, u);
    auto b = preimage(p1, w);
    if (!a || !b) {
      throw Error("free group solver produced a non-image factor");
    }
    return std::make_pair(*a, *b);
  };
  for (std::size_t j = 0; j <= n; ++j) {
    if (pre[j] && suf[j]) {
      FreeWord u, w;
      u.syl.assign(k.syl.begin(), k.syl.begin() + j);
      w.syl.assign(k.syl.begin() + j, k.syl.end());
      return finish(u, w);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!pre[j] || !suf[j + 1]) {
      continue;
    }
    unsigned g     = k.syl[j].first;
    i64 e          = k.syl[j].second;
    i64 m2         = multiplier(p2, g);
    i64 m1         = multiplier(p1, g);
    auto [d, x, y] = ext_gcd(m2, m1);
    if (e % d != 0) {
      continue;
    }
    i64 alpha = checked_mul(checked_mul(m2, x), e / d);
    i64 beta  = checked_sub(e, alpha);
    FreeWord u, w;
    u.syl.assign(k.syl.begin(), k.syl.begin() + j);
    push(u, g, alpha);
    push(w, g, beta);
    for (std::size_t i = j + 1; i < n; ++i) {
      w.syl.push_back(k.syl[i]);
    }
    return finish(u, w);
  }
  return std::nullopt;
}

IndexInfo FreeGroupAction::index(u64 id, std::vector<Group>* reps) const {
  for (i64 x : _m.at(id)) {
    if (x > 1) {
      return {false, 0};
    }
  }
  if (reps != nullptr) {
    *reps = {FreeWord{}};
  }
  return {true, 1};
}

Intersection<FreeWord> FreeGroupAction::intersection(Presentation const&) const {
  for (unsigned k = 0; k < _rank; ++k) {
    bool moved = false;
    for (auto const& row : _m) {
      moved = moved || row[k] > 1;
    }
    if (!moved) {
      return {ImageIntersection::Kind::Nontrivial, FreeWord{{{k, 1}}},
              std::string("every generator fixes ") + static_cast<char>('a' + k)};
    }
  }
  return {ImageIntersection::Kind::Trivial, std::nullopt,
          "every free generator is raised to a power > 1 by some generator of P"};
}

std::vector<FreeWord> FreeGroupAction::unit_generators() const {
  std::vector<FreeWord> out;
  for (unsigned k = 0; k < _rank; ++k) {
    out.push_back(FreeWord{{{k, 1}}});
  }
  return out;
}

std::string FreeGroupAction::format(Group const& g) const {
  if (g.syl.empty()) {
    return "1";
  }
  std::string s;
  for (auto const& [k, e] : g.syl) {
    s += static_cast<char>('a' + k);
    if (e != 1) {
      s += "^" + std::to_string(e);
    }
  }
  return s;
}

FreeWord FreeGroupAction::parse(std::string_view s) const {
  s = trim(s);
  FreeWord w;
  if (s == "1") {
    return w;
  }
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
      ++i;
      continue;
    }
    if (c < 'a' || c >= static_cast<char>('a' + _rank)) {
      throw ParseError(std::string("unknown free generator '") + c + "'", i);
    }
    ++i;
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
    push(w, static_cast<unsigned>(c - 'a'), e);
  }
  return w;
}

std::string FreeGroupAction::describe() const {
  return "free group of rank " + std::to_string(_rank);
}

}  // namespace rlcm::detail
