#include <algorithm>  // for sort

#include "actions.hpp"
#include "rlcm/text.hpp"

namespace rlcm::detail {

std::size_t hash_value(ShiftVec const& v) {
  std::size_t h = 0x5151;
  for (auto const& [pos, x] : v.entries) {
    h = hash_combine(hash_combine(h, hash_value(pos)), static_cast<std::size_t>(x));
  }
  return h;
}

ShiftAction::ShiftAction(unsigned rank, i64 modulus)
    : _rank(rank), _modulus(modulus), _pos(Presentation::tuple(rank)) {
  if (rank == 0) {
    throw PreconditionError("shift action needs rank >= 1");
  }
  if (modulus < 0 || modulus == 1) {
    throw PreconditionError("base group must be Z or Z/m with m >= 2");
  }
}

ShiftVec ShiftAction::normalized(std::map<Exponents, i64> const& m) const {
  ShiftVec v;
  for (auto const& [pos, x] : m) {
    i64 y = _modulus > 0 ? floor_mod(x, _modulus) : x;
    if (y != 0) {
      v.entries.emplace_back(pos, y);
    }
  }
  return v;
}

ShiftVec ShiftAction::mul(Group const& a, Group const& b) const {
  std::map<Exponents, i64> m(a.entries.begin(), a.entries.end());
  for (auto const& [pos, x] : b.entries) {
    m[pos] = checked_add(m[pos], x);
  }
  return normalized(m);
}

ShiftVec ShiftAction::inv(Group const& a) const {
  std::map<Exponents, i64> m;
  for (auto const& [pos, x] : a.entries) {
    m[pos] = checked_sub(0, x);
  }
  return normalized(m);
}

ShiftVec ShiftAction::apply(Exponents const& p, Group const& g) const {
  // Translation preserves the order of positions.
  ShiftVec v;
  for (auto const& [pos, x] : g.entries) {
    v.entries.emplace_back(pos + p, x);
  }
  std::sort(v.entries.begin(), v.entries.end());
  return v;
}

std::optional<ShiftVec> ShiftAction::preimage(Exponents const& p,
                                              Group const& g) const {
  ShiftVec v;
  for (auto const& [pos, x] : g.entries) {
    auto q = quotient(pos, p);
    if (!q) {
      return std::nullopt;
    }
    v.entries.emplace_back(*q, x);
  }
  std::sort(v.entries.begin(), v.entries.end());
  return v;
}

ShiftVec ShiftAction::coset_rep(Exponents const& p, Group const& g) const {
  ShiftVec v;
  for (auto const& e : g.entries) {
    if (!divides(p, e.first)) {
      v.entries.push_back(e);
    }
  }
  return v;
}

std::optional<std::pair<ShiftVec, ShiftVec>> ShiftAction::solve(
    Exponents const& p1,
    Exponents const& p2,
    Group const& k) const {
  std::map<Exponents, i64> a, b;
  for (auto const& [pos, x] : k.entries) {
    if (auto q = quotient(pos, p2)) {
      a[*q] = x;
    } else if (auto r = quotient(pos, p1)) {
      b[*r] = x;
    } else {
      return std::nullopt;
    }
  }
  return std::make_pair(normalized(a), normalized(b));
}

IndexInfo ShiftAction::index(u64 id, std::vector<Group>* reps) const {
  (void) id;
  // Positions outside e_id + P form a finite set only for rank one.
  if (_rank != 1 || _modulus == 0) {
    return {false, 0};
  }
  if (reps != nullptr) {
    reps->clear();
    for (i64 c = 0; c < _modulus; ++c) {
      std::map<Exponents, i64> m;
      m[Exponents{}] = c;
      reps->push_back(normalized(m));
    }
  }
  return {true, static_cast<u64>(_modulus)};
}

Intersection<ShiftVec> ShiftAction::intersection(Presentation const&) const {
  return {ImageIntersection::Kind::Trivial, std::nullopt,
          "no position lies in every translate p + P"};
}

std::vector<ShiftVec> ShiftAction::unit_generators() const {
  std::map<Exponents, i64> plus, minus;
  plus[Exponents{}]  = 1;
  minus[Exponents{}] = -1;
  if (_modulus == 2) {
    return {normalized(plus)};
  }
  return {normalized(plus), normalized(minus)};
}

std::optional<ShiftVec> ShiftAction::fresh(std::vector<Group> const&) const {
  return std::nullopt;
}

std::string ShiftAction::format(Group const& g) const {
  std::vector<std::string> parts;
  for (auto const& [pos, x] : g.entries) {
    parts.push_back(_pos.format(pos) + ":" + std::to_string(x));
  }
  return "{" + join(parts, ",") + "}";
}

ShiftVec ShiftAction::parse(std::string_view s) const {
  std::map<Exponents, i64> m;
  auto body = trim(unwrap(s, '{', '}'));
  if (!body.empty()) {
    for (auto entry : split_top_level(body, ',')) {
      auto kv = split_top_level(entry, ':');
      if (kv.size() != 2) {
        throw ParseError("expected position:value in '" + std::string(entry) + "'", 0);
      }
      Exponents pos = _pos.parse(kv[0]);
      m[pos]        = checked_add(m[pos], parse_int(kv[1]));
    }
  }
  return normalized(m);
}

std::string ShiftAction::describe() const {
  std::string base = _modulus == 0 ? "Z" : "Z/" + std::to_string(_modulus);
  return "finitely supported maps N^" + std::to_string(_rank) + " -> " + base;
}

}  // namespace rlcm::detail
