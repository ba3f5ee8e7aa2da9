#include <algorithm>  // for max

#include "actions.hpp"
#include "rlcm/text.hpp"

namespace rlcm::detail {

std::size_t hash_value(LatticeVec const& v) {
  std::size_t h = 0x77;
  for (i64 x : v.c) {
    h = hash_combine(h, static_cast<std::size_t>(x));
  }
  return h;
}

LatticeAction::LatticeAction(LatticeActionSpec spec, Presentation const& P)
    : _spec(std::move(spec)) {
  if (_spec.scalar && !P.is_integer()) {
    throw PreconditionError("scalar action needs an integer presentation of P");
  }
  auto check_positive = [](i64 m) {
    if (m < 1) {
      throw PreconditionError("multipliers must be positive");
    }
  };
  for (auto const& [id, ms] : _spec.head) {
    if (!P.valid_id(id)) {
      throw PreconditionError("multipliers given for unknown generator "
                              + P.id_name(id));
    }
    if (_spec.dims > 0 && ms.size() > _spec.dims) {
      throw PreconditionError("too many multipliers for generator " + P.id_name(id));
    }
    for (i64 m : ms) {
      check_positive(m);
    }
  }
  for (auto const& [id, m] : _spec.tail) {
    check_positive(m);
  }
  if (_spec.scalar) {
    return;
  }
  // Distinct generators need coprime multipliers on every coordinate, so
  // that theta_p(G) meets theta_q(G) in theta_lcm(p,q)(G).
  std::vector<u64> ids = P.ids();
  for (std::size_t j = 0; j <= head_size(); ++j) {
    for (std::size_t a = 0; a < ids.size(); ++a) {
      for (std::size_t b = a + 1; b < ids.size(); ++b) {
        if (rlcm::gcd(gen_multiplier(ids[a], j), gen_multiplier(ids[b], j)) != 1) {
          throw PreconditionError("multipliers of generators " + P.id_name(ids[a])
                                  + " and " + P.id_name(ids[b]) + " on coordinate "
                                  + std::to_string(j)
                                  + " are not relatively prime, so the action "
                                    "does not respect the order");
        }
      }
    }
  }
}

std::size_t LatticeAction::head_size() const {
  if (_spec.dims > 0) {
    return _spec.dims;
  }
  std::size_t n = 0;
  for (auto const& [id, ms] : _spec.head) {
    n = std::max(n, ms.size());
  }
  return n;
}

i64 LatticeAction::gen_multiplier(u64 id, std::size_t j) const {
  if (_spec.scalar) {
    return static_cast<i64>(id);
  }
  auto it = _spec.head.find(id);
  if (it != _spec.head.end() && j < it->second.size()) {
    return it->second[j];
  }
  auto t = _spec.tail.find(id);
  return t == _spec.tail.end() ? 1 : t->second;
}

i64 LatticeAction::multiplier(Exponents const& p, std::size_t j) const {
  i64 m = 1;
  for (auto const& [id, e] : p.terms) {
    m = checked_mul(m, checked_pow(gen_multiplier(id, j), e));
  }
  return m;
}

LatticeVec LatticeAction::mul(Group const& a, Group const& b) const {
  LatticeVec r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (std::size_t j = 0; j < r.c.size(); ++j) {
    r.c[j] = checked_add(a.at(j), b.at(j));
  }
  r.trim();
  return r;
}

LatticeVec LatticeAction::inv(Group const& a) const {
  LatticeVec r = a;
  for (auto& x : r.c) {
    x = checked_sub(0, x);
  }
  return r;
}

LatticeVec LatticeAction::apply(Exponents const& p, Group const& g) const {
  LatticeVec r = g;
  for (std::size_t j = 0; j < r.c.size(); ++j) {
    r.c[j] = checked_mul(r.c[j], multiplier(p, j));
  }
  return r;
}

std::optional<LatticeVec> LatticeAction::preimage(Exponents const& p,
                                                  Group const& g) const {
  LatticeVec r = g;
  for (std::size_t j = 0; j < r.c.size(); ++j) {
    i64 m = multiplier(p, j);
    if (r.c[j] % m != 0) {
      return std::nullopt;
    }
    r.c[j] /= m;
  }
  return r;
}

LatticeVec LatticeAction::coset_rep(Exponents const& p, Group const& g) const {
  LatticeVec r = g;
  for (std::size_t j = 0; j < r.c.size(); ++j) {
    r.c[j] = floor_mod(r.c[j], multiplier(p, j));
  }
  r.trim();
  return r;
}

std::optional<std::pair<LatticeVec, LatticeVec>> LatticeAction::solve(
    Exponents const& p1,
    Exponents const& p2,
    Group const& k) const {
  LatticeVec a, b;
  a.c.resize(k.c.size());
  b.c.resize(k.c.size());
  for (std::size_t j = 0; j < k.c.size(); ++j) {
    i64 m1 = multiplier(p1, j), m2 = multiplier(p2, j);
    // k_j = m2 a_j + m1 b_j
    auto [d, x, y] = ext_gcd(m2, m1);
    (void) y;
    if (k.c[j] % d != 0) {
      return std::nullopt;
    }
    i64 step = m1 / d;
    a.c[j]   = floor_mod(checked_mul(floor_mod(x, step), floor_mod(k.c[j] / d, step)),
                       step);
    b.c[j]   = checked_sub(k.c[j], checked_mul(m2, a.c[j])) / m1;
  }
  a.trim();
  b.trim();
  return std::make_pair(a, b);
}

IndexInfo LatticeAction::index(u64 id, std::vector<Group>* reps) const {
  std::size_t n = head_size();
  if (_spec.dims == 0 && gen_multiplier(id, n) != 1) {
    return {false, 0};
  }
  std::vector<i64> ms;
  u64 idx = 1;
  for (std::size_t j = 0; j < n; ++j) {
    ms.push_back(gen_multiplier(id, j));
    idx = static_cast<u64>(checked_mul(static_cast<i64>(idx), ms.back()));
  }
  if (reps != nullptr && idx <= kMaxListedReps) {
    reps->clear();
    std::vector<i64> digit(n, 0);
    for (u64 r = 0; r < idx; ++r) {
      LatticeVec v{digit};
      v.trim();
      reps->push_back(v);
      for (std::size_t j = 0; j < n; ++j) {
        if (++digit[j] < ms[j]) {
          break;
        }
        digit[j] = 0;
      }
    }
  }
  return {true, idx};
}

Intersection<LatticeVec> LatticeAction::intersection(Presentation const& P) const {
  using Kind = ImageIntersection::Kind;
  if (_spec.scalar) {
    if (P.ids().empty() && P.kind() != Presentation::Kind::AllPrimes) {
      return {Kind::Nontrivial, LatticeVec{{1}}, "P is trivial"};
    }
    return {Kind::Trivial, std::nullopt, "the multiples of p over p in P meet in 0"};
  }
  std::size_t n = head_size();
  for (std::size_t j = 0; j <= n; ++j) {
    if (j == n && _spec.dims > 0) {
      break;
    }
    bool moved = false;
    for (u64 id : P.ids()) {
      moved = moved || gen_multiplier(id, j) > 1;
    }
    if (!moved) {
      LatticeVec e;
      e.c.assign(j + 1, 0);
      e.c[j] = 1;
      return {Kind::Nontrivial, e,
              "every generator fixes coordinate " + std::to_string(j)};
    }
  }
  return {Kind::Trivial, std::nullopt,
          "every coordinate is multiplied by some factor > 1"};
}

std::vector<LatticeVec> LatticeAction::unit_generators() const {
  std::size_t n = _spec.dims > 0 ? _spec.dims : head_size() + 1;
  std::vector<LatticeVec> out;
  for (std::size_t j = 0; j < n; ++j) {
    LatticeVec e;
    e.c.assign(j + 1, 0);
    e.c[j] = 1;
    out.push_back(e);
    e.c[j] = -1;
    out.push_back(e);
  }
  return out;
}

std::optional<LatticeVec> LatticeAction::fresh(std::vector<Group> const& avoid) const {
  if (_spec.dims > 0) {
    return std::nullopt;
  }
  std::size_t J = std::max<std::size_t>(head_size(), 1);
  for (auto const& v : avoid) {
    J = std::max(J, v.c.size());
  }
  LatticeVec e;
  e.c.assign(J + 1, 0);
  e.c[J] = 1;
  return e;
}

std::string LatticeAction::format(Group const& g) const {
  if (_spec.dims == 1) {
    return std::to_string(g.at(0));
  }
  std::size_t n = _spec.dims > 0 ? _spec.dims : std::max<std::size_t>(g.c.size(), 1);
  std::vector<std::string> parts;
  for (std::size_t j = 0; j < n; ++j) {
    parts.push_back(std::to_string(g.at(j)));
  }
  return "[" + join(parts, ",") + "]";
}

LatticeVec LatticeAction::parse(std::string_view s) const {
  LatticeVec v;
  if (_spec.dims == 1) {
    v.c.push_back(parse_int(s));
  } else {
    for (auto part : split_top_level(unwrap(s, '[', ']'), ',')) {
      v.c.push_back(parse_int(part));
    }
    if (_spec.dims > 0 && v.c.size() > _spec.dims) {
      throw ParseError("too many coordinates in '" + std::string(s) + "'", 0);
    }
  }
  v.trim();
  return v;
}

std::string LatticeAction::describe() const {
  if (_spec.dims == 0) {
    return "finitely supported integer sequences";
  }
  return _spec.dims == 1 ? "Z" : "Z^" + std::to_string(_spec.dims);
}

}  // namespace rlcm::detail
