#include "rlcm/semigroup.hpp"

#include <atomic>         // for atomic
#include <unordered_set>  // for unordered_set

namespace rlcm {

namespace {
std::atomic<std::uint64_t> next_family_id{1};
}  // namespace

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds:
      return "Holds";
    case Outcome::Fails:
      return "Fails";
    case Outcome::Unknown:
      return "Unknown";
  }
  return "?";
}

Semigroup::Semigroup() : _id(next_family_id++) {}

void Semigroup::check_family(Element const& e) const {
  if (!e.valid() || e.family() != _id) {
    throw FamilyMismatch();
  }
}

std::vector<Element> Semigroup::unit_generators() const {
  std::vector<Element> out;
  for (auto const& g : generators()) {
    if (is_unit(g)) {
      out.push_back(g);
      out.push_back(unit_inverse(g));
    }
  }
  return out;
}

std::optional<Element> Semigroup::left_unit_rep(Element const& a) const {
  if (has_trivial_units()) {
    return a;
  }
  return std::nullopt;
}

IdealClass ideal_class(Semigroup const& S, Element const& p) {
  return IdealClass{S.ideal_rep(p)};
}

bool ideal_equal(Semigroup const& S, Element const& p, Element const& q) {
  if (p == q) {
    return true;
  }
  auto x = S.left_divide(p, q);
  return x && S.is_unit(*x);
}

bool in_ideal(Semigroup const& S, Element const& p, Element const& t) {
  return S.left_divide(p, t).has_value();
}

bool ideal_contains(Semigroup const& S, Element const& p, Element const& q) {
  return in_ideal(S, p, q) || ideal_equal(S, p, q);
}

Element product(Semigroup const& S, std::vector<Element> const& factors) {
  if (factors.empty()) {
    throw PreconditionError("product of an empty list");
  }
  Element r = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    r = S.multiply(r, factors[i]);
  }
  return r;
}

std::vector<Element> enumerate_shortlex(Semigroup const& S,
                                        std::vector<Element> const& gens,
                                        int radius,
                                        std::size_t max_size) {
  std::vector<Element> out;
  std::unordered_set<Element, ElementHash> seen;
  auto full = [&] { return max_size != 0 && out.size() >= max_size; };
  std::vector<Element> frontier;
  if (auto one = S.identity()) {
    out.push_back(*one);
    seen.insert(*one);
    frontier.push_back(*one);
  } else if (radius >= 1) {
    // Without an identity the words of length one are the base level.
    for (auto const& g : gens) {
      if (full()) {
        return out;
      }
      if (seen.insert(g).second) {
        out.push_back(g);
        frontier.push_back(g);
      }
    }
    --radius;
  }
  for (int level = 1; level <= radius && !frontier.empty(); ++level) {
    std::vector<Element> next;
    for (auto const& u : frontier) {
      for (auto const& g : gens) {
        if (full()) {
          return out;
        }
        Element x = S.multiply(u, g);
        if (seen.insert(x).second) {
          out.push_back(x);
          next.push_back(x);
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::string format_list(Semigroup const& S, std::vector<Element> const& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += S.format(xs[i]);
  }
  return out + "}";
}

Verdict residual_nonempty(Semigroup const& S,
                          ResidualQuery const& query,
                          SearchBudget const& budget) {
  static char const* const kRule = "residual: containment pruning then search";
  Element const& sigma           = query.sigma;
  S.check_family(sigma);

  // (1) sigma S inside some obstacle ideal: empty.
  std::vector<Element> live;
  for (auto const& q : query.obstacles) {
    if (ideal_contains(S, q, sigma)) {
      return Verdict::fails(S.format(sigma) + " S is contained in " + S.format(q)
                                + " S",
                            kRule,
                            {sigma, q},
                            true);
    }
    if (!S.right_lcm(sigma, q).is_disjoint()) {
      live.push_back(q);
    }
  }
  auto outside = [&](Element const& w) {
    for (auto const& q : live) {
      if (in_ideal(S, q, w)) {
        return false;
      }
    }
    return true;
  };

  // (2) In a monoid sigma itself lies in sigma S, and by (1) avoids every
  // obstacle.
  if (S.identity()) {
    return Verdict::holds("witness " + S.format(sigma), kRule, {sigma}, true);
  }

  // (3) Bounded search over sigma t, t in the generator ball.
  std::size_t examined = 0;
  for (auto const& t : enumerate_shortlex(S, S.generators(), budget.radius)) {
    if (++examined > budget.max_candidates) {
      break;
    }
    Element w = S.multiply(sigma, t);
    if (outside(w)) {
      return Verdict::holds("witness " + S.format(w), kRule, {w});
    }
  }
  return Verdict::unknown("no witness among " + std::to_string(examined)
                          + " candidates at radius "
                          + std::to_string(budget.radius));
}

}  // namespace rlcm
