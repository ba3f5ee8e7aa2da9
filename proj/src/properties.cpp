#include "rlcm/properties.hpp"

#include <algorithm>  // for min
#include <random>     // for mt19937_64
#include <set>        // for set

#include "rlcm/families/free_abelian.hpp"
#include "rlcm/families/free_monoid.hpp"
#include "rlcm/families/semidirect.hpp"

namespace rlcm {

namespace {

// Rule names reported as verdict citations.
constexpr char const* kVacuous        = "trivial unit group: vacuous";
constexpr char const* kSdpUnitsCommute = "units of G x P are G x 1: (g,p)(h,1) = (g theta_p(h) g^-1,1)(g,p)";
constexpr char const* kRecurrentC1    = "recurrent self-similar actions satisfy C1";
constexpr char const* kSdpCosets      = "(h,1)(g,p)S equals (g,p)S iff g^-1 h g lies in theta_p(G), else disjoint";
constexpr char const* kSelfSimD1      = "unit translates of wS have word part of the same length";
constexpr char const* kStabiliser     = "stabiliser intersection: strongly effective iff the theta_p(G) meet trivially";
constexpr char const* kStabiliserEff  = "stabiliser of (g,p)S is g theta_p(G) g^-1";
constexpr char const* kFaithful       = "automaton groups act faithfully on X^*";
constexpr char const* kFixedWord      = "g . w = w with g|_w = 1";
constexpr char const* kIndex          = "D3 iff every theta_q(G) has infinite index";
constexpr char const* kCommutative    = "principal ideals of a free commutative monoid always meet";
constexpr char const* kD2Structural   = "strong effectiveness with D1 and D3 gives D2";
constexpr char const* kD2Procedure    = "fresh generator of P first, then shortlex ball";
constexpr char const* kCancellative   = "cancellation in G and in P";
constexpr char const* kFreeCancel     = "free and free commutative monoids are cancellative";
constexpr char const* kTransitive     = "transitivity on X";
constexpr char const* kRestrictions   = "every state is a restriction g|_x with g . x = x";

std::vector<Element> ball(Semigroup const& S, int radius, SearchBudget const& budget) {
  return enumerate_shortlex(S, S.generators(), radius, budget.max_candidates);
}

//! Units other than the identity reachable within the radius.
std::vector<Element> nontrivial_units(Semigroup const& S, int radius, SearchBudget const& budget) {
  auto gens = S.unit_generators();
  if (gens.empty()) {
    return {};
  }
  auto one = S.identity();
  std::vector<Element> out;
  for (auto& x : enumerate_shortlex(S, gens, radius, budget.max_candidates)) {
    if (!one || x != *one) {
      out.push_back(std::move(x));
    }
  }
  return out;
}

int small_radius(SearchBudget const& budget) {
  return std::min(budget.radius, 2);
}

std::string pair_text(Semigroup const& S, Element const& a, Element const& b) {
  return S.format(a) + ", " + S.format(b);
}

//! Does the unit x move some principal ideal qS with q = p t, t in the ball?
std::optional<Element> moved_ideal(Semigroup const& S,
                                   Element const& x,
                                   Element const& p,
                                   std::vector<Element> const& factors) {
  for (auto const& t : factors) {
    Element q = S.multiply(p, t);
    if (!ideal_equal(S, S.multiply(x, q), q)) {
      return q;
    }
  }
  return std::nullopt;
}

//! Words over the alphabet of length at most depth, shortlex.
std::vector<Word> words_up_to(std::size_t letters, int depth) {
  std::vector<Word> out{Word{}};
  std::size_t level_start = 0;
  for (int d = 0; d < depth; ++d) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_start; i < level_end; ++i) {
      for (std::size_t x = 0; x < letters; ++x) {
        Word w = out[i];
        w.letters.push_back(static_cast<std::uint8_t>(x));
        out.push_back(std::move(w));
      }
    }
    level_start = level_end;
  }
  return out;
}

//! A witness g != 1, w with g . w = w and g|_w reducing to the empty word.
std::optional<std::pair<Element, Word>> fixed_word_witness(SelfSimilarView const& V,
                                                           int depth,
                                                           int radius) {
  auto const& aut = V.automaton();
  auto one        = V.semigroup().identity();
  auto words      = words_up_to(aut.alphabet().size(), depth);
  for (auto const& u : V.group_ball(radius)) {
    if (u == *one) {
      continue;  // portraits differ, so u is not the identity
    }
    StateWord g = V.group_word(u);
    for (auto const& w : words) {
      if (aut.act(g, w) == w && aut.restrict(g, w).empty()) {
        return std::pair{u, w};
      }
    }
  }
  return std::nullopt;
}

Verdict replayed(Semigroup const& S, std::string const& condition, Verdict v) {
  if (v.is_fails()) {
    auto r = replay_verdict(S, condition, v, SearchBudget{});
    if (!r.ok) {
      throw Error("internal: " + condition + " counterexample does not replay: " + r.detail);
    }
  }
  return v;
}

bool is_free_commutative_monoid(Semigroup const& S) {
  auto const* fa = dynamic_cast<FreeAbelian const*>(&S);
  return fa != nullptr && fa->unital() && !S.generators().empty();
}

}  // namespace

Verdict check_C1(Semigroup const& S, SearchBudget const& budget) {
  if (S.has_trivial_units()) {
    return Verdict::holds("no units other than the identity", kVacuous, {}, true);
  }
  if (S.semidirect()) {
    return Verdict::holds("every a x is x' a with x' a unit", kSdpUnitsCommute, {}, true);
  }
  if (auto const* V = S.self_similar()) {
    auto rec = check_recurrent(*V, budget);
    if (rec.is_holds()) {
      return Verdict::holds("the action is recurrent", kRecurrentC1, {}, true);
    }
  }
  std::size_t pairs = 0, undecided = 0;
  auto units = nontrivial_units(S, small_radius(budget), budget);
  for (auto const& a : ball(S, budget.radius, budget)) {
    for (auto const& x : units) {
      if (++pairs > budget.max_candidates) {
        break;
      }
      try {
        if (!S.unit_left_quotient(S.multiply(a, x), a)) {
          return replayed(S, "C1",
                          Verdict::fails(S.format(S.multiply(a, x)) + " is not in S^* "
                                             + S.format(a),
                                         "a x in S^* a", {a, x}));
        }
      } catch (Undecided const&) {
        ++undecided;
      }
    }
  }
  return Verdict::unknown("no counterexample among " + std::to_string(pairs) + " pairs ("
                          + std::to_string(undecided) + " undecided)");
}

Verdict check_C2(Semigroup const& S, SearchBudget const& budget) {
  if (S.has_trivial_units()) {
    return Verdict::holds("no units other than the identity", kVacuous, {}, true);
  }
  std::size_t pairs = 0;
  auto units        = nontrivial_units(S, small_radius(budget), budget);
  for (auto const& a : ball(S, budget.radius, budget)) {
    for (auto const& x : units) {
      ++pairs;
      Element xa = S.multiply(x, a);
      auto y     = S.left_divide(a, xa);
      if (!y || !S.is_unit(*y)) {
        return replayed(S, "C2",
                        Verdict::fails(S.format(xa) + " is not in " + S.format(a) + " S^*",
                                       "x a in a S^*", {x, a}));
      }
    }
  }
  return Verdict::unknown("no counterexample among " + std::to_string(pairs) + " pairs");
}

namespace {

std::optional<Verdict> d1_counterexample(Semigroup const& S, SearchBudget const& budget) {
  auto units = nontrivial_units(S, small_radius(budget), budget);
  for (auto const& p : ball(S, budget.radius, budget)) {
    for (auto const& x : units) {
      Element xp = S.multiply(x, p);
      if (!S.right_lcm(xp, p).is_disjoint() && !ideal_equal(S, xp, p)) {
        return Verdict::fails(S.format(xp) + " S meets " + S.format(p) + " S without equality",
                              "xpS meets pS", {x, p});
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Verdict check_D1(Semigroup const& S, SearchBudget const& budget) {
  if (S.has_trivial_units()) {
    return Verdict::holds("no units other than the identity", kVacuous, {}, true);
  }
  if (auto v = d1_counterexample(S, budget)) {
    return replayed(S, "D1", *v);
  }
  if (S.semidirect()) {
    return Verdict::holds("unit translates of (g,p)S are equal or disjoint", kSdpCosets, {}, true);
  }
  if (S.self_similar()) {
    return Verdict::holds("xwS meets wS only when x . w = w", kSelfSimD1, {}, true);
  }
  return Verdict::unknown("no counterexample at radius " + std::to_string(budget.radius));
}

Verdict check_strong_effectiveness(Semigroup const& S, SearchBudget const& budget) {
  if (S.has_trivial_units()) {
    return Verdict::holds("no units other than the identity", kVacuous, {}, true);
  }
  if (auto const* sd = S.semidirect()) {
    auto ii = sd->image_intersection();
    if (ii.kind == ImageIntersection::Kind::Trivial) {
      return Verdict::holds(ii.reason, kStabiliser, {}, true);
    }
    if (ii.kind == ImageIntersection::Kind::Nontrivial && ii.witness && sd->group_abelian()) {
      Element one = *S.identity();
      return replayed(S, "strong-effectiveness",
                      Verdict::fails(S.format(*ii.witness) + " lies in every theta_p(G) and fixes "
                                         "every principal right ideal: "
                                         + ii.reason,
                                     kStabiliser, {*ii.witness, one}, true));
    }
  }
  if (auto const* V = S.self_similar()) {
    if (auto w = fixed_word_witness(*V, budget.depth, budget.radius)) {
      Element p = V->word(w->second);
      return replayed(S, "strong-effectiveness",
                      Verdict::fails(S.format(w->first) + " fixes " + S.format(p)
                                         + " with trivial restriction",
                                     kFixedWord, {w->first, p}, true));
    }
    return Verdict::unknown("no g with g . w = w and g|_w = 1 for |w| <= "
                                + std::to_string(budget.depth) + " and group radius "
                                + std::to_string(budget.radius),
                            kFixedWord);
  }
  // Generic: look for a moved ideal below each sampled p.
  auto factors      = ball(S, budget.radius, budget);
  std::size_t pairs = 0;
  for (auto const& x : nontrivial_units(S, small_radius(budget), budget)) {
    for (auto const& p : ball(S, small_radius(budget), budget)) {
      ++pairs;
      if (!moved_ideal(S, x, p, factors)) {
        return Verdict::unknown("no q in " + S.format(p) + " S moved by " + S.format(x)
                                + " within radius " + std::to_string(budget.radius));
      }
    }
  }
  return Verdict::unknown("moved ideals found for all " + std::to_string(pairs)
                          + " sampled pairs");
}

Verdict check_effectiveness(Semigroup const& S, SearchBudget const& budget) {
  if (S.has_trivial_units()) {
    return Verdict::holds("no units other than the identity", kVacuous, {}, true);
  }
  if (auto const* sd = S.semidirect()) {
    // The kernel of the action on principal right ideals is the
    // intersection of the stabilisers; the stabilisers of the (1,p)S alone
    // already meet in the intersection of the theta_p(G).
    auto ii = sd->image_intersection();
    if (ii.kind == ImageIntersection::Kind::Trivial) {
      return Verdict::holds("only the identity lies in every stabiliser theta_p(G)",
                            kStabiliserEff, {}, true);
    }
    // For abelian G every stabiliser is some theta_p(G).
    if (ii.kind == ImageIntersection::Kind::Nontrivial && ii.witness && sd->group_abelian()) {
      return replayed(S, "effectiveness",
                      Verdict::fails(S.format(*ii.witness) + " lies in every stabiliser",
                                     kStabiliserEff, {*ii.witness}, true));
    }
  }
  if (S.self_similar()) {
    return Verdict::holds("nontrivial units move some word", kFaithful, {}, true);
  }
  auto ideals = ball(S, budget.radius, budget);
  auto units  = nontrivial_units(S, small_radius(budget), budget);
  for (auto const& x : units) {
    bool moved = false;
    for (auto const& q : ideals) {
      if (!ideal_equal(S, S.multiply(x, q), q)) {
        moved = true;
        break;
      }
    }
    if (!moved) {
      return Verdict::unknown(S.format(x) + " fixes every ideal within radius "
                              + std::to_string(budget.radius));
    }
  }
  return Verdict::unknown("all " + std::to_string(units.size())
                          + " sampled units move an ideal");
}

Verdict find_D3_witness(Semigroup const& S,
                        Element const& s,
                        std::vector<Element> const& F,
                        SearchBudget const& budget) {
  if (residual_nonempty(S, {s, F}, budget).is_fails()) {
    throw PreconditionError(S.format(s) + " S is covered by the obstacles");
  }
  std::vector<Element> factors;
  if (auto const* sd = S.semidirect()) {
    factors = sd->d2_candidates(s, F, static_cast<unsigned>(budget.depth));
  }
  auto rest = ball(S, budget.radius, budget);
  factors.insert(factors.end(), rest.begin(), rest.end());
  std::size_t examined = 0;
  for (auto const& t : factors) {
    if (++examined > budget.max_candidates) {
      break;
    }
    Element s2 = S.multiply(s, t);
    bool clear = true;
    for (auto const& q : F) {
      if (!S.right_lcm(s2, q).is_disjoint()) {
        clear = false;
        break;
      }
    }
    if (clear) {
      return Verdict::holds("s' = " + S.format(s2), kD2Procedure, {s2});
    }
  }
  return Verdict::unknown("no s' among " + std::to_string(examined) + " candidates");
}

namespace {

std::optional<Verdict> d3_counterexample(Semigroup const& S) {
  if (auto const* sd = S.semidirect()) {
    for (auto id : sd->p_presentation().ids()) {
      auto cd = sd->index_of(id);
      if (!cd.finite) {
        continue;
      }
      Element q = sd->p_generator(id);
      std::string what = "theta_" + S.format(q) + "(G) has index " + std::to_string(cd.index);
      if (cd.reps.empty()) {
        return Verdict::fails(what + "; coset representatives not listed", kIndex, {}, true);
      }
      std::vector<Element> data{*S.identity()};
      data.insert(data.end(), cd.reps.begin(), cd.reps.end());
      return Verdict::fails(what + "; every ideal meets one of " + format_list(S, cd.reps),
                            kIndex, std::move(data), true);
    }
    return std::nullopt;
  }
  if (is_free_commutative_monoid(S)) {
    Element g = S.generators().front();
    return Verdict::fails("every ideal meets " + S.format(g) + " S", kCommutative,
                          {*S.identity(), g}, true);
  }
  return std::nullopt;
}

//! (s, F) with F a small subset of the ball and sS not covered by F.
std::vector<std::pair<Element, std::vector<Element>>> sample_D3_inputs(Semigroup const& S,
                                                                       std::size_t count,
                                                                       std::uint64_t seed,
                                                                       SearchBudget const& budget) {
  auto pool = ball(S, small_radius(budget), budget);
  std::vector<std::pair<Element, std::vector<Element>>> out;
  if (pool.empty()) {
    return out;
  }
  std::mt19937_64 rng(seed);
  auto pick = [&] { return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]; };
  for (std::size_t attempt = 0; out.size() < count && attempt < 50 * count; ++attempt) {
    Element s = pick();
    std::vector<Element> F;
    auto n = std::uniform_int_distribution<int>(0, 2)(rng);
    for (int i = 0; i < n; ++i) {
      F.push_back(pick());
    }
    if (residual_nonempty(S, {s, F}, budget).is_holds()) {
      out.emplace_back(s, std::move(F));
    }
  }
  return out;
}

}  // namespace

Verdict check_D3(Semigroup const& S, SearchBudget const& budget) {
  if (auto v = d3_counterexample(S)) {
    return replayed(S, "D3", *v);
  }
  if (auto const* sd = S.semidirect()) {
    if (sd->p_infinitely_generated()) {
      return Verdict::unknown("the listed generators of P have infinite index; P has "
                              "infinitely many",
                              kIndex);
    }
    return Verdict::holds("every theta_q(G) has infinite index", kIndex, {}, true);
  }
  auto inputs       = sample_D3_inputs(S, 20, 1, budget);
  std::size_t found = 0;
  for (auto const& [s, F] : inputs) {
    if (find_D3_witness(S, s, F, budget).is_holds()) {
      ++found;
    }
  }
  return Verdict::unknown("witnesses found for " + std::to_string(found) + " of "
                          + std::to_string(inputs.size()) + " sampled inputs");
}

Verdict find_D2_witness(Semigroup const& S, D2Input const& in, SearchBudget const& budget) {
  if (!S.is_unit(in.x) || in.x == S.identity()) {
    throw PreconditionError(S.format(in.x) + " is not a unit other than the identity");
  }
  if (!S.left_divide(in.s0, in.s1)) {
    throw PreconditionError(S.format(in.s1) + " is not in " + S.format(in.s0) + " S");
  }
  if (residual_nonempty(S, {in.s1, in.F}, budget).is_fails()) {
    throw PreconditionError(S.format(in.s1) + " S is covered by the obstacles");
  }
  std::vector<Element> factors;
  if (auto const* sd = S.semidirect()) {
    factors = sd->d2_candidates(in.s1, in.F, static_cast<unsigned>(budget.depth));
  }
  auto rest = ball(S, budget.radius, budget);
  factors.insert(factors.end(), rest.begin(), rest.end());

  std::size_t examined = 0;
  for (auto const& t : factors) {
    if (++examined > budget.max_candidates) {
      break;
    }
    Element s2   = S.multiply(in.s1, t);
    bool outside = true;
    for (auto const& q : in.F) {
      if (in_ideal(S, q, s2)) {
        outside = false;
        break;
      }
    }
    if (!outside) {
      continue;
    }
    Element r = *S.left_divide(in.s0, s2);
    if (S.right_lcm(r, S.multiply(in.x, r)).is_disjoint()) {
      return Verdict::holds("s2 = " + S.format(s2), kD2Procedure, {s2});
    }
  }
  return Verdict::unknown("no s2 among " + std::to_string(examined) + " candidates");
}

std::vector<D2Input> sample_D2_inputs(Semigroup const& S,
                                      std::size_t count,
                                      std::uint64_t seed,
                                      SearchBudget const& budget) {
  auto pool  = ball(S, small_radius(budget), budget);
  auto units = nontrivial_units(S, small_radius(budget), budget);
  std::vector<D2Input> out;
  if (pool.empty() || units.empty()) {
    return out;
  }
  std::mt19937_64 rng(seed);
  auto index = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  for (std::size_t attempt = 0; out.size() < count && attempt < 50 * count; ++attempt) {
    D2Input in;
    in.s0 = pool[index(pool.size())];
    in.s1 = S.multiply(in.s0, pool[index(pool.size())]);
    in.x  = units[index(units.size())];
    auto n = index(3);
    for (std::size_t i = 0; i < n; ++i) {
      in.F.push_back(pool[index(pool.size())]);
    }
    if (residual_nonempty(S, {in.s1, in.F}, budget).is_holds()) {
      out.push_back(std::move(in));
    }
  }
  return out;
}

Verdict check_D2(Semigroup const& S, SearchBudget const& budget) {
  if (S.has_trivial_units()) {
    return Verdict::holds("no units other than the identity", kVacuous, {}, true);
  }
  auto d1 = check_D1(S, budget);
  auto se = check_strong_effectiveness(S, budget);
  auto d3 = check_D3(S, budget);
  if (d1.is_holds() && d1.structural && se.is_holds() && se.structural && d3.is_holds()
      && d3.structural) {
    return Verdict::holds("D1, strong effectiveness and D3 hold", kD2Structural, {}, true);
  }
  auto inputs       = sample_D2_inputs(S, 20, 1, budget);
  std::size_t found = 0;
  for (auto const& in : inputs) {
    if (find_D2_witness(S, in, budget).is_holds()) {
      ++found;
    }
  }
  return Verdict::unknown("witnesses found for " + std::to_string(found) + " of "
                          + std::to_string(inputs.size()) + " sampled inputs");
}

Verdict check_selfsim_right_cancellative(SelfSimilarView const& V, int depth, int radius) {
  Semigroup const& S = V.semigroup();
  if (auto w = fixed_word_witness(V, depth, radius)) {
    Element b = V.word(w->second);
    return replayed(S, "right-cancellative",
                    Verdict::fails(S.format(w->first) + " " + S.format(b) + " = " + S.format(b),
                                   kFixedWord, {w->first, *S.identity(), b}, true));
  }
  return Verdict::unknown("no g with g . w = w and g|_w = 1 for |w| <= " + std::to_string(depth)
                              + " and group radius " + std::to_string(radius),
                          kFixedWord);
}

Verdict check_right_cancellative(Semigroup const& S, SearchBudget const& budget) {
  if (S.semidirect()) {
    return Verdict::holds("(g,p)(h,q) determines (g,p)", kCancellative, {}, true);
  }
  if (dynamic_cast<FreeAbelian const*>(&S) || dynamic_cast<FreeMonoid const*>(&S)) {
    return Verdict::holds("cancellative", kFreeCancel, {}, true);
  }
  if (auto const* V = S.self_similar()) {
    return check_selfsim_right_cancellative(*V, budget.depth, budget.radius);
  }
  auto pool           = ball(S, small_radius(budget), budget);
  std::size_t triples = 0;
  for (auto const& b : pool) {
    for (auto const& a : pool) {
      for (auto const& c : pool) {
        if (++triples > budget.max_candidates) {
          return Verdict::unknown("no counterexample among " + std::to_string(budget.max_candidates)
                                  + " triples");
        }
        if (a < c && S.multiply(a, b) == S.multiply(c, b)) {
          return replayed(S, "right-cancellative",
                          Verdict::fails(pair_text(S, a, c) + " agree after " + S.format(b),
                                         "ab = cb", {a, c, b}));
        }
      }
    }
  }
  return Verdict::unknown("no counterexample among " + std::to_string(triples) + " triples");
}

namespace {

//! Letters reachable from 0 under the state permutations.
std::set<std::uint8_t> orbit_of_first_letter(MealyAutomaton const& aut) {
  std::set<std::uint8_t> seen{0};
  std::vector<std::uint8_t> todo{0};
  while (!todo.empty()) {
    auto x = todo.back();
    todo.pop_back();
    for (std::size_t s = 0; s < aut.num_states(); ++s) {
      auto y = aut.output(s, x);
      if (seen.insert(y).second) {
        todo.push_back(y);
      }
    }
  }
  return seen;
}

}  // namespace

Verdict check_recurrent(SelfSimilarView const& V, SearchBudget const& budget) {
  auto const& aut = V.automaton();
  Semigroup const& S = V.semigroup();
  auto orbit = orbit_of_first_letter(aut);
  if (orbit.size() < aut.alphabet().size()) {
    std::uint8_t y = 0;
    while (orbit.count(y)) {
      ++y;
    }
    Element a = V.word(Word{{0}});
    Element b = V.word(Word{{y}});
    return replayed(S, "recurrent",
                    Verdict::fails("no group element sends " + S.format(a) + " to " + S.format(b),
                                   kTransitive, {a, b}, true));
  }
  auto ball_units = V.group_ball(budget.radius);
  std::vector<Element> data;
  for (std::uint8_t x = 0; x < aut.alphabet().size(); ++x) {
    for (std::size_t s = 0; s < aut.num_states(); ++s) {
      if (aut.is_identity_state(s)) {
        continue;
      }
      StateWord target = aut.reduce({static_cast<int>(s) + 1});
      bool found       = false;
      for (auto const& u : ball_units) {
        StateWord g = V.group_word(u);
        auto [y, r] = aut.act_letter(g, x);
        if (y == x && aut.reduce(r) == target) {
          data.push_back(u);
          data.push_back(V.word(Word{{x}}));
          found = true;
          break;
        }
      }
      if (!found) {
        return Verdict::unknown("no g fixing " + std::string(1, aut.alphabet().letter(x))
                                    + " with restriction " + aut.state_name(s)
                                    + " within group radius " + std::to_string(budget.radius),
                                kRestrictions);
      }
    }
  }
  return Verdict::holds("transitive on X; every state is a restriction of a stabiliser element",
                        kRestrictions, std::move(data));
}

namespace {

ReplayReport fail(std::size_t checks, std::string detail) {
  return {false, checks, std::move(detail)};
}

//! sS avoids the complement of the union of F, and every ideal below s
//! in the ball meets some qS.
ReplayReport replay_d3_counterexample(Semigroup const& S,
                                      std::vector<Element> const& data,
                                      SearchBudget const& budget) {
  if (data.size() < 2) {
    return fail(0, "no counterexample data");
  }
  Element s = data.front();
  std::vector<Element> F(data.begin() + 1, data.end());
  ReplayReport r;
  for (std::size_t i = 0; i < F.size(); ++i) {
    ++r.checks;
    if (in_ideal(S, F[i], s)) {
      return fail(r.checks, S.format(s) + " lies in " + S.format(F[i]) + " S");
    }
  }
  for (auto const& t : ball(S, budget.radius, budget)) {
    Element st = S.multiply(s, t);
    bool meets = false;
    for (auto const& q : F) {
      ++r.checks;
      if (!S.right_lcm(st, q).is_disjoint()) {
        meets = true;
        break;
      }
    }
    if (!meets) {
      return fail(r.checks, S.format(st) + " S avoids every obstacle");
    }
  }
  return r;
}

ReplayReport replay_fails(Semigroup const& S,
                          std::string const& c,
                          std::vector<Element> const& d,
                          SearchBudget const& budget) {
  ReplayReport r;
  auto need = [&](std::size_t n) { return d.size() >= n; };
  if (c == "C1" && need(2)) {
    r.checks = 1;
    if (S.unit_left_quotient(S.multiply(d[0], d[1]), d[0])) {
      return fail(1, "a x lies in S^* a");
    }
    return r;
  }
  if (c == "C2" && need(2)) {
    r.checks = 1;
    auto y   = S.left_divide(d[1], S.multiply(d[0], d[1]));
    if (y && S.is_unit(*y)) {
      return fail(1, "x a lies in a S^*");
    }
    return r;
  }
  if (c == "D1" && need(2)) {
    r.checks   = 1;
    Element xp = S.multiply(d[0], d[1]);
    if (S.right_lcm(xp, d[1]).is_disjoint() || ideal_equal(S, xp, d[1])) {
      return fail(1, "the ideals are disjoint or equal");
    }
    return r;
  }
  if ((c == "strong-effectiveness" || c == "effectiveness") && need(1)) {
    Element x = d[0];
    Element p = need(2) ? d[1] : *S.identity();
    if (!S.is_unit(x) || x == S.identity()) {
      return fail(0, S.format(x) + " is not a nontrivial unit");
    }
    for (auto const& t : ball(S, budget.radius, budget)) {
      ++r.checks;
      Element q = S.multiply(p, t);
      if (!ideal_equal(S, S.multiply(x, q), q)) {
        return fail(r.checks, S.format(x) + " moves " + S.format(q) + " S");
      }
    }
    return r;
  }
  if (c == "D3") {
    return replay_d3_counterexample(S, d, budget);
  }
  if (c == "right-cancellative" && need(3)) {
    r.checks = 2;
    if (d[0] == d[1] || S.multiply(d[0], d[2]) != S.multiply(d[1], d[2])) {
      return fail(2, "not a cancellation failure");
    }
    if (auto const* V = S.self_similar()) {
      // Element equality compares group parts up to depth; require the
      // restriction to vanish as a word.
      auto const& aut = V->automaton();
      StateWord g     = aut.multiply(V->group_word(d[0]), aut.inverse(V->group_word(d[1])));
      Word w          = V->word_part(d[2]);
      r.checks += 1;
      if (!V->word_part(d[0]).empty() || !V->word_part(d[1]).empty() || aut.act(g, w) != w
          || !aut.restrict(g, w).empty()) {
        return fail(r.checks, "the restriction is not the empty word");
      }
    }
    return r;
  }
  if (c == "recurrent" && need(2)) {
    auto const* V = S.self_similar();
    if (!V) {
      return fail(0, "not a self-similar family");
    }
    auto orbit = orbit_of_first_letter(V->automaton());
    r.checks   = 1;
    Word b     = V->word_part(d[1]);
    if (b.size() != 1 || orbit.count(b.letters[0])) {
      return fail(1, "the letter is in the orbit");
    }
    return r;
  }
  return fail(0, "no counterexample data for " + c);
}

ReplayReport replay_holds(Semigroup const& S,
                          std::string const& c,
                          Verdict const& v,
                          SearchBudget const& budget) {
  ReplayReport r;
  int small    = small_radius(budget);
  auto units   = nontrivial_units(S, small, budget);
  auto samples = ball(S, small, budget);
  if (c == "C1") {
    for (auto const& a : samples) {
      for (auto const& x : units) {
        try {
          ++r.checks;
          if (!S.unit_left_quotient(S.multiply(a, x), a)) {
            return fail(r.checks, pair_text(S, a, x) + ": a x not in S^* a");
          }
        } catch (Undecided const&) {
          --r.checks;
        }
      }
    }
    return r;
  }
  if (c == "C2") {
    for (auto const& a : samples) {
      for (auto const& x : units) {
        ++r.checks;
        auto y = S.left_divide(a, S.multiply(x, a));
        if (!y || !S.is_unit(*y)) {
          return fail(r.checks, pair_text(S, x, a) + ": x a not in a S^*");
        }
      }
    }
    return r;
  }
  if (c == "D1") {
    if (auto bad = d1_counterexample(S, budget)) {
      return fail(1, bad->detail);
    }
    r.checks = units.size() * ball(S, budget.radius, budget).size();
    return r;
  }
  if (c == "strong-effectiveness") {
    auto factors = ball(S, budget.radius, budget);
    for (auto const& x : units) {
      for (auto const& p : samples) {
        ++r.checks;
        if (!moved_ideal(S, x, p, factors)) {
          return fail(r.checks, "no ideal below " + S.format(p) + " moved by " + S.format(x));
        }
      }
    }
    return r;
  }
  if (c == "effectiveness") {
    auto one = S.identity();
    for (auto const& x : units) {
      ++r.checks;
      if (!moved_ideal(S, x, *one, ball(S, budget.radius, budget))) {
        return fail(r.checks, S.format(x) + " moves no ideal in the ball");
      }
    }
    return r;
  }
  if (c == "D3") {
    for (auto const& [s, F] : sample_D3_inputs(S, 20, 7, budget)) {
      ++r.checks;
      auto w = find_D3_witness(S, s, F, budget);
      if (!w.is_holds()) {
        return fail(r.checks, "no witness below " + S.format(s));
      }
      for (auto const& q : F) {
        if (!S.right_lcm(w.data[0], q).is_disjoint() || !in_ideal(S, s, w.data[0])) {
          return fail(r.checks, "witness " + S.format(w.data[0]) + " does not replay");
        }
      }
    }
    return r;
  }
  if (c == "D2") {
    for (auto const& in : sample_D2_inputs(S, 20, 7, budget)) {
      ++r.checks;
      auto w = find_D2_witness(S, in, budget);
      if (!w.is_holds()) {
        return fail(r.checks, "no s2 below " + S.format(in.s1));
      }
      auto rep = replay_D2_witness(S, in, w.data[0]);
      if (!rep.ok) {
        return rep;
      }
    }
    return r;
  }
  if (c == "right-cancellative") {
    for (auto const& b : samples) {
      for (auto const& a : samples) {
        for (auto const& c2 : samples) {
          ++r.checks;
          if (a != c2 && S.multiply(a, b) == S.multiply(c2, b)) {
            return fail(r.checks, pair_text(S, a, c2) + " agree after " + S.format(b));
          }
        }
      }
    }
    return r;
  }
  if (c == "recurrent") {
    auto const* V = S.self_similar();
    if (!V) {
      return fail(0, "not a self-similar family");
    }
    auto const& aut = V->automaton();
    std::set<std::pair<std::uint8_t, StateWord>> covered;
    for (std::size_t i = 0; i + 1 < v.data.size(); i += 2) {
      ++r.checks;
      StateWord g = V->group_word(v.data[i]);
      Word x      = V->word_part(v.data[i + 1]);
      auto [y, rest] = aut.act_letter(g, x.letters.at(0));
      if (y != x.letters[0]) {
        return fail(r.checks, "the witness does not fix its letter");
      }
      covered.emplace(y, aut.reduce(rest));
    }
    for (std::uint8_t x = 0; x < aut.alphabet().size(); ++x) {
      for (std::size_t s = 0; s < aut.num_states(); ++s) {
        if (!aut.is_identity_state(s) && !covered.count({x, aut.reduce({static_cast<int>(s) + 1})})) {
          return fail(r.checks, "state " + aut.state_name(s) + " is not covered");
        }
      }
    }
    if (orbit_of_first_letter(aut).size() != aut.alphabet().size()) {
      return fail(r.checks, "not transitive");
    }
    return r;
  }
  return fail(0, "unknown condition " + c);
}

}  // namespace

ReplayReport replay_D2_witness(Semigroup const& S, D2Input const& in, Element const& s2) {
  ReplayReport r;
  r.checks = 1;
  if (!in_ideal(S, in.s1, s2)) {
    return fail(1, S.format(s2) + " is not in " + S.format(in.s1) + " S");
  }
  for (auto const& q : in.F) {
    ++r.checks;
    if (in_ideal(S, q, s2)) {
      return fail(r.checks, S.format(s2) + " lies in " + S.format(q) + " S");
    }
  }
  ++r.checks;
  Element rr = *S.left_divide(in.s0, s2);
  if (!S.right_lcm(rr, S.multiply(in.x, rr)).is_disjoint()) {
    return fail(r.checks, S.format(rr) + " S meets its translate by " + S.format(in.x));
  }
  return r;
}

ReplayReport replay_verdict(Semigroup const& S,
                            std::string const& condition,
                            Verdict const& v,
                            SearchBudget const& budget) {
  if (v.is_unknown()) {
    return {};
  }
  if (v.is_fails()) {
    return replay_fails(S, condition, v.data, budget);
  }
  return replay_holds(S, condition, v, budget);
}

namespace {

bool always(Semigroup const&) {
  return true;
}
bool self_similar_only(Semigroup const& S) {
  return S.self_similar() != nullptr;
}

}  // namespace

std::vector<ConditionCheck> const& registered_checks() {
  static std::vector<ConditionCheck> const checks{
      {"C1", "aS^* inside S^*a", always, check_C1},
      {"C2", "S^*a inside aS^*", always, check_C2},
      {"D1", "unit translates of ideals are equal or disjoint", always, check_D1},
      {"D2", "avoidance with a unit translate", always, check_D2},
      {"D3", "avoidance of finitely many ideals", always, check_D3},
      {"strong-effectiveness", "units move ideals below every p", always,
       check_strong_effectiveness},
      {"effectiveness", "units act faithfully on principal right ideals", always,
       check_effectiveness},
      {"right-cancellative", "ab = cb implies a = c", always, check_right_cancellative},
      {"recurrent", "transitive with surjective restriction maps", self_similar_only,
       [](Semigroup const& S, SearchBudget const& b) {
         return check_recurrent(*S.self_similar(), b);
       }},
  };
  return checks;
}

ConditionCheck const& find_check(std::string const& name) {
  for (auto const& c : registered_checks()) {
    if (c.name == name) {
      return c;
    }
  }
  throw PreconditionError("unknown condition '" + name + "'");
}

std::string format_report(Semigroup const& S, std::vector<CheckRecord> const& records) {
  std::string out;
  for (auto const& rec : records) {
    if (!out.empty()) {
      out += "\n";
    }
    auto const& v = rec.verdict;
    out += "[" + rec.condition + "]\n";
    out += "verdict = " + to_string(v.outcome) + "\n";
    out += "detail = " + v.detail + "\n";
    out += "rule = " + v.citation + "\n";
    if (!v.data.empty()) {
      out += "data = " + format_list(S, v.data) + "\n";
    }
    out += std::string("structural = ") + (v.structural ? "yes" : "no") + "\n";
    out += "budget = radius " + std::to_string(rec.budget.radius) + ", candidates "
           + std::to_string(rec.budget.max_candidates) + ", depth "
           + std::to_string(rec.budget.depth) + "\n";
    if (rec.expected) {
      out += "expected = " + to_string(*rec.expected) + "\n";
    }
  }
  return out;
}

bool contradicts_expectation(CheckRecord const& r) {
  return r.expected == Outcome::Holds && r.verdict.is_fails();
}

}  // namespace rlcm
