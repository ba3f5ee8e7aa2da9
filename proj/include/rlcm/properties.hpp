#pragma once

#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "rlcm/families/self_similar.hpp"
#include "rlcm/semigroup.hpp"
#include "rlcm/verdict.hpp"

namespace rlcm {

// Every checker returns a Verdict. Holds and Fails verdicts marked
// structural follow from a criterion on the family's structure data; all
// other verdicts come from shortlex searches bounded by the budget. A Fails
// verdict is replayed with replay_verdict before it is returned, and the
// data layout per condition is documented next to the checker.

//! aS^* is contained in S^*a. Fails data: {a, x} with ax not in S^*a.
Verdict check_C1(Semigroup const& S, SearchBudget const& budget);

//! S^*a is contained in aS^*. Fails data: {x, a} with xa not in aS^*.
Verdict check_C2(Semigroup const& S, SearchBudget const& budget);

//! xpS meets pS only if xpS = pS. Fails data: {x, p}.
Verdict check_D1(Semigroup const& S, SearchBudget const& budget);

//! For every unit x != 1 and every p there is q in pS with xqS != qS.
//! Fails data: {x, p} where x fixes every principal ideal inside pS.
Verdict check_strong_effectiveness(Semigroup const& S, SearchBudget const& budget);

//! Every unit x != 1 moves some principal right ideal. Fails data: {x}.
Verdict check_effectiveness(Semigroup const& S, SearchBudget const& budget);

//! Avoidance condition (D3). Fails data: {s, q_1, ..., q_n} where sS
//! leaves the complement of the union of the q_i S nonempty but every
//! principal ideal inside sS meets some q_i S.
Verdict check_D3(Semigroup const& S, SearchBudget const& budget);

//! Some s' in sS with s'S disjoint from every qS, q in F. Holds data: {s'}.
//! Throws PreconditionError when sS is contained in the union of the qS.
Verdict find_D3_witness(Semigroup const& S,
                        Element const& s,
                        std::vector<Element> const& F,
                        SearchBudget const& budget);

struct D2Input {
  Element s0;
  Element s1;
  //! A unit other than the identity.
  Element x;
  std::vector<Element> F;
};

//! Searches for s2 in s1 S outside every ideal qS, q in F, such that
//! rS and xrS are disjoint for s2 = s0 r. Holds data: {s2}.
//!
//! Throws PreconditionError unless x is a unit other than 1, s1 lies in
//! s0 S, and s1 S is not covered by the ideals of F.
Verdict find_D2_witness(Semigroup const& S, D2Input const& input, SearchBudget const& budget);

//! Draws valid (D2) inputs from a ball. Deterministic for a given seed.
std::vector<D2Input> sample_D2_inputs(Semigroup const& S,
                                      std::size_t count,
                                      std::uint64_t seed,
                                      SearchBudget const& budget);

//! Condition (D2). Holds structurally when (D1), strong effectiveness and
//! (D3) all hold structurally; otherwise reports the outcome of a sampled
//! witness search as Unknown, since (D2) quantifies over infinitely many
//! inputs.
Verdict check_D2(Semigroup const& S, SearchBudget const& budget);

//! ab = cb implies a = c. Fails data: {a, c, b}.
Verdict check_right_cancellative(Semigroup const& S, SearchBudget const& budget);

//! Searches words |w| <= depth and the group ball of the given radius for
//! g != 1 with g . w = w and g|_w = 1. Fails data: {(empty, g), (w, 1)}.
//! Without a witness the verdict is Unknown: the defining set ranges over
//! all of X^*.
Verdict check_selfsim_right_cancellative(SelfSimilarView const& V, int depth, int radius);

//! Transitivity on X (exact) and surjectivity of g -> g|_x on the
//! stabiliser of each letter x, by finding every state as a restriction
//! within the group ball. Holds data: pairs (g, x) for the witnesses.
Verdict check_recurrent(SelfSimilarView const& V, SearchBudget const& budget);

//! Outcome of re-checking a verdict's data through the semigroup
//! primitives.
struct ReplayReport {
  bool ok = true;
  //! Number of primitive checks performed.
  std::size_t checks = 0;
  std::string detail;
};

//! Replays the witness or counterexample carried by a verdict for the
//! given condition. Unknown verdicts replay trivially. Holds verdicts
//! without data are re-validated on sampled instances from the ball.
ReplayReport replay_verdict(Semigroup const& S,
                            std::string const& condition,
                            Verdict const& v,
                            SearchBudget const& budget);

//! Checks a (D2) witness s2 for the given input.
ReplayReport replay_D2_witness(Semigroup const& S, D2Input const& input, Element const& s2);

//! A registered condition.
struct ConditionCheck {
  std::string name;
  std::string summary;
  bool (*applies)(Semigroup const&);
  Verdict (*run)(Semigroup const&, SearchBudget const&);
};

//! C1, C2, D1, D2, D3, strong-effectiveness, effectiveness,
//! right-cancellative, recurrent.
std::vector<ConditionCheck> const& registered_checks();

//! Throws PreconditionError for unknown names.
ConditionCheck const& find_check(std::string const& name);

struct CheckRecord {
  std::string condition;
  Verdict verdict;
  SearchBudget budget;
  std::optional<Outcome> expected;
};

//! One block per record:
//!
//!   [D3]
//!   verdict = Fails
//!   detail = ...
//!   rule = ...
//!   data = ...
//!   structural = yes
//!   budget = radius 3, candidates 20000, depth 6
//!   expected = Fails
std::string format_report(Semigroup const& S, std::vector<CheckRecord> const& records);

//! True when a record expected to hold was reported as failing.
bool contradicts_expectation(CheckRecord const& r);

}  // namespace rlcm
