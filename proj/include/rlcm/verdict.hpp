#pragma once

#include <cstddef>  // for size_t
#include <string>   // for string
#include <vector>   // for vector

#include "rlcm/element.hpp"

namespace rlcm {

enum class Outcome { Holds, Fails, Unknown };

std::string to_string(Outcome o);

//! Result of a budgeted check.
//!
//! A Fails verdict always carries a counterexample that has been replayed
//! through the semigroup primitives before the verdict is returned.
struct Verdict {
  Outcome outcome = Outcome::Unknown;
  //! Witness, counterexample or exhausted budget, human readable.
  std::string detail;
  //! The rule that produced the verdict.
  std::string citation;
  //! Machine-readable witness or counterexample elements.
  std::vector<Element> data;
  //! True when the verdict follows from a structural criterion rather than
  //! from a finite search.
  bool structural = false;

  static Verdict holds(std::string detail,
                       std::string citation,
                       std::vector<Element> data = {},
                       bool structural           = false) {
    return {Outcome::Holds, std::move(detail), std::move(citation), std::move(data),
            structural};
  }
  static Verdict fails(std::string detail,
                       std::string citation,
                       std::vector<Element> data = {},
                       bool structural           = false) {
    return {Outcome::Fails, std::move(detail), std::move(citation), std::move(data),
            structural};
  }
  static Verdict unknown(std::string detail, std::string citation = "bounded search") {
    return {Outcome::Unknown, std::move(detail), std::move(citation), {}, false};
  }

  bool is_holds() const {
    return outcome == Outcome::Holds;
  }
  bool is_fails() const {
    return outcome == Outcome::Fails;
  }
  bool is_unknown() const {
    return outcome == Outcome::Unknown;
  }
};

//! Limits for enumerations. Enumeration is shortlex over the family's
//! registered generator list, so results are reproducible.
struct SearchBudget {
  //! Maximum generator-word length.
  int radius = 3;
  //! Maximum number of candidates examined by a search.
  std::size_t max_candidates = 20000;
  //! Word depth for self-similar searches.
  int depth = 6;
};

}  // namespace rlcm
