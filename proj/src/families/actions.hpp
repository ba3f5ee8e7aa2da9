// Group actions by injective endomorphisms used by the semidirect product
// template. Each action provides:
//
//   Group one(), mul(a, b), inv(a)
//   Group apply(p, g)                       theta_p(g)
//   optional<Group> preimage(p, g)          theta_p^{-1}(g) if g is in the image
//   Group coset_rep(p, g)                   canonical element of g theta_p(G)
//   optional<pair<Group, Group>> solve(p1, p2, k)
//                                           (a, b) with k = theta_p2(a) theta_p1(b)
//   IndexInfo index(id, reps*)              index of theta_id(G)
//   Intersection<Group> intersection()      is the meet of all theta_p(G) trivial
//   vector<Group> unit_generators()
//   optional<Group> fresh(avoid)            element supported away from avoid
//   format / parse / describe / abelian
#pragma once

#include <map>          // for map
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "rlcm/families/free_abelian.hpp"
#include "rlcm/families/polynomial.hpp"
#include "rlcm/families/semidirect.hpp"

namespace rlcm::detail {

struct IndexInfo {
  bool finite = false;
  u64 index   = 0;
};

template <typename G>
struct Intersection {
  ImageIntersection::Kind kind = ImageIntersection::Kind::Unknown;
  std::optional<G> witness;
  std::string reason;
};

// Largest coset representative set we are willing to list.
constexpr u64 kMaxListedReps = 4096;

////////////////////////////////////////////////////////////////////////
// Z^d and finitely supported integer sequences
////////////////////////////////////////////////////////////////////////

struct LatticeVec {
  std::vector<i64> c;  // no trailing zeros

  i64 at(std::size_t j) const {
    return j < c.size() ? c[j] : 0;
  }
  void trim() {
    while (!c.empty() && c.back() == 0) {
      c.pop_back();
    }
  }
  friend bool operator==(LatticeVec const& a, LatticeVec const& b) {
    return a.c == b.c;
  }
  friend bool operator<(LatticeVec const& a, LatticeVec const& b) {
    return a.c < b.c;
  }
};
std::size_t hash_value(LatticeVec const& v);

class LatticeAction {
 public:
  using Group = LatticeVec;

  LatticeAction(LatticeActionSpec spec, Presentation const& P);

  Group one() const {
    return {};
  }
  Group mul(Group const& a, Group const& b) const;
  Group inv(Group const& a) const;
  Group apply(Exponents const& p, Group const& g) const;
  std::optional<Group> preimage(Exponents const& p, Group const& g) const;
  Group coset_rep(Exponents const& p, Group const& g) const;
  std::optional<std::pair<Group, Group>> solve(Exponents const& p1,
                                               Exponents const& p2,
                                               Group const& k) const;
  IndexInfo index(u64 id, std::vector<Group>* reps) const;
  Intersection<Group> intersection(Presentation const& P) const;
  std::vector<Group> unit_generators() const;
  std::optional<Group> fresh(std::vector<Group> const& avoid) const;
  bool abelian() const {
    return true;
  }
  std::string format(Group const& g) const;
  Group parse(std::string_view s) const;
  std::string describe() const;

 private:
  i64 gen_multiplier(u64 id, std::size_t j) const;
  i64 multiplier(Exponents const& p, std::size_t j) const;
  // Number of coordinates that may have their own multipliers.
  std::size_t head_size() const;

  LatticeActionSpec _spec;
};

////////////////////////////////////////////////////////////////////////
// Shift action on finitely supported maps N^k -> G0
////////////////////////////////////////////////////////////////////////

struct ShiftVec {
  // Sorted by position, nonzero values (reduced modulo m when m > 0).
  std::vector<std::pair<Exponents, i64>> entries;

  friend bool operator==(ShiftVec const& a, ShiftVec const& b) {
    return a.entries == b.entries;
  }
  friend bool operator<(ShiftVec const& a, ShiftVec const& b) {
    return a.entries < b.entries;
  }
};
std::size_t hash_value(ShiftVec const& v);

class ShiftAction {
 public:
  using Group = ShiftVec;

  ShiftAction(unsigned rank, i64 modulus);

  Group one() const {
    return {};
  }
  Group mul(Group const& a, Group const& b) const;
  Group inv(Group const& a) const;
  Group apply(Exponents const& p, Group const& g) const;
  std::optional<Group> preimage(Exponents const& p, Group const& g) const;
  Group coset_rep(Exponents const& p, Group const& g) const;
  std::optional<std::pair<Group, Group>> solve(Exponents const& p1,
                                               Exponents const& p2,
                                               Group const& k) const;
  IndexInfo index(u64 id, std::vector<Group>* reps) const;
  Intersection<Group> intersection(Presentation const& P) const;
  std::vector<Group> unit_generators() const;
  std::optional<Group> fresh(std::vector<Group> const& avoid) const;
  bool abelian() const {
    return true;
  }
  std::string format(Group const& g) const;
  Group parse(std::string_view s) const;
  std::string describe() const;

  Presentation const& positions() const {
    return _pos;
  }

 private:
  Group normalized(std::map<Exponents, i64> const& m) const;

  unsigned _rank;
  i64 _modulus;
  Presentation _pos;
};

////////////////////////////////////////////////////////////////////////
// Q[T] with multiplication by products of fixed polynomials
////////////////////////////////////////////////////////////////////////

class PolynomialAction {
 public:
  using Group = Poly;

  //! Generator i of P (id i) multiplies by gens[i].
  explicit PolynomialAction(std::vector<Poly> gens);

  Group one() const {
    return {};
  }
  Group mul(Group const& a, Group const& b) const {
    return a + b;
  }
  Group inv(Group const& a) const {
    return -a;
  }
  Group apply(Exponents const& p, Group const& g) const;
  std::optional<Group> preimage(Exponents const& p, Group const& g) const;
  Group coset_rep(Exponents const& p, Group const& g) const;
  std::optional<std::pair<Group, Group>> solve(Exponents const& p1,
                                               Exponents const& p2,
                                               Group const& k) const;
  IndexInfo index(u64 id, std::vector<Group>* reps) const;
  Intersection<Group> intersection(Presentation const& P) const;
  std::vector<Group> unit_generators() const;
  std::optional<Group> fresh(std::vector<Group> const&) const {
    return std::nullopt;
  }
  bool abelian() const {
    return true;
  }
  std::string format(Group const& g) const {
    return to_string(g);
  }
  Group parse(std::string_view s) const {
    return parse_poly(s);
  }
  std::string describe() const;

 private:
  Poly multiplier(Exponents const& p) const;

  std::vector<Poly> _gens;
};

////////////////////////////////////////////////////////////////////////
// Free group with generators sent to powers of themselves
////////////////////////////////////////////////////////////////////////

struct FreeWord {
  // Reduced: consecutive syllables have different generators, exponents
  // nonzero.
  std::vector<std::pair<unsigned, i64>> syl;

  friend bool operator==(FreeWord const& a, FreeWord const& b) {
    return a.syl == b.syl;
  }
  friend bool operator<(FreeWord const& a, FreeWord const& b) {
    if (a.syl.size() != b.syl.size()) {
      return a.syl.size() < b.syl.size();
    }
    return a.syl < b.syl;
  }
};
std::size_t hash_value(FreeWord const& w);

class FreeGroupAction {
 public:
  using Group = FreeWord;

  //! m[i][k]: exponent that generator i of P applies to a_k.
  FreeGroupAction(unsigned rank, std::vector<std::vector<i64>> m);

  Group one() const {
    return {};
  }
  Group mul(Group const& a, Group const& b) const;
  Group inv(Group const& a) const;
  Group apply(Exponents const& p, Group const& g) const;
  std::optional<Group> preimage(Exponents const& p, Group const& g) const;
  Group coset_rep(Exponents const& p, Group const& g) const;
  std::optional<std::pair<Group, Group>> solve(Exponents const& p1,
                                               Exponents const& p2,
                                               Group const& k) const;
  IndexInfo index(u64 id, std::vector<Group>* reps) const;
  Intersection<Group> intersection(Presentation const& P) const;
  std::vector<Group> unit_generators() const;
  std::optional<Group> fresh(std::vector<Group> const&) const {
    return std::nullopt;
  }
  bool abelian() const {
    return _rank <= 1;
  }
  std::string format(Group const& g) const;
  Group parse(std::string_view s) const;
  std::string describe() const;

  //! M_k(p), the exponent applied to a_k by theta_p.
  i64 multiplier(Exponents const& p, unsigned k) const;

 private:
  unsigned _rank;
  std::vector<std::vector<i64>> _m;
};

}  // namespace rlcm::detail
