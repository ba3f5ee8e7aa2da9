#pragma once

#include <map>          // for map
#include <memory>       // for shared_ptr
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "rlcm/families/free_abelian.hpp"
#include "rlcm/families/polynomial.hpp"
#include "rlcm/semigroup.hpp"

namespace rlcm {

//! Index of theta_q(G) in G for a generator q of P.
struct CosetData {
  bool finite = false;
  //! Valid when finite.
  u64 index = 0;
  //! Elements (h, q) for a complete set of coset representatives h, when
  //! finite and small enough to list.
  std::vector<Element> reps;
};

//! Whether the intersection of all theta_p(G) is the trivial subgroup.
struct ImageIntersection {
  enum class Kind { Trivial, Nontrivial, Unknown };
  Kind kind = Kind::Unknown;
  //! For Nontrivial: a unit (h, 1) with h != 1 in every theta_p(G).
  std::optional<Element> witness;
  std::string reason;
};

//! Structural access to a semidirect product G x_theta P with P free
//! abelian, as used by the property checkers.
class SemidirectView {
 public:
  virtual ~SemidirectView() = default;

  virtual Semigroup const& semigroup() const = 0;
  virtual std::string group_description() const = 0;
  virtual Presentation const& p_presentation() const = 0;
  //! True when P has infinitely many generators (all of N^x).
  virtual bool p_infinitely_generated() const = 0;
  //! Elements (1, q) for the generators q of P used in enumeration.
  virtual std::vector<Element> p_generators() const = 0;
  //! (1, q) for the generator with the given id.
  virtual Element p_generator(u64 id) const = 0;
  virtual CosetData index_of(u64 generator_id) const = 0;
  virtual ImageIntersection image_intersection() const = 0;
  virtual bool group_abelian() const = 0;
  //! (1, p) for a = (g, p).
  virtual Element p_part(Element const& a) const = 0;
  //! (g, 1) for a = (g, p).
  virtual Element g_part(Element const& a) const = 0;
  //! True iff the group element of the unit x lies in theta_p(G) where
  //! (1, p) = p_part(a).
  virtual bool in_image(Element const& a, Element const& x) const = 0;
  //! Right factors t to try when looking for s2 = s1 t in the (D2) search,
  //! in the order of the family's constructive procedure.
  virtual std::vector<Element> d2_candidates(Element const& s1,
                                             std::vector<Element> const& obstacles,
                                             unsigned max_power) const
      = 0;
};

//! theta_p multiplies coordinate j by M_j(p), where M_j is multiplicative
//! in p. Coordinates are Z^dims, or finitely supported sequences when
//! dims = 0.
struct LatticeActionSpec {
  unsigned dims = 1;
  //! M_j(p) is the integer value of p for every j (P inside N^x).
  bool scalar = false;
  //! Multipliers of each generator on the leading coordinates.
  std::map<u64, std::vector<i64>> head;
  //! Multiplier on the remaining coordinates (default 1).
  std::map<u64, i64> tail;
};

std::shared_ptr<Semigroup> make_lattice_semidirect(std::string name,
                                                   LatticeActionSpec spec,
                                                   Presentation P);

//! G = finitely supported maps N^rank -> G0, G0 = Z (modulus 0) or Z/m,
//! with P = N^rank acting by translation.
std::shared_ptr<Semigroup> make_shift_semidirect(std::string name,
                                                 unsigned rank,
                                                 i64 modulus);

//! G = Q[T] with P free on the given polynomials, acting by multiplication.
std::shared_ptr<Semigroup> make_polynomial_semidirect(std::string name,
                                                      std::vector<Poly> generators);

//! G = free group of the given rank; generator i of P = N^k sends the
//! k-th free generator a_k to a_k^{m[i][k]}.
std::shared_ptr<Semigroup> make_free_group_semidirect(
    std::string name,
    unsigned rank,
    std::vector<std::vector<i64>> multipliers);

//! Replaces the enumeration generators of a semidirect family.
void set_ball_generators(Semigroup& S, std::vector<Element> gens);

}  // namespace rlcm
