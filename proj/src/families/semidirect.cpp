#include "rlcm/families/semidirect.hpp"

#include <algorithm>  // for find
#include <set>        // for set

#include "actions.hpp"
#include "rlcm/text.hpp"

namespace rlcm {

namespace detail {

template <typename G>
struct SdpValue {
  G g;
  Exponents p;

  friend bool operator==(SdpValue const& a, SdpValue const& b) {
    return a.p == b.p && a.g == b.g;
  }
  friend bool operator<(SdpValue const& a, SdpValue const& b) {
    if (!(a.p == b.p)) {
      return a.p < b.p;
    }
    return a.g < b.g;
  }
};

template <typename G>
std::size_t hash_value(SdpValue<G> const& v) {
  return hash_combine(hash_value(v.g), hash_value(v.p));
}

class BallGenerated {
 public:
  virtual ~BallGenerated()                         = default;
  virtual void set_ball(std::vector<Element> gens) = 0;
};

//! G x_theta P with P free abelian. Multiplication is
//! (g1, p1)(g2, p2) = (g1 theta_p1(g2), p1 + p2).
template <typename Action>
class SemidirectProduct final : public TypedSemigroup<SdpValue<typename Action::Group>>,
                                public SemidirectView,
                                public BallGenerated {
  using G     = typename Action::Group;
  using Value = SdpValue<G>;

 public:
  SemidirectProduct(std::string name, Action act, Presentation P)
      : _name(std::move(name)), _act(std::move(act)), _P(std::move(P)) {
    for (auto const& h : _act.unit_generators()) {
      _ball.push_back(make(h, {}));
    }
    for (auto const& q : p_generators()) {
      _ball.push_back(q);
    }
  }

  Element make(G g, Exponents p) const {
    return this->wrap(Value{std::move(g), std::move(p)});
  }

  // Semigroup

  std::string name() const override {
    return _name;
  }

  Element multiply(Element const& a, Element const& b) const override {
    auto const& x = this->unwrap(a);
    auto const& y = this->unwrap(b);
    return make(_act.mul(x.g, _act.apply(x.p, y.g)), x.p + y.p);
  }

  std::optional<Element> identity() const override {
    return make(_act.one(), {});
  }

  bool is_unit(Element const& a) const override {
    return this->unwrap(a).p.is_one();
  }

  Element unit_inverse(Element const& x) const override {
    auto const& v = this->unwrap(x);
    if (!v.p.is_one()) {
      throw PreconditionError(format(x) + " is not a unit");
    }
    return make(_act.inv(v.g), {});
  }

  std::optional<Element> left_divide(Element const& a, Element const& r) const override {
    auto const& x = this->unwrap(a);
    auto const& y = this->unwrap(r);
    auto q        = quotient(y.p, x.p);
    if (!q) {
      return std::nullopt;
    }
    auto h = _act.preimage(x.p, _act.mul(_act.inv(x.g), y.g));
    if (!h) {
      return std::nullopt;
    }
    return make(*h, *q);
  }

  LcmOutcome right_lcm(Element const& a, Element const& b) const override {
    auto const& x = this->unwrap(a);
    auto const& y = this->unwrap(b);
    // g2^{-1} g1 = theta_p2(s) theta_p1(t) gives g2 theta_p2(s) = g1
    // theta_p1(t^{-1}), the group part of the common multiple.
    auto st = _act.solve(x.p, y.p, _act.mul(_act.inv(y.g), x.g));
    if (!st) {
      return LcmOutcome::disjoint();
    }
    G g = _act.mul(x.g, _act.apply(x.p, _act.inv(st->second)));
    return LcmOutcome::of(ideal_rep(make(std::move(g), lcm(x.p, y.p))));
  }

  Element ideal_rep(Element const& a) const override {
    auto const& x = this->unwrap(a);
    return make(_act.coset_rep(x.p, x.g), x.p);
  }

  std::optional<Element> unit_left_quotient(Element const& a,
                                            Element const& b) const override {
    auto const& x = this->unwrap(a);
    auto const& y = this->unwrap(b);
    if (!(x.p == y.p)) {
      return std::nullopt;
    }
    return make(_act.mul(x.g, _act.inv(y.g)), {});
  }

  std::vector<Element> generators() const override {
    return _ball;
  }

  std::vector<Element> unit_generators() const override {
    std::vector<Element> out;
    std::set<Element> seen;
    for (auto const& h : _act.unit_generators()) {
      for (auto const& k : {h, _act.inv(h)}) {
        Element e = make(k, {});
        if (seen.insert(e).second) {
          out.push_back(e);
        }
      }
    }
    return out;
  }

  std::string format(Element const& a) const override {
    auto const& x = this->unwrap(a);
    return "(" + _act.format(x.g) + "," + _P.format(x.p) + ")";
  }

  Element parse(std::string_view text) const override {
    text = trim(text);
    if (text == "1") {
      return *identity();
    }
    auto parts = split_top_level(rlcm::unwrap(text, '(', ')'), ',');
    if (parts.size() != 2) {
      throw ParseError("expected (g,p) in '" + std::string(text) + "'", 0);
    }
    return make(_act.parse(parts[0]), _P.parse(parts[1]));
  }

  bool has_trivial_units() const override {
    return false;
  }

  std::optional<Element> left_unit_rep(Element const& a) const override {
    return make(_act.one(), this->unwrap(a).p);
  }

  SemidirectView const* semidirect() const override {
    return this;
  }

  // SemidirectView

  Semigroup const& semigroup() const override {
    return *this;
  }
  std::string group_description() const override {
    return _act.describe();
  }
  Presentation const& p_presentation() const override {
    return _P;
  }
  bool p_infinitely_generated() const override {
    return _P.kind() == Presentation::Kind::AllPrimes;
  }
  std::vector<Element> p_generators() const override {
    std::vector<Element> out;
    for (u64 id : _P.ids()) {
      out.push_back(p_generator(id));
    }
    return out;
  }
  Element p_generator(u64 id) const override {
    if (!_P.valid_id(id)) {
      throw PreconditionError("unknown generator " + std::to_string(id) + " of P");
    }
    return make(_act.one(), Exponents::generator(id));
  }

  CosetData index_of(u64 id) const override {
    std::vector<G> reps;
    IndexInfo info = _act.index(id, &reps);
    CosetData out;
    out.finite = info.finite;
    out.index  = info.index;
    if (info.finite) {
      for (auto& h : reps) {
        out.reps.push_back(make(std::move(h), Exponents::generator(id)));
      }
    }
    return out;
  }

  ImageIntersection image_intersection() const override {
    auto r = _act.intersection(_P);
    ImageIntersection out;
    out.kind   = r.kind;
    out.reason = r.reason;
    if (r.witness) {
      out.witness = make(*r.witness, {});
    }
    return out;
  }

  bool group_abelian() const override {
    return _act.abelian();
  }
  Element p_part(Element const& a) const override {
    return make(_act.one(), this->unwrap(a).p);
  }
  Element g_part(Element const& a) const override {
    return make(this->unwrap(a).g, {});
  }
  bool in_image(Element const& a, Element const& x) const override {
    return _act.preimage(this->unwrap(a).p, this->unwrap(x).g).has_value();
  }

  std::vector<Element> d2_candidates(Element const& s1,
                                     std::vector<Element> const& obstacles,
                                     unsigned max_power) const override {
    std::vector<Exponents> ps{this->unwrap(s1).p};
    std::vector<G> gs{this->unwrap(s1).g};
    for (auto const& q : obstacles) {
      ps.push_back(this->unwrap(q).p);
      gs.push_back(this->unwrap(q).g);
    }
    auto touches = [&](u64 id) {
      for (auto const& p : ps) {
        if (p.exponent(id) > 0) {
          return true;
        }
      }
      return false;
    };

    // Generators of P that divide no obstacle come first; over all of N^x
    // there is always a prime outside the finitely many involved.
    std::vector<u64> fresh_ids, other_ids;
    for (u64 id : _P.ids()) {
      (touches(id) ? other_ids : fresh_ids).push_back(id);
    }
    if (p_infinitely_generated()) {
      unsigned extra = 0;
      for (u64 n = 2; extra < 3; ++n) {
        if (is_prime(n) && !touches(n)
            && std::find(fresh_ids.begin(), fresh_ids.end(), n) == fresh_ids.end()) {
          fresh_ids.push_back(n);
          ++extra;
        }
      }
    }
    std::vector<u64> ids = fresh_ids;
    ids.insert(ids.end(), other_ids.begin(), other_ids.end());

    std::vector<Element> out;
    for (u64 id : ids) {
      for (unsigned n = 1; n <= max_power; ++n) {
        out.push_back(make(_act.one(), Exponents::generator(id, n)));
      }
    }
    // Translate into coordinates no input touches, then scale.
    if (auto f = _act.fresh(gs)) {
      for (u64 id : ids) {
        for (unsigned n = 1; n <= max_power; ++n) {
          out.push_back(make(*f, Exponents::generator(id, n)));
        }
      }
    }
    return out;
  }

  // BallGenerated

  void set_ball(std::vector<Element> gens) override {
    for (auto const& g : gens) {
      this->check_family(g);
    }
    _ball = std::move(gens);
  }

 private:
  std::string _name;
  Action _act;
  Presentation _P;
  std::vector<Element> _ball;
};

}  // namespace detail

std::shared_ptr<Semigroup> make_lattice_semidirect(std::string name,
                                                   LatticeActionSpec spec,
                                                   Presentation P) {
  detail::LatticeAction act(std::move(spec), P);
  return std::make_shared<detail::SemidirectProduct<detail::LatticeAction>>(
      std::move(name), std::move(act), std::move(P));
}

std::shared_ptr<Semigroup> make_shift_semidirect(std::string name,
                                                 unsigned rank,
                                                 i64 modulus) {
  return std::make_shared<detail::SemidirectProduct<detail::ShiftAction>>(
      std::move(name), detail::ShiftAction(rank, modulus), Presentation::tuple(rank));
}

std::shared_ptr<Semigroup> make_polynomial_semidirect(std::string name,
                                                      std::vector<Poly> generators) {
  auto rank = static_cast<unsigned>(generators.size());
  return std::make_shared<detail::SemidirectProduct<detail::PolynomialAction>>(
      std::move(name), detail::PolynomialAction(std::move(generators)),
      Presentation::tuple(rank));
}

std::shared_ptr<Semigroup> make_free_group_semidirect(
    std::string name,
    unsigned rank,
    std::vector<std::vector<i64>> multipliers) {
  auto k = static_cast<unsigned>(multipliers.size());
  return std::make_shared<detail::SemidirectProduct<detail::FreeGroupAction>>(
      std::move(name), detail::FreeGroupAction(rank, std::move(multipliers)),
      Presentation::tuple(k));
}

void set_ball_generators(Semigroup& S, std::vector<Element> gens) {
  auto* b = dynamic_cast<detail::BallGenerated*>(&S);
  if (b == nullptr) {
    throw PreconditionError(S.name() + " does not accept enumeration generators");
  }
  b->set_ball(std::move(gens));
}

}  // namespace rlcm
