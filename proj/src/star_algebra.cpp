#include "rlcm/star_algebra.hpp"

#include <cctype>   // for isdigit, isspace
#include <utility>  // for swap

#include "rlcm/text.hpp"

namespace rlcm {

StarAlgebra::StarAlgebra(std::shared_ptr<Semigroup const> S) : _base(std::move(S)) {
  if (_base->identity()) {
    _S = _base.get();
  } else {
    _unitisation = std::make_shared<Unitisation>(_base);
    _S           = _unitisation.get();
  }
  _one = *_S->identity();
}

Element StarAlgebra::lift(Element const& s) const {
  if (s.family() == _S->id()) {
    return s;
  }
  if (_unitisation) {
    return _unitisation->embed(s);
  }
  _S->check_family(s);
  return s;
}

Monomial StarAlgebra::monomial(Element const& p, Element const& q) const {
  Element a   = lift(p);
  Element b   = lift(q);
  Element rep = _S->ideal_rep(b);
  if (rep == b) {
    return {a, b};
  }
  auto x = _S->left_divide(b, rep);
  if (!x || !_S->is_unit(*x)) {
    throw PreconditionError("ideal representative of " + _S->format(b)
                            + " is not a unit multiple");
  }
  return {_S->multiply(a, *x), rep};
}

AlgebraElement StarAlgebra::one() const {
  return AlgebraElement::of(Monomial{_one, _one});
}

AlgebraElement StarAlgebra::v(Element const& p) const {
  return AlgebraElement::of(monomial(p, _one));
}

AlgebraElement StarAlgebra::v_star(Element const& q) const {
  return AlgebraElement::of(monomial(_one, q));
}

AlgebraElement StarAlgebra::e(Element const& p) const {
  return AlgebraElement::of(monomial(p, p));
}

AlgebraElement StarAlgebra::mono_mul(Monomial const& a, Monomial const& b) const {
  auto r = _S->right_lcm(a.q, b.p);
  if (r.is_disjoint()) {
    return {};
  }
  auto qq = _S->left_divide(a.q, *r.lcm);
  auto rr = _S->left_divide(b.p, *r.lcm);
  if (!qq || !rr) {
    throw PreconditionError("lcm of " + _S->format(a.q) + " and " + _S->format(b.p)
                            + " is not a common multiple");
  }
  if (_fault) {
    std::swap(qq, rr);
  }
  return AlgebraElement::of(monomial(_S->multiply(a.p, *qq), _S->multiply(b.q, *rr)));
}

AlgebraElement StarAlgebra::mul(AlgebraElement const& a, AlgebraElement const& b) const {
  AlgebraElement out;
  for (auto const& [m1, c1] : a.terms()) {
    for (auto const& [m2, c2] : b.terms()) {
      auto prod = mono_mul(m1, m2);
      for (auto const& [m, c] : prod.terms()) {
        out.add(m, c * c1 * c2);
      }
    }
  }
  return out;
}

AlgebraElement StarAlgebra::adjoint(AlgebraElement const& a) const {
  AlgebraElement out;
  for (auto const& [m, c] : a.terms()) {
    out.add(monomial(m.q, m.p), c.conj());
  }
  return out;
}

DiagonalElement StarAlgebra::phi_D(AlgebraElement const& a) const {
  DiagonalElement out;
  for (auto const& [m, c] : a.terms()) {
    if (m.is_diagonal()) {
      out.add(IdealClass{m.q}, c);
    }
  }
  return out;
}

AlgebraElement StarAlgebra::phi_CI(AlgebraElement const& a) const {
  AlgebraElement out;
  for (auto const& [m, c] : a.terms()) {
    if (m.is_diagonal() || _S->unit_left_quotient(m.p, m.q)) {
      out.add(m, c);
    }
  }
  return out;
}

AlgebraElement StarAlgebra::phi_0(AlgebraElement const& a) const {
  AlgebraElement out;
  for (auto const& [m, c] : a.terms()) {
    if (m.is_diagonal()) {
      out.add(m, c);
    } else if (!_S->unit_left_quotient(m.p, m.q)) {
      throw PreconditionError(format(m) + " is not in the inner core");
    }
  }
  return out;
}

AlgebraElement StarAlgebra::to_algebra(DiagonalElement const& d) const {
  AlgebraElement out;
  for (auto const& [X, c] : d.terms()) {
    out.add(Monomial{X.rep, X.rep}, c);
  }
  return out;
}

IdealClass StarAlgebra::ideal(Element const& p) const {
  return IdealClass{_S->ideal_rep(lift(p))};
}

DiagonalElement StarAlgebra::diag_mul(DiagonalElement const& a,
                                      DiagonalElement const& b) const {
  DiagonalElement out;
  for (auto const& [X, c1] : a.terms()) {
    for (auto const& [Y, c2] : b.terms()) {
      auto r = _S->right_lcm(X.rep, Y.rep);
      if (!r.is_disjoint()) {
        out.add(ideal(*r.lcm), c1 * c2);
      }
    }
  }
  return out;
}

DiagonalElement StarAlgebra::q_projection(ProjectionSpec const& spec) const {
  DiagonalElement d = DiagonalElement::of(ideal(_one));
  for (auto const& X : spec.A) {
    if (!spec.F.count(X)) {
      throw PreconditionError("A is not a subset of F");
    }
    d = diag_mul(d, DiagonalElement::of(X));
  }
  for (auto const& X : spec.F) {
    if (!spec.A.count(X)) {
      d -= diag_mul(d, DiagonalElement::of(X));
    }
  }
  return d;
}

Verdict StarAlgebra::is_nonzero_projection(ProjectionSpec const& spec,
                                           SearchBudget const& budget) const {
  Element sigma = _one;
  for (auto const& X : spec.A) {
    if (!spec.F.count(X)) {
      throw PreconditionError("A is not a subset of F");
    }
    auto r = _S->right_lcm(sigma, X.rep);
    if (r.is_disjoint()) {
      return Verdict::fails("the ideals in A have empty intersection at "
                                + _S->format(X.rep),
                            "lcm of A is empty",
                            {sigma, X.rep},
                            true);
    }
    sigma = *r.lcm;
  }
  ResidualQuery query{sigma, {}};
  for (auto const& X : spec.F) {
    if (!spec.A.count(X)) {
      query.obstacles.push_back(X.rep);
    }
  }
  return residual_nonempty(*_S, query, budget);
}

bool StarAlgebra::q_sum_identity(std::set<IdealClass> const& F) const {
  std::vector<IdealClass> items(F.begin(), F.end());
  if (items.size() > 20) {
    throw PreconditionError("too many ideals for subset expansion");
  }
  DiagonalElement sum;
  for (std::size_t mask = 0; mask < (std::size_t{1} << items.size()); ++mask) {
    ProjectionSpec spec{F, {}};
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (mask >> i & 1) {
        spec.A.insert(items[i]);
      }
    }
    sum += q_projection(spec);
  }
  return sum == DiagonalElement::of(ideal(_one));
}

DiagonalNorm StarAlgebra::diagonal_norm(DiagonalElement const& d,
                                        SearchBudget const& budget) const {
  std::vector<std::pair<IdealClass, Gaussian>> items(d.terms().begin(), d.terms().end());
  if (items.size() > 20) {
    throw PreconditionError("too many ideals for subset expansion");
  }
  std::set<IdealClass> F;
  for (auto const& [X, c] : items) {
    F.insert(X);
  }
  DiagonalNorm out;
  bool unknown = false;
  bool found   = false;
  Rational best;
  for (std::size_t mask = 0; mask < (std::size_t{1} << items.size()); ++mask) {
    ProjectionSpec spec{F, {}};
    Gaussian sum;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (mask >> i & 1) {
        spec.A.insert(items[i].first);
        sum += items[i].second;
      }
    }
    auto verdict = is_nonzero_projection(spec, budget);
    if (verdict.is_unknown()) {
      unknown    = true;
      out.detail = verdict.detail;
      continue;
    }
    if (!verdict.is_holds()) {
      continue;
    }
    Rational n2 = sum.norm_squared();
    if (!found || n2 > best) {
      found      = true;
      best       = n2;
      out.argmax = spec.A;
      out.witness.reset();
      if (!verdict.data.empty()) {
        out.witness = verdict.data.front();
      }
    }
  }
  if (unknown || !found) {
    out.outcome = Outcome::Unknown;
    return out;
  }
  out.outcome = Outcome::Holds;
  Rational root;
  if (exact_sqrt(best, root)) {
    out.value = root;
  } else {
    out.value   = best;
    out.squared = true;
  }
  return out;
}

std::string StarAlgebra::format(Monomial const& m) const {
  if (m.is_diagonal()) {
    return m.p == _one ? "1" : "e[" + _S->format(m.p) + "]";
  }
  if (m.q == _one) {
    return "v[" + _S->format(m.p) + "]";
  }
  if (m.p == _one) {
    return "v*[" + _S->format(m.q) + "]";
  }
  return "v[" + _S->format(m.p) + "] v*[" + _S->format(m.q) + "]";
}

std::string StarAlgebra::format(AlgebraElement const& a) const {
  if (a.is_zero()) {
    return "0";
  }
  std::string out;
  for (auto const& [m, c] : a.terms()) {
    std::string mono = format(m);
    std::string term;
    if (mono == "1") {
      term = to_string(c);
    } else if (c == Gaussian(1)) {
      term = mono;
    } else if (c == Gaussian(-1)) {
      term = "-" + mono;
    } else {
      term = to_string(c) + " " + mono;
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

std::string StarAlgebra::format(DiagonalElement const& d) const {
  return format(to_algebra(d));
}

namespace {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor (['*'] factor)*
// factor := number | 'i' | 'v' ['*'] '[' element ']' | 'e' '[' element ']'
//         | '(' expr ')'
class ExpressionParser {
 public:
  ExpressionParser(StarAlgebra const& alg, std::string_view text)
      : _alg(alg), _text(text) {}

  AlgebraElement run() {
    AlgebraElement a = expr();
    skip();
    if (_pos != _text.size()) {
      throw ParseError("unexpected '" + std::string(1, _text[_pos]) + "'", _pos);
    }
    return a;
  }

 private:
  void skip() {
    while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
      ++_pos;
    }
  }
  char peek() {
    skip();
    return _pos < _text.size() ? _text[_pos] : '\0';
  }
  void expect(char c) {
    if (peek() != c) {
      throw ParseError(std::string("expected '") + c + "'", _pos);
    }
    ++_pos;
  }
  static bool starts_factor(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'i' || c == 'v' || c == 'e'
           || c == '(';
  }

  AlgebraElement expr() {
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = _text[_pos++] == '-';
    }
    AlgebraElement a = term();
    if (negate) {
      a = Gaussian(-1) * a;
    }
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++_pos;
      if (c == '+') {
        a += term();
      } else {
        a -= term();
      }
    }
    return a;
  }

  AlgebraElement term() {
    AlgebraElement a = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++_pos;
      } else if (!starts_factor(c)) {
        return a;
      }
      a = _alg.mul(a, factor());
    }
  }

  AlgebraElement factor() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Gaussian(number()) * _alg.one();
    }
    if (c == 'i') {
      ++_pos;
      return Gaussian(0, 1) * _alg.one();
    }
    if (c == '(') {
      ++_pos;
      AlgebraElement a = expr();
      expect(')');
      return a;
    }
    if (c == 'v') {
      ++_pos;
      bool star = false;
      if (peek() == '*') {
        ++_pos;
        star = true;
      }
      Element p = element();
      return star ? _alg.v_star(p) : _alg.v(p);
    }
    if (c == 'e') {
      ++_pos;
      return _alg.e(element());
    }
    if (c == '\0') {
      throw ParseError("unexpected end of expression", _pos);
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", _pos);
  }

  Rational number() {
    std::size_t start = _pos;
    while (_pos < _text.size()
           && (std::isdigit(static_cast<unsigned char>(_text[_pos])) || _text[_pos] == '/')) {
      ++_pos;
    }
    try {
      return parse_rational(_text.substr(start, _pos - start));
    } catch (ParseError const&) {
      throw ParseError("bad number", start);
    }
  }

  // '[' element ']' where the element text may itself contain brackets.
  Element element() {
    expect('[');
    std::size_t start = _pos;
    int depth         = 0;
    for (; _pos < _text.size(); ++_pos) {
      char c = _text[_pos];
      if (c == '(' || c == '[' || c == '{') {
        ++depth;
      } else if (c == ')' || c == ']' || c == '}') {
        if (depth == 0) {
          break;
        }
        --depth;
      }
    }
    if (_pos >= _text.size() || _text[_pos] != ']') {
      throw ParseError("unterminated element", start);
    }
    std::string_view inner = _text.substr(start, _pos - start);
    ++_pos;
    try {
      return _alg.semigroup().parse(trim(inner));
    } catch (Error const& err) {
      throw ParseError("bad element '" + std::string(inner) + "' (" + err.what() + ")", start);
    }
  }

  StarAlgebra const& _alg;
  std::string_view _text;
  std::size_t _pos = 0;
};

}  // namespace

AlgebraElement StarAlgebra::parse(std::string_view text) const {
  return ExpressionParser(*this, text).run();
}

}  // namespace rlcm
