#include "rlcm/regrep.hpp"

namespace rlcm {

Ball::Ball(std::vector<Element> elements, int radius) : _radius(radius) {
  extend(elements);
}

std::optional<std::size_t> Ball::index_of(Element const& e) const {
  auto it = _index.find(e);
  if (it == _index.end()) {
    return std::nullopt;
  }
  return it->second;
}

void Ball::extend(std::vector<Element> const& extra) {
  for (auto const& e : extra) {
    if (_index.emplace(e, _elements.size()).second) {
      _elements.push_back(e);
    }
  }
}

Ball generate_ball(StarAlgebra const& alg, int radius) {
  auto const& S = alg.semigroup();
  auto gens     = S.generators();
  if (gens.empty()) {
    throw PreconditionError(S.name() + " has no generators");
  }
  return Ball(enumerate_shortlex(S, gens, radius), radius);
}

Gaussian TruncatedOperator::entry(std::size_t row, std::size_t col) const {
  auto it = columns[col].find(row);
  return it == columns[col].end() ? Gaussian() : it->second;
}

namespace {

void accumulate(std::map<std::size_t, Gaussian>& column, std::size_t row, Gaussian const& c) {
  auto [it, fresh] = column.emplace(row, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) {
      column.erase(it);
    }
  }
}

}  // namespace

TruncatedOperator represent(StarAlgebra const& alg, AlgebraElement const& a, Ball const& ball) {
  auto const& S = alg.semigroup();
  TruncatedOperator op;
  op.columns.resize(ball.size());
  op.interior.assign(ball.size(), true);
  for (std::size_t j = 0; j < ball.size(); ++j) {
    for (auto const& [m, c] : a.terms()) {
      auto s = S.left_divide(m.q, ball[j]);
      if (!s) {
        continue;
      }
      auto row = ball.index_of(S.multiply(m.p, *s));
      if (!row) {
        op.interior[j] = false;
        continue;
      }
      accumulate(op.columns[j], *row, c);
    }
  }
  return op;
}

TruncatedOperator compose(TruncatedOperator const& a, TruncatedOperator const& b) {
  if (a.dim() != b.dim()) {
    throw PreconditionError("operators on different balls");
  }
  TruncatedOperator op;
  op.columns.resize(b.dim());
  op.interior = b.interior;
  for (std::size_t j = 0; j < b.dim(); ++j) {
    for (auto const& [u, c] : b.columns[j]) {
      if (!a.interior[u]) {
        op.interior[j] = false;
      }
      for (auto const& [row, d] : a.columns[u]) {
        accumulate(op.columns[j], row, d * c);
      }
    }
  }
  return op;
}

CrosscheckReport compare_interior(StarAlgebra const& alg,
                                  TruncatedOperator const& x,
                                  TruncatedOperator const& y,
                                  Ball const& ball) {
  CrosscheckReport report;
  for (std::size_t j = 0; j < x.dim(); ++j) {
    if (!x.interior[j] || !y.interior[j]) {
      continue;
    }
    ++report.columns_compared;
    report.nonzero_entries += x.columns[j].size();
    if (x.columns[j] != y.columns[j]) {
      report.ok       = false;
      report.mismatch = alg.semigroup().format(ball[j]);
      return report;
    }
  }
  return report;
}

CrosscheckReport crosscheck_product(StarAlgebra const& alg,
                                    AlgebraElement const& a,
                                    AlgebraElement const& b,
                                    Ball const& ball) {
  auto symbolic = represent(alg, alg.mul(a, b), ball);
  auto matrix   = compose(represent(alg, a, ball), represent(alg, b, ball));
  return compare_interior(alg, symbolic, matrix, ball);
}

OracleNorm oracle_diagonal_norm(StarAlgebra const& alg, DiagonalElement const& d, Ball const& ball) {
  auto op = represent(alg, alg.to_algebra(d), ball);
  OracleNorm out;
  Rational best;
  for (std::size_t j = 0; j < op.dim(); ++j) {
    Rational n2 = op.entry(j, j).norm_squared();
    if (!out.witness || n2 > best) {
      best        = n2;
      out.witness = ball[j];
    }
  }
  Rational root;
  if (exact_sqrt(best, root)) {
    out.value = root;
  } else {
    out.value   = best;
    out.squared = true;
  }
  return out;
}

bool oracle_projection_nonzero(StarAlgebra const& alg,
                               ProjectionSpec const& spec,
                               Ball const& ball) {
  // The product of the diagonal 0/1 matrices E_X and 1 - E_X, entry by
  // entry; independent of the symbolic expansion.
  auto const& S = alg.semigroup();
  for (auto const& t : ball.elements()) {
    bool one = true;
    for (auto const& X : spec.F) {
      if (in_ideal(S, X.rep, t) != (spec.A.count(X) > 0)) {
        one = false;
        break;
      }
    }
    if (one) {
      return true;
    }
  }
  return false;
}

std::string dump_triplets(TruncatedOperator const& op) {
  std::string out;
  for (std::size_t j = 0; j < op.dim(); ++j) {
    for (auto const& [row, c] : op.columns[j]) {
      out += std::to_string(row) + " " + std::to_string(j) + " " + to_string(c) + "\n";
    }
  }
  return out;
}

}  // namespace rlcm
