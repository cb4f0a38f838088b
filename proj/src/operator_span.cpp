#include "liexp/operator_span.hpp"

namespace liexp {

Vec flatten(const Matrix& m) {
  Vec v(static_cast<std::size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v[static_cast<std::size_t>(i) * m.cols() + j] = m.at(i, j);
  return v;
}

Matrix unflatten(const Vec& v, int rows, int cols) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = v[static_cast<std::size_t>(i) * cols + j];
  return m;
}

std::vector<Matrix> associative_closure(const std::vector<Matrix>& generators, int n,
                                        bool with_identity) {
  RowSpan span(n * n);
  std::vector<Matrix> basis;
  auto admit = [&](const Matrix& m) {
    if (span.insert(flatten(m))) {
      basis.push_back(m);
      return true;
    }
    return false;
  };
  if (with_identity) admit(Matrix::identity(n));
  for (const auto& g : generators) admit(g);
  // every word arises as generator * (shorter word)
  std::size_t frontier_begin = 0;
  while (frontier_begin < basis.size()) {
    std::size_t frontier_end = basis.size();
    for (std::size_t k = frontier_begin; k < frontier_end; ++k)
      for (const auto& g : generators) admit(g * basis[k]);
    frontier_begin = frontier_end;
  }
  return basis;
}

Matrix trace_gram(const std::vector<Matrix>& ops) {
  int m = static_cast<int>(ops.size());
  Matrix g(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      Rational t = (ops[a] * ops[b]).trace();
      g.at(a, b) = t;
      g.at(b, a) = t;
    }
  return g;
}

std::vector<Matrix> trace_radical(const std::vector<Matrix>& basis) {
  if (basis.empty()) return {};
  int n = basis.front().rows();
  Subspace ker = kernel(trace_gram(basis));
  std::vector<Matrix> rad;
  for (int i = 0; i < ker.dim(); ++i) {
    Matrix r(n, n);
    Vec c = ker.basis_vector(i);
    for (std::size_t a = 0; a < basis.size(); ++a)
      if (!c[a].is_zero()) r = r + basis[a] * c[a];
    rad.push_back(std::move(r));
  }
  return rad;
}

bool complete_reducibility_check_ops(const std::vector<Matrix>& operators, int n) {
  std::vector<Matrix> basis = associative_closure(operators, n, /*with_identity=*/true);
  return trace_radical(basis).empty();
}

OperatorQuotient::OperatorQuotient(const std::vector<Matrix>& basis,
                                   const std::vector<Matrix>& radical, int n)
    : basis_(&basis), rad_span_(static_cast<int>(basis.size())), n_(n) {
  int m = static_cast<int>(basis.size());
  bcols_ = Matrix(n * n, m);
  for (int t = 0; t < m; ++t) {
    Vec f = flatten(basis[static_cast<std::size_t>(t)]);
    for (int r = 0; r < n * n; ++r) bcols_.at(r, t) = f[r];
  }
  if (m > 0) {
    Matrix bt = bcols_.transpose();
    auto gram_inv = inverse(bt * bcols_);  // Gram of independent rational vectors
    if (!gram_inv) fail(errc::internal_inconsistency, "operator basis is linearly dependent");
    projector_ = *gram_inv * bt;
  } else {
    projector_ = Matrix(0, n * n);
  }
  for (const auto& r : radical) rad_span_.insert(coords_in_basis(r));
  std::vector<bool> pivot(basis.size(), false);
  for (int p : rad_span_.pivots()) pivot[p] = true;
  for (std::size_t t = 0; t < basis.size(); ++t)
    if (!pivot[t]) comp_.push_back(static_cast<int>(t));
}

Vec OperatorQuotient::coords_in_basis(const Matrix& op) const {
  Vec f = flatten(op);
  Vec c = projector_.apply(f);
  if (!(bcols_.apply(c) == f))
    fail(errc::internal_inconsistency, "operator left the algebra span");
  return c;
}

Vec OperatorQuotient::project(const Matrix& op) const {
  Vec r = rad_span_.reduce(coords_in_basis(op));
  Vec out(comp_.size());
  for (std::size_t t = 0; t < comp_.size(); ++t) out[t] = r[comp_[t]];
  return out;
}

Matrix OperatorQuotient::lift(const Vec& coords) const {
  Matrix m(n_, n_);
  for (std::size_t t = 0; t < comp_.size(); ++t)
    if (!coords[t].is_zero()) m = m + (*basis_)[comp_[t]] * coords[t];
  return m;
}

}  // namespace liexp
