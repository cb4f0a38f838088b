#include "liexp/subspace.hpp"

#include <sstream>

namespace liexp {

Subspace Subspace::span(int ambient, const std::vector<Vec>& vectors) {
  RowSpan rs(ambient);
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != ambient)
      fail(errc::dimension_mismatch, "vector length does not match ambient dimension");
    rs.insert(v);
  }
  return Subspace(ambient, rs.to_matrix());
}

Subspace Subspace::row_space(const Matrix& m) {
  std::vector<Vec> rows;
  rows.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return span(m.cols(), rows);
}

bool Subspace::contains(const Vec& v) const {
  RowSpan rs(ambient_);
  for (int i = 0; i < basis_.rows(); ++i) rs.insert(basis_.row(i));
  return rs.contains(v);
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient_ != other.ambient_) fail(errc::dimension_mismatch, "ambient dimensions differ");
  if (other.dim() > dim()) return false;
  RowSpan rs(ambient_);
  for (int i = 0; i < basis_.rows(); ++i) rs.insert(basis_.row(i));
  for (int i = 0; i < other.basis_.rows(); ++i)
    if (!rs.contains(other.basis_.row(i))) return false;
  return true;
}

bool Subspace::operator<(const Subspace& other) const {
  if (ambient_ != other.ambient_) return ambient_ < other.ambient_;
  if (dim() != other.dim()) return dim() < other.dim();
  for (int i = 0; i < basis_.rows(); ++i)
    for (int j = 0; j < basis_.cols(); ++j) {
      if (basis_.at(i, j) < other.basis_.at(i, j)) return true;
      if (other.basis_.at(i, j) < basis_.at(i, j)) return false;
    }
  return false;
}

std::string Subspace::key() const {
  std::ostringstream os;
  os << ambient_ << ';';
  for (int i = 0; i < basis_.rows(); ++i) {
    for (int j = 0; j < basis_.cols(); ++j) os << basis_.at(i, j).str() << ',';
    os << '|';
  }
  return os.str();
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim())
    fail(errc::dimension_mismatch, "subspace sum: ambient dimensions differ");
  std::vector<Vec> rows;
  for (int i = 0; i < u.dim(); ++i) rows.push_back(u.basis_vector(i));
  for (int i = 0; i < v.dim(); ++i) rows.push_back(v.basis_vector(i));
  return Subspace::span(u.ambient_dim(), rows);
}

// Zassenhaus: rref of [U U; V 0]; rows with zero left block carry the
// intersection in the right block.
Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  int n = u.ambient_dim();
  if (n != v.ambient_dim())
    fail(errc::dimension_mismatch, "subspace intersection: ambient dimensions differ");
  Matrix block(u.dim() + v.dim(), 2 * n);
  for (int i = 0; i < u.dim(); ++i)
    for (int j = 0; j < n; ++j) {
      block.at(i, j) = u.basis().at(i, j);
      block.at(i, n + j) = u.basis().at(i, j);
    }
  for (int i = 0; i < v.dim(); ++i)
    for (int j = 0; j < n; ++j) block.at(u.dim() + i, j) = v.basis().at(i, j);
  Matrix r = rref(block);
  std::vector<Vec> inter;
  for (int i = 0; i < r.rows(); ++i) {
    bool left_zero = true;
    for (int j = 0; j < n && left_zero; ++j)
      if (!r.at(i, j).is_zero()) left_zero = false;
    if (!left_zero) continue;
    Vec w(n);
    bool nz = false;
    for (int j = 0; j < n; ++j) {
      w[j] = r.at(i, n + j);
      if (!w[j].is_zero()) nz = true;
    }
    if (nz) inter.push_back(std::move(w));
  }
  return Subspace::span(n, inter);
}

Subspace kernel(const Matrix& m) {
  Matrix r = rref(m);
  int n = m.cols();
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(n, false);
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < n; ++j)
      if (!r.at(i, j).is_zero()) {
        pivot_col.push_back(j);
        is_pivot[j] = true;
        break;
      }
  std::vector<Vec> basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n);
    v[f] = Rational(1);
    for (std::size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -r.at(static_cast<int>(k), f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

}  // namespace liexp
