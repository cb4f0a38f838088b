#pragma once

#include <string>
#include <vector>

#include "liexp/matrix.hpp"

namespace liexp {

/// Linear subspace of Q^ambient in canonical form: basis rows in reduced row
/// echelon form with zero rows dropped. Two subspaces are equal iff their
/// basis matrices are identical entry-wise.
class Subspace {
public:
  Subspace() : ambient_(0), basis_(0, 0) {}

  static Subspace zero(int ambient) { return Subspace(ambient, Matrix(0, ambient)); }
  static Subspace full(int ambient) { return Subspace(ambient, Matrix::identity(ambient)); }
  static Subspace span(int ambient, const std::vector<Vec>& vectors);
  static Subspace row_space(const Matrix& m);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  bool is_zero() const { return basis_.rows() == 0; }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(int i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  /// Total order for use as a map key (dimension, then entries).
  bool operator<(const Subspace& other) const;

  /// Stable serialization of the canonical basis.
  std::string key() const;

private:
  Subspace(int ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}
  int ambient_;
  Matrix basis_;
};

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

/// Null space {x : m x = 0} in canonical form.
Subspace kernel(const Matrix& m);

}  // namespace liexp
