#pragma once

#include <vector>

#include "liexp/matrix.hpp"
#include "liexp/subspace.hpp"

namespace liexp {

Vec flatten(const Matrix& m);
Matrix unflatten(const Vec& v, int rows, int cols);

/// Linear basis of the associative algebra generated by `generators` inside
/// End(F^n), closed under composition. When `with_identity` is set the
/// identity operator seeds the closure (unital algebra). Breadth-first
/// products generator*current, admission by rank growth, insertion order
/// fixed, so the returned basis is reproducible.
std::vector<Matrix> associative_closure(const std::vector<Matrix>& generators, int n,
                                        bool with_identity);

/// Gram matrix G_{ab} = trace(T_a T_b) of the span.
Matrix trace_gram(const std::vector<Matrix>& ops);

/// Basis of the trace-form radical {x in span : trace(x a) = 0 for all a},
/// i.e. the Jacobson radical for a subalgebra of End(V) in characteristic 0,
/// returned as operators.
std::vector<Matrix> trace_radical(const std::vector<Matrix>& basis);

/// True iff the unital associative algebra generated by the operators has
/// zero trace-form radical (complete reducibility of the tautological
/// module in characteristic 0).
bool complete_reducibility_check_ops(const std::vector<Matrix>& operators, int n);

/// Coordinates on the quotient of span(basis) by span(radical) with algebra
/// multiplication through representatives. Basis operators must be linearly
/// independent and the radical contained in their span.
class OperatorQuotient {
public:
  OperatorQuotient(const std::vector<Matrix>& basis, const std::vector<Matrix>& radical, int n);

  int dim() const { return static_cast<int>(comp_.size()); }
  Vec project(const Matrix& op) const;
  Matrix lift(const Vec& coords) const;
  Vec mult(const Vec& u, const Vec& v) const { return project(lift(u) * lift(v)); }
  Vec unit(int t) const {
    Vec v(comp_.size());
    v[t] = Rational(1);
    return v;
  }

  /// Coefficients of op in the original basis (errors when outside the span).
  Vec coords_in_basis(const Matrix& op) const;

private:
  const std::vector<Matrix>* basis_;
  Matrix bcols_;           // n^2 x m, columns = flattened basis operators
  Matrix projector_;       // m x n^2, exact coordinates extractor (Gram-based)
  RowSpan rad_span_;       // radical coordinates inside basis coordinates
  std::vector<int> comp_;  // non-pivot positions: quotient coordinates
  int n_;
};

}  // namespace liexp
