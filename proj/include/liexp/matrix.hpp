#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "liexp/rational.hpp"

namespace liexp {

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}

  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

  Vec row(int i) const;
  Vec col(int j) const;
  void set_row(int i, const Vec& v);

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Rational& c) const;
  friend Matrix operator*(const Rational& c, const Matrix& m) { return m * c; }
  Matrix transpose() const;
  Vec apply(const Vec& v) const;  // m * v (v as column)
  Rational trace() const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

private:
  int rows_, cols_;
  std::vector<Rational> e_;
};

/// Unique reduced row echelon form; shape preserved, zero rows kept.
Matrix rref(const Matrix& m);
int rank(const Matrix& m);

/// One solution of A x = b with free variables set to 0, or nullopt.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/// Inverse; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Rank over Z/p. Requires p prime, not dividing any entry denominator.
int rank_mod(const Matrix& m, std::uint64_t p);

/// Monic minimal polynomial of a square matrix, returned as c_0..c_{k-1}
/// with the meaning T^k = sum_j c_j T^j.
std::vector<Rational> min_poly(const Matrix& t);

struct RootSearch {
  std::vector<Rational> roots;  // distinct rational roots found
  bool complete = false;        // true when the count matches the degree
};

/// Distinct rational roots of the monic polynomial x^k - sum_j c_j x^j by
/// divisor enumeration of the integer-normalized coefficients. Divisor
/// enumeration is capped, so `complete` may be false for adversarial
/// coefficient sizes; callers treat that as a failed attempt.
RootSearch rational_roots_monic(const std::vector<Rational>& c);

/// True when p divides no denominator of m.
bool prime_avoids_denominators(const Matrix& m, std::uint64_t p);

/// Incremental reduced-row-echelon accumulator: rows kept mutually reduced
/// with unit pivots, ordered by pivot column, so the stored rows are the
/// unique RREF basis of the span at all times.
class RowSpan {
public:
  explicit RowSpan(int cols) : cols_(cols) {}

  /// Inserts v into the span. Returns true when the rank grew.
  bool insert(Vec v);

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  /// Coefficients of v in the stored basis, or nullopt when v is outside.
  std::optional<Vec> coords(const Vec& v) const;

  /// Remainder of v after elimination against the stored rows; zero exactly
  /// on the span, supported off the pivot columns otherwise.
  Vec reduce(Vec v) const;

  Matrix to_matrix() const;

private:
  int cols_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

}  // namespace liexp
