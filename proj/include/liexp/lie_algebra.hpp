#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liexp/subspace.hpp"

namespace liexp {

/// One raw structure-constant entry: [b_i, b_j] = sum_k value[k] b_k.
struct BracketEntry {
  int i = 0;
  int j = 0;
  Vec value;
};

struct ValidationReport {
  std::vector<std::pair<int, int>> antisymmetry;      // violating (i, j) pairs
  std::vector<std::array<int, 3>> jacobi;             // violating (i, j, k) triples
  bool ok() const { return antisymmetry.empty() && jacobi.empty(); }
  std::string describe() const;
};

/// Finite dimensional Lie algebra given by exact rational structure
/// constants on a fixed basis. Immutable after construction; all operations
/// are pure.
class LieAlgebra {
public:
  LieAlgebra(int dim, std::string name, std::vector<BracketEntry> entries);

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  void set_basis_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }
  const std::vector<BracketEntry>& raw_entries() const { return raw_; }

  /// Antisymmetry on explicitly stored entries plus the Jacobi identity on
  /// every basis triple.
  ValidationReport validate() const;

  Vec bracket_basis(int i, int j) const;
  Vec bracket(const Vec& x, const Vec& y) const;

  /// Matrix of ad x : y -> [x, y] acting on coordinate columns.
  Matrix ad(const Vec& x) const;
  Matrix ad_basis(int i) const;
  std::vector<Matrix> ad_basis_all() const;

  Subspace zero_space() const { return Subspace::zero(dim_); }
  Subspace full_space() const { return Subspace::full(dim_); }

  Subspace bracket_subspaces(const Subspace& u, const Subspace& v) const;

  /// Smallest ideal containing u: fixed point of u -> u + [u, L].
  Subspace ideal_closure(const Subspace& u) const;

  bool is_subalgebra(const Subspace& u) const;
  bool is_ideal(const Subspace& u) const;

  enum class SeriesMode { derived, lower_central };
  /// Starts at u, ends at the term before the first repetition.
  std::vector<Subspace> series(const Subspace& u, SeriesMode mode) const;

  /// K_{ij} = trace(ad b_i ad b_j).
  Matrix killing_form() const;

  Vec basis_unit(int i) const {
    Vec v(dim_);
    v[i] = Rational(1);
    return v;
  }

private:
  int dim_;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<BracketEntry> raw_;
  std::map<std::pair<int, int>, Vec> table_;  // normalized: i < j, nonzero values only
};

}  // namespace liexp
