#include "liexp/lie_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace liexp {

std::string ValidationReport::describe() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (const auto& [i, j] : antisymmetry) os << "antisymmetry violated at (" << i << "," << j << ") ";
  for (const auto& t : jacobi) os << "Jacobi violated at (" << t[0] << "," << t[1] << "," << t[2] << ") ";
  return os.str();
}

LieAlgebra::LieAlgebra(int dim, std::string name, std::vector<BracketEntry> entries)
    : dim_(dim), name_(std::move(name)), raw_(std::move(entries)) {
  if (dim < 0) fail(errc::index_out_of_range, "negative dimension");
  for (const auto& e : raw_) {
    if (e.i < 0 || e.i >= dim_ || e.j < 0 || e.j >= dim_)
      fail(errc::index_out_of_range, "bracket pair (" + std::to_string(e.i) + "," + std::to_string(e.j) + ")");
    if (static_cast<int>(e.value.size()) != dim_)
      fail(errc::index_out_of_range, "bracket value length for pair (" + std::to_string(e.i) + "," +
                                         std::to_string(e.j) + ")");
    if (e.i == e.j) continue;  // kept in raw_, flagged by validate()
    auto key = std::minmax(e.i, e.j);
    Vec v = (e.i < e.j) ? e.value : Rational(-1) * e.value;
    if (table_.count({key.first, key.second})) continue;  // conflict flagged by validate()
    if (!is_zero_vec(v)) table_[{key.first, key.second}] = std::move(v);
  }
}

ValidationReport LieAlgebra::validate() const {
  ValidationReport rep;
  std::map<std::pair<int, int>, Vec> seen;
  for (const auto& e : raw_) {
    if (e.i == e.j) {
      if (!is_zero_vec(e.value)) rep.antisymmetry.push_back({e.i, e.j});
      continue;
    }
    auto key = std::minmax(e.i, e.j);
    Vec v = (e.i < e.j) ? e.value : Rational(-1) * e.value;
    auto it = seen.find({key.first, key.second});
    if (it == seen.end())
      seen[{key.first, key.second}] = std::move(v);
    else if (!(it->second == v))
      rep.antisymmetry.push_back({e.i, e.j});
  }
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = j + 1; k < dim_; ++k) {
        Vec jac = bracket(bracket_basis(i, j), basis_unit(k));
        jac = jac + bracket(bracket_basis(j, k), basis_unit(i));
        jac = jac + bracket(bracket_basis(k, i), basis_unit(j));
        if (!is_zero_vec(jac)) rep.jacobi.push_back({i, j, k});
      }
  return rep;
}

Vec LieAlgebra::bracket_basis(int i, int j) const {
  if (i < 0 || i >= dim_ || j < 0 || j >= dim_) fail(errc::index_out_of_range, "basis index");
  if (i == j) return Vec(dim_);
  auto it = table_.find({std::min(i, j), std::max(i, j)});
  if (it == table_.end()) return Vec(dim_);
  return (i < j) ? it->second : Rational(-1) * it->second;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    fail(errc::dimension_mismatch, "bracket operand length");
  Vec r(dim_);
  for (const auto& [ij, v] : table_) {
    auto [i, j] = ij;
    Rational c = x[i] * y[j] - x[j] * y[i];
    if (c.is_zero()) continue;
    for (int k = 0; k < dim_; ++k)
      if (!v[k].is_zero()) r[k] += c * v[k];
  }
  return r;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    Vec col = bracket(x, basis_unit(j));
    for (int i = 0; i < dim_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

Matrix LieAlgebra::ad_basis(int i) const { return ad(basis_unit(i)); }

std::vector<Matrix> LieAlgebra::ad_basis_all() const {
  std::vector<Matrix> v;
  v.reserve(dim_);
  for (int i = 0; i < dim_; ++i) v.push_back(ad_basis(i));
  return v;
}

Subspace LieAlgebra::bracket_subspaces(const Subspace& u, const Subspace& v) const {
  if (u.ambient_dim() != dim_ || v.ambient_dim() != dim_)
    fail(errc::dimension_mismatch, "subspace bracket ambient");
  std::vector<Vec> gens;
  for (int a = 0; a < u.dim(); ++a)
    for (int b = 0; b < v.dim(); ++b) gens.push_back(bracket(u.basis_vector(a), v.basis_vector(b)));
  return Subspace::span(dim_, gens);
}

Subspace LieAlgebra::ideal_closure(const Subspace& u) const {
  Subspace cur = u;
  for (;;) {
    Subspace next = subspace_sum(cur, bracket_subspaces(cur, full_space()));
    if (next == cur) return cur;
    cur = next;
  }
}

bool LieAlgebra::is_subalgebra(const Subspace& u) const {
  return u.contains(bracket_subspaces(u, u));
}

bool LieAlgebra::is_ideal(const Subspace& u) const {
  return u.contains(bracket_subspaces(u, full_space()));
}

std::vector<Subspace> LieAlgebra::series(const Subspace& u, SeriesMode mode) const {
  if (!is_subalgebra(u)) fail(errc::not_a_subalgebra, "series requires [u,u] inside u");
  std::vector<Subspace> out{u};
  for (;;) {
    const Subspace& last = out.back();
    Subspace next = (mode == SeriesMode::derived) ? bracket_subspaces(last, last)
                                                  : bracket_subspaces(last, u);
    if (next == last) break;
    out.push_back(std::move(next));
  }
  return out;
}

Matrix LieAlgebra::killing_form() const {
  std::vector<Matrix> ads = ad_basis_all();
  Matrix k(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j) {
      Rational t = (ads[i] * ads[j]).trace();
      k.at(i, j) = t;
      k.at(j, i) = t;
    }
  return k;
}

}  // namespace liexp
