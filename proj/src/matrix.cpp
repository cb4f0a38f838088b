#include "liexp/matrix.hpp"

#include <algorithm>

namespace liexp {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows_; ++i) {
    if (static_cast<int>(rows[i].size()) != cols)
      fail(errc::dimension_mismatch, "row length does not match column count");
    m.set_row(i, rows[i]);
  }
  return m;
}

Vec Matrix::row(int i) const {
  Vec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec Matrix::col(int j) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void Matrix::set_row(int i, const Vec& v) {
  for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) fail(errc::dimension_mismatch, "matrix product shapes");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += a * o.at(k, j);
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix r(*this);
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix r(*this);
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

Matrix Matrix::operator*(const Rational& c) const {
  Matrix r(*this);
  for (auto& x : r.e_) x *= c;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) fail(errc::dimension_mismatch, "matrix-vector shapes");
  Vec r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

Rational Matrix::trace() const {
  Rational t;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix rref(const Matrix& m) {
  Matrix a(m);
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!a.at(i, c).is_zero()) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
    Rational inv = Rational(1) / a.at(r, c);
    for (int j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Rational f = a.at(i, c);
      for (int j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    ++r;
  }
  return a;
}

int rank(const Matrix& m) {
  Matrix a = rref(m);
  int r = 0;
  for (int i = 0; i < a.rows(); ++i) {
    bool nz = false;
    for (int j = 0; j < a.cols(); ++j)
      if (!a.at(i, j).is_zero()) { nz = true; break; }
    if (nz) ++r;
  }
  return r;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (static_cast<int>(b.size()) != a.rows()) fail(errc::dimension_mismatch, "solve shapes");
  Matrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  Matrix r = rref(aug);
  Vec x(a.cols());
  for (int i = 0; i < r.rows(); ++i) {
    int lead = -1;
    for (int j = 0; j < r.cols(); ++j)
      if (!r.at(i, j).is_zero()) { lead = j; break; }
    if (lead < 0) continue;
    if (lead == a.cols()) return std::nullopt;  // 0 = 1 row: inconsistent
    x[lead] = r.at(i, a.cols());
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) fail(errc::dimension_mismatch, "inverse of non-square matrix");
  int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Rational(1);
  }
  Matrix r = rref(aug);
  for (int i = 0; i < n; ++i)
    if (r.at(i, i) != Rational(1)) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
  return inv;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool prime_avoids_denominators(const Matrix& m, std::uint64_t p) {
  mpz_class pz(static_cast<unsigned long>(p));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j).den() % pz == 0) return false;
  return true;
}

int rank_mod(const Matrix& m, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j).mod(p);
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (a[i][c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    std::uint64_t inv = powmod(a[r][c], p - 2, p);
    for (int j = c; j < m.cols(); ++j) a[r][j] = mulmod(a[r][j], inv, p);
    for (int i = r + 1; i < m.rows(); ++i) {
      if (a[i][c] == 0) continue;
      std::uint64_t f = a[i][c];
      for (int j = c; j < m.cols(); ++j) {
        std::uint64_t s = mulmod(f, a[r][j], p);
        a[i][j] = (a[i][j] + p - s) % p;
      }
    }
    ++r;
  }
  return r;
}

namespace {

Vec flat(const Matrix& m) {
  Vec v(static_cast<std::size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v[static_cast<std::size_t>(i) * m.cols() + j] = m.at(i, j);
  return v;
}

}  // namespace

std::vector<Rational> min_poly(const Matrix& t) {
  if (t.rows() != t.cols()) fail(errc::dimension_mismatch, "min_poly of non-square matrix");
  int w = t.rows();
  std::vector<Vec> powers{flat(Matrix::identity(w))};
  Matrix cur = Matrix::identity(w);
  for (;;) {
    cur = cur * t;
    Vec f = flat(cur);
    Matrix cols(static_cast<int>(powers.front().size()), static_cast<int>(powers.size()));
    for (std::size_t j = 0; j < powers.size(); ++j)
      for (std::size_t r = 0; r < powers[j].size(); ++r)
        cols.at(static_cast<int>(r), static_cast<int>(j)) = powers[j][r];
    if (auto c = solve(cols, f)) return *c;
    powers.push_back(std::move(f));
  }
}

namespace {

std::vector<mpz_class> divisors_capped(const mpz_class& value, bool& complete) {
  complete = true;
  mpz_class v = abs(value);
  std::vector<std::pair<mpz_class, int>> factors;
  for (mpz_class d = 2; d * d <= v && d <= 1000000; ++d) {
    if (v % d != 0) continue;
    int e = 0;
    while (v % d == 0) {
      v /= d;
      ++e;
    }
    factors.push_back({d, e});
  }
  if (v > 1) factors.push_back({v, 1});  // prime or an un-split rough cofactor
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factors) {
    std::size_t base = divs.size();
    mpz_class pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) {
        divs.push_back(divs[j] * pk);
        if (divs.size() > 4096) {
          complete = false;
          return divs;
        }
      }
    }
  }
  return divs;
}

}  // namespace

RootSearch rational_roots_monic(const std::vector<Rational>& c) {
  RootSearch out;
  int deg = static_cast<int>(c.size());
  std::vector<Rational> poly(deg + 1);  // ascending, poly[deg] = 1
  poly[deg] = Rational(1);
  for (int j = 0; j < deg; ++j) poly[j] = Rational(0) - c[j];

  int low = 0;
  while (low <= deg && poly[low].is_zero()) ++low;
  if (low > 0) out.roots.push_back(Rational(0));

  int rdeg = deg - low;
  if (rdeg > 0) {
    mpz_class lcm_den(1);
    for (int j = low; j <= deg; ++j) {
      mpz_class d = poly[j].den();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
      lcm_den = lcm_den / g * d;
    }
    std::vector<mpz_class> ic(rdeg + 1);
    for (int j = 0; j <= rdeg; ++j)
      ic[j] = poly[low + j].num() * (lcm_den / poly[low + j].den());
    bool c0ok = true, ckok = true;
    auto p_divs = divisors_capped(ic[0], c0ok);
    auto q_divs = divisors_capped(ic[rdeg], ckok);
    auto eval = [&](const Rational& x) {
      Rational acc;
      for (int j = rdeg; j >= 0; --j) acc = acc * x + Rational(ic[j]);
      return acc;
    };
    std::vector<Rational> found;
    for (const auto& p : p_divs)
      for (const auto& q : q_divs)
        for (int s : {1, -1}) {
          Rational cand(mpq_class(s * p, q));
          if (eval(cand).is_zero() &&
              std::find(found.begin(), found.end(), cand) == found.end())
            found.push_back(cand);
        }
    out.roots.insert(out.roots.end(), found.begin(), found.end());
  }
  out.complete = static_cast<int>(out.roots.size()) == deg;
  return out;
}

Vec RowSpan::reduce(Vec v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational& c = v[pivots_[k]];
    if (c.is_zero()) continue;
    Rational f = c;  // pivot entries are 1
    for (int j = pivots_[k]; j < cols_; ++j)
      if (!rows_[k][j].is_zero()) v[j] -= f * rows_[k][j];
  }
  return v;
}

bool RowSpan::insert(Vec v) {
  if (static_cast<int>(v.size()) != cols_) fail(errc::dimension_mismatch, "RowSpan insert");
  v = reduce(std::move(v));
  int lead = -1;
  for (int j = 0; j < cols_; ++j)
    if (!v[j].is_zero()) { lead = j; break; }
  if (lead < 0) return false;
  Rational inv = Rational(1) / v[lead];
  for (int j = lead; j < cols_; ++j) v[j] *= inv;
  // back-reduce existing rows so the basis stays fully reduced
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational& c = rows_[k][lead];
    if (c.is_zero()) continue;
    Rational f = c;
    for (int j = lead; j < cols_; ++j)
      if (!v[j].is_zero()) rows_[k][j] -= f * v[j];
  }
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, lead);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool RowSpan::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

std::optional<Vec> RowSpan::coords(const Vec& v) const {
  Vec w(v);
  Vec c(rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational& f = w[pivots_[k]];
    if (f.is_zero()) continue;
    c[k] = f;
    for (int j = pivots_[k]; j < cols_; ++j)
      if (!rows_[k][j].is_zero()) w[j] -= f * rows_[k][j];
  }
  if (!is_zero_vec(w)) return std::nullopt;
  return c;
}

Matrix RowSpan::to_matrix() const { return Matrix::from_rows(rows_, cols_); }

}  // namespace liexp
