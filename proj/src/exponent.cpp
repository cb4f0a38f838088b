#include "liexp/exponent.hpp"

#include <algorithm>
#include <map>

#include "liexp/prng.hpp"

namespace liexp {

ReachSet reach_set(const LieAlgebra& lie, const Subspace& u0) {
  ReachSet out;
  std::map<Subspace, int> seen;
  Subspace cur = u0;
  for (int q = 0;; ++q) {
    if (seen.count(cur)) break;
    seen[cur] = q;
    out.items.push_back({q, cur});
    cur = lie.bracket_subspaces(cur, lie.full_space());
  }
  return out;
}

namespace {

// Left-normed bracket of the chosen blocks; zero prefixes are pruned since
// every extension of a zero bracket stays zero.
struct TupleSearch {
  const LieAlgebra* lie;
  const std::vector<ReachSet>* reaches;
  const std::vector<int>* perm;
  std::vector<int> qs;
  std::vector<Subspace> chain;

  bool run(std::size_t k, const Subspace& acc) {
    if (k == perm->size()) return true;
    const ReachSet& rs = (*reaches)[(*perm)[k]];
    for (const auto& [q, value] : rs.items) {
      Subspace next = (k == 0) ? value : lie->bracket_subspaces(acc, value);
      if (next.is_zero()) continue;
      qs.push_back(q);
      chain.push_back(value);
      if (run(k + 1, next)) return true;
      qs.pop_back();
      chain.pop_back();
    }
    return false;
  }
};

}  // namespace

ExponentResult theorem5_exponent(const LieAlgebra& lie, const ActionAlgebra& action) {
  RadicalData rad = solvable_radical(lie);
  if (!rad.is_nilpotent)
    fail(errc::radical_not_nilpotent,
         "formula requires R = N: solvable radical is not nilpotent");
  if (!is_invariant(action, rad.R))
    fail(errc::radical_not_invariant, "solvable radical is not invariant under the action");
  LeviData levi = levi_subalgebra(lie, rad);
  return theorem5_exponent(lie, action, rad, levi);
}

ExponentResult theorem5_exponent(const LieAlgebra& lie, const ActionAlgebra& action,
                                 const RadicalData& rad, const LeviData& levi) {
  if (!rad.is_nilpotent)
    fail(errc::radical_not_nilpotent,
         "formula requires R = N: solvable radical is not nilpotent");
  if (!is_invariant(action, rad.R))
    fail(errc::radical_not_invariant, "solvable radical is not invariant under the action");

  ExponentResult res;
  res.split_warning = !action_semisimple_part_split_certified(action);

  Quotient q = quotient_algebra(lie, rad.R);
  if (q.algebra.dim() == 0) {
    res.nilpotent = true;  // L = N
    return res;
  }
  SemisimpleDecomposition dec = simple_decomposition(q.algebra);
  ActionAlgebra induced = induce_on_quotient(action, q);
  res.groups = h_simple_grouping(q.algebra, dec, induced);
  for (const auto& g : res.groups) res.group_dims.push_back(g.sum.dim());

  int ng = static_cast<int>(res.groups.size());
  std::vector<ReachSet> reaches;
  for (const auto& g : res.groups) {
    std::vector<Vec> ambient;
    for (int i = 0; i < g.sum.dim(); ++i) ambient.push_back(levi.kappa.apply(g.sum.basis_vector(i)));
    Subspace u0 = apply_to_subspace(action, Subspace::span(lie.dim(), ambient));
    reaches.push_back(reach_set(lie, u0));
  }

  // ordered tuples of distinct indices, largest total dimension first;
  // among equal dimensions, lexicographic tuple order
  struct Sub {
    int dim;
    std::vector<int> members;
  };
  std::vector<Sub> subsets;
  for (unsigned mask = 1; mask < (1u << ng); ++mask) {
    Sub s{0, {}};
    for (int i = 0; i < ng; ++i)
      if (mask & (1u << i)) {
        s.members.push_back(i);
        s.dim += res.group_dims[i];
      }
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), [](const Sub& a, const Sub& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    return a.members < b.members;
  });

  for (const auto& sub : subsets) {
    std::vector<int> perm = sub.members;  // ascending = first permutation in lex order
    do {
      TupleSearch ts{&lie, &reaches, &perm, {}, {}};
      if (ts.run(0, lie.zero_space())) {
        res.d = sub.dim;
        res.witness_components = perm;
        res.witness_q = ts.qs;
        res.witness_subspaces = ts.chain;
        // re-verify the witnessed chain
        Subspace acc = ts.chain.front();
        for (std::size_t k = 1; k < ts.chain.size(); ++k)
          acc = lie.bracket_subspaces(acc, ts.chain[k]);
        if (acc.is_zero())
          fail(errc::internal_inconsistency, "witness re-verification failed");
        return res;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  res.nilpotent = true;
  res.d = 0;
  return res;
}

Subspace annihilator(const LieAlgebra& lie, const Subspace& ideal_i, const Subspace& ideal_j) {
  if (!lie.is_ideal(ideal_i) || !lie.is_ideal(ideal_j))
    fail(errc::not_an_ideal, "annihilator arguments must be ideals");
  if (!ideal_i.contains(ideal_j)) fail(errc::not_nested, "J must be contained in I");
  int n = lie.dim();
  RowSpan jspan(n);
  for (int i = 0; i < ideal_j.dim(); ++i) jspan.insert(ideal_j.basis_vector(i));
  std::vector<Vec> rows;
  for (int v = 0; v < ideal_i.dim(); ++v) {
    Matrix adv = lie.ad(ideal_i.basis_vector(v));  // [x, v] = -ad_v x; J symmetric to sign
    std::vector<Vec> cols;
    for (int c = 0; c < n; ++c) cols.push_back(jspan.reduce(adv.col(c)));
    for (int r = 0; r < n; ++r) {
      Vec row(n);
      bool nz = false;
      for (int c = 0; c < n; ++c) {
        row[c] = cols[c][r];
        nz = nz || !row[c].is_zero();
      }
      if (nz) rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return lie.full_space();
  return kernel(Matrix::from_rows(rows, n));
}

// ---------------------------------------------------------------------------
// d' certificates

namespace {

// Coordinates on I/J: the complement rows of I's basis reduced against J.
struct SubquotientView {
  RowSpan jspan;
  RowSpan cspan;
  int n;

  SubquotientView(const Subspace& ideal_i, const Subspace& ideal_j, int ambient)
      : jspan(ambient), cspan(ambient), n(ambient) {
    for (int i = 0; i < ideal_j.dim(); ++i) jspan.insert(ideal_j.basis_vector(i));
    for (int i = 0; i < ideal_i.dim(); ++i) {
      Vec r = jspan.reduce(ideal_i.basis_vector(i));
      if (!is_zero_vec(r)) cspan.insert(std::move(r));
    }
  }

  int dim() const { return cspan.rank(); }

  Vec coords(const Vec& x) const {
    auto c = cspan.coords(jspan.reduce(x));
    if (!c) fail(errc::internal_inconsistency, "vector outside I in subquotient view");
    return *c;
  }

  Matrix induce(const Matrix& op) const {
    int m = dim();
    Matrix r(m, m);
    for (int k = 0; k < m; ++k) {
      Vec col = coords(op.apply(cspan.rows()[k]));
      for (int i = 0; i < m; ++i) r.at(i, k) = col[i];
    }
    return r;
  }
};

}  // namespace

int certify_dprime(const LieAlgebra& lie, const ActionAlgebra& action, const Certificate& cert) {
  int n = lie.dim();
  RadicalData rad = solvable_radical(lie);

  Subspace levi_b;
  if (cert.B) {
    levi_b = *cert.B;
    if (!lie.is_subalgebra(levi_b) || !subspace_intersect(levi_b, rad.R).is_zero() ||
        levi_b.dim() + rad.R.dim() != n)
      fail(errc::complement_invalid, "supplied B is not a Levi complement of the radical");
  } else {
    levi_b = levi_subalgebra(lie, rad).B;  // refuses when R is not nilpotent
  }
  Subspace s = cert.S.value_or(lie.zero_space());
  if (!is_invariant(action, s))
    fail(errc::not_invariant_ideal, "S is not invariant under the action");

  // (a) S validity and the A0 / tilde A0 construction
  A0Data a0 = wedderburn_split(lie, levi_b, s);

  std::vector<Matrix> ad_l = lie.ad_basis_all();
  std::vector<Matrix> ad_b;
  for (int i = 0; i < levi_b.dim(); ++i) ad_b.push_back(lie.ad(levi_b.basis_vector(i)));

  // (b) invariant nested ideals and absolute irreducibility of each I_k/J_k
  std::vector<SubquotientView> views;
  for (std::size_t k = 0; k < cert.pairs.size(); ++k) {
    const auto& pr = cert.pairs[k];
    int ki = static_cast<int>(k);
    if (!lie.is_ideal(pr.I))
      fail(errc::not_invariant_ideal, "I_" + std::to_string(k) + " is not an ideal", ki);
    if (!lie.is_ideal(pr.J))
      fail(errc::not_invariant_ideal, "J_" + std::to_string(k) + " is not an ideal", ki);
    if (!is_invariant(action, pr.I))
      fail(errc::not_invariant_ideal, "I_" + std::to_string(k) + " is not action-invariant", ki);
    if (!is_invariant(action, pr.J))
      fail(errc::not_invariant_ideal, "J_" + std::to_string(k) + " is not action-invariant", ki);
    if (!pr.I.contains(pr.J))
      fail(errc::not_invariant_ideal, "J_" + std::to_string(k) + " is not contained in I_" + std::to_string(k), ki);

    SubquotientView view(pr.I, pr.J, n);
    int m = view.dim();
    if (m == 0)
      fail(errc::condition_one_fails, "I_" + std::to_string(k) + " = J_" + std::to_string(k), ki);
    std::vector<Matrix> induced;
    for (const auto& op : ad_l) induced.push_back(view.induce(op));
    for (const auto& op : action.basis()) induced.push_back(view.induce(op));
    auto closure = associative_closure(induced, m, /*with_identity=*/true);
    if (static_cast<int>(closure.size()) != m * m)
      fail(errc::condition_one_fails,
           "I_" + std::to_string(k) + "/J_" + std::to_string(k) +
               " is not absolutely irreducible: enveloping dimension " +
               std::to_string(closure.size()) + " != " + std::to_string(m * m),
           ki);
    views.push_back(std::move(view));
  }

  // (c) complements: T_k with I_k = J_k + T_k, invariant under the action
  // and under (ad B) + tilde A0
  std::vector<Subspace> ts;
  for (std::size_t k = 0; k < cert.pairs.size(); ++k) {
    const auto& pr = cert.pairs[k];
    int ki = static_cast<int>(k);
    if (!pr.T) fail(errc::complement_invalid, "T_" + std::to_string(k) + " is required", ki);
    const Subspace& t = *pr.T;
    if (!pr.I.contains(t) || !subspace_intersect(t, pr.J).is_zero() ||
        t.dim() + pr.J.dim() != pr.I.dim())
      fail(errc::complement_invalid,
           "T_" + std::to_string(k) + " is not a complement of J_" + std::to_string(k) + " in I_" +
               std::to_string(k),
           ki);
    if (!is_invariant(action, t))
      fail(errc::complement_invalid, "T_" + std::to_string(k) + " is not action-invariant", ki);
    auto maps_into = [&](const Matrix& op) {
      for (int i = 0; i < t.dim(); ++i)
        if (!t.contains(op.apply(t.basis_vector(i)))) return false;
      return true;
    };
    for (const auto& op : ad_b)
      if (!maps_into(op))
        fail(errc::complement_invalid, "T_" + std::to_string(k) + " is not an (ad B)-submodule", ki);
    for (const auto& op : a0.idempotents)
      if (!maps_into(op))
        fail(errc::complement_invalid, "T_" + std::to_string(k) + " is not tilde-A0-invariant", ki);
    ts.push_back(t);
  }

  // (d) condition 2': some q choice gives a nonzero left-normed chain
  std::vector<ReachSet> reaches;
  for (const auto& t : ts) reaches.push_back(reach_set(lie, t));
  std::vector<int> perm(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) perm[i] = static_cast<int>(i);
  TupleSearch search{&lie, &reaches, &perm, {}, {}};
  if (!ts.empty() && !search.run(0, lie.zero_space()))
    fail(errc::condition_two_prime_fails,
         "no q choice makes the left-normed chain of the complements nonzero");

  Subspace inter = lie.full_space();
  for (const auto& pr : cert.pairs)
    inter = subspace_intersect(inter, annihilator(lie, pr.I, pr.J));
  return n - inter.dim();
}

// ---------------------------------------------------------------------------

bool action_semisimple_part_split_certified(const ActionAlgebra& action) {
  const auto& basis = action.basis();
  int n = action.ambient().dim();
  std::vector<Matrix> rad = trace_radical(basis);
  OperatorQuotient view(basis, rad, n);
  int m = view.dim();
  if (m == 0) return true;

  // center of the semisimple quotient
  std::vector<Matrix> lmul(m, Matrix(m, m)), rmul(m, Matrix(m, m));
  for (int t = 0; t < m; ++t)
    for (int s = 0; s < m; ++s) {
      Vec lc = view.mult(view.unit(t), view.unit(s));
      Vec rc = view.mult(view.unit(s), view.unit(t));
      for (int r = 0; r < m; ++r) {
        lmul[t].at(r, s) = lc[r];
        rmul[t].at(r, s) = rc[r];
      }
    }
  std::vector<Vec> rows;
  for (int s = 0; s < m; ++s)
    for (int r = 0; r < m; ++r) {
      Vec row(m);
      for (int t = 0; t < m; ++t) row[t] = lmul[t].at(r, s) - rmul[t].at(r, s);
      rows.push_back(std::move(row));
    }
  Subspace center = kernel(Matrix::from_rows(rows, m));
  int cdim = center.dim();

  Vec one = view.project(Matrix::identity(n));
  for (int attempt = 0; attempt < 8; ++attempt) {
    Prng rng(0xCE27E800ULL + 977ULL * static_cast<std::uint64_t>(attempt) + 13ULL * m);
    Vec x(m);
    for (int i = 0; i < cdim; ++i) {
      Rational coeff(1 + static_cast<long>(rng.below(97)));
      x = x + coeff * center.basis_vector(i);
    }
    Matrix mx(m, m);
    for (int t = 0; t < m; ++t)
      if (!x[t].is_zero()) mx = mx + lmul[t] * x[t];
    auto roots = rational_roots_monic(min_poly(mx));
    if (!roots.complete || static_cast<int>(roots.roots.size()) != cdim) continue;
    // central idempotents by Lagrange interpolation; component dimensions
    // must be perfect squares
    for (std::size_t i = 0; i < roots.roots.size(); ++i) {
      Vec e = one;
      for (std::size_t j = 0; j < roots.roots.size(); ++j) {
        if (j == i) continue;
        Vec shifted = x - roots.roots[j] * one;
        e = view.mult(e, Rational(1) / (roots.roots[i] - roots.roots[j]) * shifted);
      }
      Matrix le(m, m);
      for (int t = 0; t < m; ++t)
        if (!e[t].is_zero()) le = le + lmul[t] * e[t];
      int comp_dim = rank(le);
      mpz_class r;
      mpz_class cd(comp_dim);
      mpz_sqrt(r.get_mpz_t(), cd.get_mpz_t());
      if (r * r != cd) return false;
    }
    return true;
  }
  return false;
}

}  // namespace liexp
