#include "liexp/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "liexp/prng.hpp"

namespace liexp {

RadicalData solvable_radical(const LieAlgebra& lie) {
  int n = lie.dim();
  Matrix k = lie.killing_form();
  Subspace derived = lie.bracket_subspaces(lie.full_space(), lie.full_space());
  // x in R  iff  (y^T K) x = 0 for every basis y of [L,L]
  Matrix constraints(derived.dim(), n);
  for (int i = 0; i < derived.dim(); ++i) {
    Vec row = k.apply(derived.basis_vector(i));  // K symmetric
    constraints.set_row(i, row);
  }
  RadicalData rd;
  rd.R = kernel(constraints);
  if (!lie.is_ideal(rd.R))
    fail(errc::internal_inconsistency, "radical candidate is not an ideal (invalid input algebra)");
  auto ds = lie.series(rd.R, LieAlgebra::SeriesMode::derived);
  if (!ds.back().is_zero())
    fail(errc::internal_inconsistency, "radical candidate is not solvable (invalid input algebra)");
  auto lcs = lie.series(rd.R, LieAlgebra::SeriesMode::lower_central);
  rd.is_nilpotent = lcs.back().is_zero();
  rd.p = rd.is_nilpotent ? static_cast<int>(lcs.size()) : 0;
  return rd;
}

Quotient quotient_algebra(const LieAlgebra& lie, const Subspace& ideal) {
  if (!lie.is_ideal(ideal)) fail(errc::not_an_ideal, "quotient by a non-ideal");
  int n = lie.dim();
  RowSpan ispan(n);
  for (int i = 0; i < ideal.dim(); ++i) ispan.insert(ideal.basis_vector(i));
  std::vector<bool> is_pivot(n, false);
  for (int p : ispan.pivots()) is_pivot[p] = true;
  std::vector<int> comp;
  for (int j = 0; j < n; ++j)
    if (!is_pivot[j]) comp.push_back(j);
  int q = static_cast<int>(comp.size());

  Matrix pi(q, n);
  for (int j = 0; j < n; ++j) {
    Vec e(n);
    e[j] = Rational(1);
    Vec r = ispan.reduce(e);
    for (int a = 0; a < q; ++a) pi.at(a, j) = r[comp[a]];
  }
  Matrix section(n, q);
  for (int a = 0; a < q; ++a) section.at(comp[a], a) = Rational(1);

  std::vector<BracketEntry> entries;
  for (int a = 0; a < q; ++a)
    for (int b = a + 1; b < q; ++b) {
      Vec v = pi.apply(lie.bracket(section.col(a), section.col(b)));
      if (!is_zero_vec(v)) entries.push_back({a, b, std::move(v)});
    }
  LieAlgebra alg(q, lie.name() + "/I", std::move(entries));
  return Quotient{std::move(alg), std::move(pi), std::move(section), ideal};
}

LeviData levi_subalgebra(const LieAlgebra& lie, const RadicalData& rad) {
  if (!rad.is_nilpotent)
    fail(errc::radical_not_nilpotent, "Levi section is computed only along a nilpotent radical");
  int n = lie.dim();
  Quotient q = quotient_algebra(lie, rad.R);
  int qd = q.algebra.dim();
  Matrix kappa = q.section;

  auto lcs = lie.series(rad.R, LieAlgebra::SeriesMode::lower_central);  // N, N^2, ..., 0
  for (std::size_t stage = 1; stage < lcs.size(); ++stage) {
    const Subspace& nk = lcs[stage - 1];   // corrections live here
    const Subspace& nk1 = lcs[stage];      // defect must land here
    RowSpan nkspan(n), nk1span(n);
    for (int i = 0; i < nk.dim(); ++i) nkspan.insert(nk.basis_vector(i));
    for (int i = 0; i < nk1.dim(); ++i) nk1span.insert(nk1.basis_vector(i));
    int m = nk.dim();
    int unknowns = qd * m;

    std::vector<Vec> sys_rows;
    Vec rhs_all;
    for (int a = 0; a < qd; ++a)
      for (int b = a + 1; b < qd; ++b) {
        Vec str = q.algebra.bracket_basis(a, b);
        Vec delta = kappa.apply(str) - lie.bracket(kappa.col(a), kappa.col(b));
        if (!nkspan.contains(delta))
          fail(errc::internal_inconsistency, "Levi defect left the expected filtration term");
        // unknown (c, t): gamma(e_c) = sum_t u_{c,t} n_t
        std::vector<Vec> cols(unknowns, Vec(n));
        for (int c = 0; c < qd; ++c) {
          for (int t = 0; t < m; ++t) {
            Vec contrib(n);
            if (!str[c].is_zero()) contrib = contrib + str[c] * nk.basis_vector(t);
            if (c == a) contrib = contrib - lie.bracket(nk.basis_vector(t), kappa.col(b));
            if (c == b) contrib = contrib - lie.bracket(kappa.col(a), nk.basis_vector(t));
            cols[c * m + t] = nk1span.reduce(contrib);
          }
        }
        Vec rhs = nk1span.reduce(Rational(-1) * delta);
        for (int r = 0; r < n; ++r) {
          Vec row(unknowns);
          bool nz = !rhs[r].is_zero();
          for (int u = 0; u < unknowns; ++u) {
            row[u] = cols[u][r];
            nz = nz || !row[u].is_zero();
          }
          if (!nz) continue;
          sys_rows.push_back(std::move(row));
          rhs_all.push_back(rhs[r]);
        }
      }
    if (sys_rows.empty()) continue;
    Matrix sys = Matrix::from_rows(sys_rows, unknowns);
    auto sol = solve(sys, rhs_all);
    if (!sol) fail(errc::no_solution, "Levi correction system is unsolvable (invalid input algebra)");
    for (int c = 0; c < qd; ++c)
      for (int t = 0; t < m; ++t) {
        const Rational& u = (*sol)[c * m + t];
        if (u.is_zero()) continue;
        for (int r = 0; r < n; ++r) kappa.at(r, c) += u * nk.basis_vector(t)[r];
      }
  }

  // exactness of the corrected section
  if (!(q.pi * kappa == Matrix::identity(qd)))
    fail(errc::internal_inconsistency, "Levi section lost pi * kappa = id");
  for (int a = 0; a < qd; ++a)
    for (int b = a + 1; b < qd; ++b) {
      Vec lhs = kappa.apply(q.algebra.bracket_basis(a, b));
      Vec rhs = lie.bracket(kappa.col(a), kappa.col(b));
      if (!is_zero_vec(lhs - rhs))
        fail(errc::no_solution, "Levi section is not bracket preserving after correction");
    }

  std::vector<Vec> bcols;
  for (int a = 0; a < qd; ++a) bcols.push_back(kappa.col(a));
  return LeviData{Subspace::span(n, bcols), std::move(kappa), q.pi};
}

// ---------------------------------------------------------------------------

namespace {

LieAlgebra restrict_to(const LieAlgebra& lie, const Subspace& sub, const std::string& name) {
  int w = sub.dim();
  RowSpan span(lie.dim());
  for (int i = 0; i < w; ++i) span.insert(sub.basis_vector(i));
  std::vector<BracketEntry> entries;
  for (int a = 0; a < w; ++a)
    for (int b = a + 1; b < w; ++b) {
      Vec br = lie.bracket(sub.basis_vector(a), sub.basis_vector(b));
      auto c = span.coords(br);
      if (!c) fail(errc::not_a_subalgebra, "restriction target is not closed under the bracket");
      if (!is_zero_vec(*c)) entries.push_back({a, b, std::move(*c)});
    }
  return LieAlgebra(w, name, std::move(entries));
}

constexpr int kSplitAttempts = 8;

// components of `sub` (given by embed rows in ambient coordinates), appended to out
void decompose_rec(const LieAlgebra& lie, const Subspace& sub, int depth,
                   std::vector<Subspace>& out) {
  LieAlgebra alg = restrict_to(lie, sub, "component");
  int w = alg.dim();
  std::vector<Matrix> cent = centroid_basis(alg);
  if (cent.size() == 1) {
    out.push_back(sub);
    return;
  }
  for (int attempt = 0; attempt < kSplitAttempts; ++attempt) {
    Prng rng(0x5EED0000ULL + 977ULL * static_cast<std::uint64_t>(attempt) + 31ULL * w +
             7ULL * depth);
    Matrix t(w, w);
    for (const auto& g : cent) t = t + g * Rational(1 + static_cast<long>(rng.below(97)));
    auto mp = min_poly(t);
    auto rs = rational_roots_monic(mp);
    if (!rs.complete || rs.roots.size() < 2) continue;  // non-generic or incomplete: next seed
    for (const auto& lam : rs.roots) {
      Matrix shifted = t - Matrix::identity(w) * lam;
      Subspace eig = kernel(shifted);  // ideal of alg: (T - lam)[x,y] = [(T - lam)x, y]
      std::vector<Vec> ambient_rows;
      for (int i = 0; i < eig.dim(); ++i) {
        Vec coords = eig.basis_vector(i);
        Vec amb(lie.dim());
        for (int c = 0; c < w; ++c)
          if (!coords[c].is_zero()) amb = amb + coords[c] * sub.basis_vector(c);
        ambient_rows.push_back(std::move(amb));
      }
      decompose_rec(lie, Subspace::span(lie.dim(), ambient_rows), depth + 1, out);
    }
    return;
  }
  fail(errc::non_split_component,
       "centroid of a component has dimension " + std::to_string(cent.size()) +
           " > 1 and no seeded element splits rationally (not absolutely simple over Q)");
}

}  // namespace

std::vector<Matrix> centroid_basis(const LieAlgebra& q) {
  int n = q.dim();
  if (n == 0) return {};
  std::vector<Matrix> ads = q.ad_basis_all();
  std::vector<Vec> rows;
  for (int i = 0; i < n; ++i) {
    // T ad_i = ad_i T
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        Vec row(static_cast<std::size_t>(n) * n);
        for (int k = 0; k < n; ++k) {
          row[static_cast<std::size_t>(r) * n + k] += ads[i].at(k, c);
          row[static_cast<std::size_t>(k) * n + c] -= ads[i].at(r, k);
        }
        rows.push_back(std::move(row));
      }
    // T [x_i, y] = [T x_i, y]:  T ad_i = ad(T e_i)
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        Vec row(static_cast<std::size_t>(n) * n);
        for (int k = 0; k < n; ++k) {
          row[static_cast<std::size_t>(r) * n + k] += ads[i].at(k, c);
          row[static_cast<std::size_t>(k) * n + i] -= ads[k].at(r, c);
        }
        rows.push_back(std::move(row));
      }
  }
  Subspace ker = kernel(Matrix::from_rows(rows, n * n));
  std::vector<Matrix> basis;
  for (int i = 0; i < ker.dim(); ++i) basis.push_back(unflatten(ker.basis_vector(i), n, n));
  return basis;
}

SemisimpleDecomposition simple_decomposition(const LieAlgebra& q) {
  int n = q.dim();
  if (rank(q.killing_form()) != n)
    fail(errc::not_semisimple, "Killing form is degenerate");
  SemisimpleDecomposition dec;
  if (n == 0) return dec;
  decompose_rec(q, q.full_space(), 0, dec.components);
  std::sort(dec.components.begin(), dec.components.end());
  int total = 0;
  for (const auto& b : dec.components) total += b.dim();
  if (total != n)
    fail(errc::internal_inconsistency, "component dimensions do not sum to the algebra dimension");
  dec.centroid_dims.assign(dec.components.size(), 1);
  return dec;
}

std::vector<ComponentGroup> h_simple_grouping(const LieAlgebra& q,
                                              const SemisimpleDecomposition& dec,
                                              const ActionAlgebra& induced) {
  if (induced.ambient().dim() != q.dim())
    fail(errc::dimension_mismatch, "induced action does not act on the quotient");
  int m = static_cast<int>(dec.components.size());
  std::vector<int> parent(m);
  for (int i = 0; i < m; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int i = 0; i < m; ++i) {
    Subspace reach = apply_to_subspace(induced, dec.components[i]);
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      if (!subspace_intersect(reach, dec.components[j]).is_zero())
        parent[find(i)] = find(j);
    }
  }
  std::map<int, ComponentGroup> by_root;
  for (int i = 0; i < m; ++i) by_root[find(i)].members.push_back(i);
  std::vector<ComponentGroup> groups;
  for (auto& [root, g] : by_root) {
    std::sort(g.members.begin(), g.members.end());
    g.sum = Subspace::zero(q.dim());
    for (int i : g.members) g.sum = subspace_sum(g.sum, dec.components[i]);
    if (!is_invariant(induced, g.sum))
      fail(errc::group_sum_not_invariant, "grouped component sum is not action-invariant");
    groups.push_back(std::move(g));
  }
  std::sort(groups.begin(), groups.end(),
            [](const ComponentGroup& a, const ComponentGroup& b) { return a.members[0] < b.members[0]; });
  return groups;
}

ActionAlgebra induce_on_quotient(const ActionAlgebra& a, const Quotient& q) {
  for (const auto& g : a.generators()) {
    for (int i = 0; i < q.ideal.dim(); ++i)
      if (!q.ideal.contains(g.matrix.apply(q.ideal.basis_vector(i))))
        fail(errc::not_invariant_ideal,
             "generator '" + g.name + "' does not preserve the quotient ideal");
  }
  std::vector<ActionGenerator> induced;
  for (const auto& g : a.generators())
    induced.push_back({g.name, g.kind, q.pi * g.matrix * q.section});
  return build_action_algebra(q.algebra, std::move(induced));
}

// ---------------------------------------------------------------------------
// Wedderburn machinery for A0 = <ad S>

namespace {

int nilpotency_index(const std::vector<Matrix>& j, int n) {
  if (j.empty()) return 1;
  std::vector<Matrix> cur = j;
  int idx = 1;
  while (!cur.empty()) {
    RowSpan span(n * n);
    std::vector<Matrix> next;
    for (const auto& a : j)
      for (const auto& b : cur) {
        Matrix p = a * b;
        if (!p.is_zero() && span.insert(flatten(p))) next.push_back(std::move(p));
      }
    cur = std::move(next);
    ++idx;
    if (idx > n + 2) fail(errc::internal_inconsistency, "radical power iteration did not terminate");
  }
  return idx;
}

}  // namespace

A0Data wedderburn_split(const LieAlgebra& lie, const Subspace& levi_b, const Subspace& s) {
  int n = lie.dim();
  if (!lie.bracket_subspaces(levi_b, s).is_zero())
    fail(errc::bs_not_commuting, "[B, S] != 0");
  RadicalData rad = solvable_radical(lie);
  if (!rad.R.contains(s))
    fail(errc::decomposition_mismatch, "S is not inside the solvable radical");
  if (!subspace_intersect(levi_b, rad.R).is_zero() || levi_b.dim() + rad.R.dim() != n)
    fail(errc::decomposition_mismatch, "B is not a vector-space complement of the radical");

  A0Data out;
  out.S = s;
  std::vector<Matrix> gens;
  for (int i = 0; i < s.dim(); ++i) gens.push_back(lie.ad(s.basis_vector(i)));
  out.a0_basis = associative_closure(gens, n, /*with_identity=*/false);
  out.radical_basis = trace_radical(out.a0_basis);

  OperatorQuotient view(out.a0_basis, out.radical_basis, n);

  int ad = view.dim();
  if (ad > 0) {
    // the quotient must be a split sum of fields
    for (int a = 0; a < ad; ++a)
      for (int b = a + 1; b < ad; ++b)
        if (!is_zero_vec(view.mult(view.unit(a), view.unit(b)) -
                         view.mult(view.unit(b), view.unit(a))))
          fail(errc::lemma_shape_violation, "A0/J(A0) is not commutative (invalid S)");

    // left-multiplication matrices and the identity element of the quotient
    std::vector<Matrix> lmul(ad, Matrix(ad, ad));
    for (int t = 0; t < ad; ++t)
      for (int sidx = 0; sidx < ad; ++sidx) {
        Vec col = view.mult(view.unit(t), view.unit(sidx));
        for (int r = 0; r < ad; ++r) lmul[t].at(r, sidx) = col[r];
      }
    std::vector<Vec> id_rows;
    Vec id_rhs;
    for (int r = 0; r < ad; ++r)
      for (int sidx = 0; sidx < ad; ++sidx) {
        Vec row(ad);
        for (int t = 0; t < ad; ++t) row[t] = lmul[t].at(r, sidx);
        id_rows.push_back(std::move(row));
        id_rhs.push_back(r == sidx ? Rational(1) : Rational(0));
      }
    auto one = solve(Matrix::from_rows(id_rows, ad), id_rhs);
    if (!one)
      fail(errc::lemma_shape_violation, "A0/J(A0) has no identity element (invalid S)");

    std::vector<Vec> idem_bar;
    bool split_ok = false;
    for (int attempt = 0; attempt < kSplitAttempts && !split_ok; ++attempt) {
      Prng rng(0xA0BA5E00ULL + 977ULL * static_cast<std::uint64_t>(attempt) + 13ULL * ad);
      Vec x(ad);
      for (int t = 0; t < ad; ++t)
        x[t] = Rational(1 + static_cast<long>(rng.below(97)));
      Matrix mx(ad, ad);
      for (int t = 0; t < ad; ++t)
        if (!x[t].is_zero()) mx = mx + lmul[t] * x[t];
      auto mp = min_poly(mx);
      auto rs = rational_roots_monic(mp);
      if (!rs.complete || static_cast<int>(mp.size()) != ad) continue;
      idem_bar.clear();
      for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        Vec e = *one;
        for (std::size_t j = 0; j < rs.roots.size(); ++j) {
          if (j == i) continue;
          Vec shifted = x - rs.roots[j] * (*one);
          e = view.mult(e, Rational(1) / (rs.roots[i] - rs.roots[j]) * shifted);
        }
        idem_bar.push_back(std::move(e));
      }
      split_ok = true;
    }
    if (!split_ok)
      fail(errc::lemma_shape_violation,
           "A0/J(A0) is not a split direct sum of copies of Q (invalid S)");

    // lift, keeping lifted idempotents pairwise orthogonal
    int iters = 2;
    for (int nu = nilpotency_index(out.radical_basis, n); (1 << (iters - 2)) < nu;) ++iters;
    Matrix f_sum(n, n);
    for (const auto& ebar : idem_bar) {
      Matrix e = view.lift(ebar);
      e = e - f_sum * e - e * f_sum + f_sum * e * f_sum;
      for (int it = 0; it < iters; ++it) {
        Matrix e2 = e * e;
        if (e2 == e) break;
        e = e2 * Rational(3) - e2 * e * Rational(2);
      }
      if (!(e * e == e))
        fail(errc::internal_inconsistency, "idempotent lifting did not converge");
      out.idempotents.push_back(e);
      f_sum = f_sum + e;
    }
    for (std::size_t i = 0; i < out.idempotents.size(); ++i)
      for (std::size_t j = 0; j < out.idempotents.size(); ++j) {
        if (i == j) continue;
        if (!(out.idempotents[i] * out.idempotents[j]).is_zero())
          fail(errc::internal_inconsistency, "lifted idempotents are not orthogonal");
      }
    out.tilde_basis = out.idempotents;
  }

  if (out.tilde_basis.size() + out.radical_basis.size() != out.a0_basis.size())
    fail(errc::lemma_shape_violation, "A0 does not split as (sum of fields) + J(A0)");
  RowSpan direct(n * n);
  for (const auto& m : out.tilde_basis) direct.insert(flatten(m));
  for (const auto& m : out.radical_basis) direct.insert(flatten(m));
  if (direct.rank() != static_cast<int>(out.a0_basis.size()))
    fail(errc::lemma_shape_violation, "tilde A0 and J(A0) do not span A0 directly");
  return out;
}

bool complete_reducibility_check(const LieAlgebra& lie, const std::vector<Matrix>& operators) {
  for (const auto& op : operators)
    if (op.rows() != lie.dim() || op.cols() != lie.dim())
      fail(errc::dimension_mismatch, "operator shape");
  return complete_reducibility_check_ops(operators, lie.dim());
}

}  // namespace liexp
