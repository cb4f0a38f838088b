#include "liexp/action.hpp"

namespace liexp {

const char* kind_name(GeneratorKind k) {
  return k == GeneratorKind::derivation ? "derivation" : "automorphism";
}

namespace {

void check_compatibility(const LieAlgebra& lie, const ActionGenerator& g) {
  int n = lie.dim();
  if (g.matrix.rows() != n || g.matrix.cols() != n)
    fail(errc::dimension_mismatch, "generator '" + g.name + "' matrix must be " +
                                       std::to_string(n) + "x" + std::to_string(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec bi(n), bj(n);
      bi[i] = Rational(1);
      bj[j] = Rational(1);
      Vec gb = g.matrix.apply(lie.bracket_basis(i, j));
      Vec rhs;
      if (g.kind == GeneratorKind::derivation)
        rhs = lie.bracket(g.matrix.apply(bi), bj) + lie.bracket(bi, g.matrix.apply(bj));
      else
        rhs = lie.bracket(g.matrix.apply(bi), g.matrix.apply(bj));
      if (!is_zero_vec(gb - rhs))
        fail(errc::compatibility_violation,
             std::string(kind_name(g.kind)) + " law fails for generator '" + g.name +
                 "' on basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

}  // namespace

ActionAlgebra build_action_algebra(const LieAlgebra& lie, std::vector<ActionGenerator> generators) {
  int n = lie.dim();
  std::vector<Matrix> closure_gens;
  for (const auto& g : generators) {
    check_compatibility(lie, g);
    closure_gens.push_back(g.matrix);
    if (g.kind == GeneratorKind::automorphism) {
      auto inv = inverse(g.matrix);
      if (!inv) fail(errc::singular_automorphism, "generator '" + g.name + "' is not invertible");
      closure_gens.push_back(*inv);  // the group generated acts, not the monoid
    }
  }
  std::vector<Matrix> basis = associative_closure(closure_gens, n, /*with_identity=*/true);
  return ActionAlgebra(&lie, std::move(generators), std::move(basis));
}

ActionAlgebra trivial_action(const LieAlgebra& lie) { return build_action_algebra(lie, {}); }

Subspace apply_to_subspace(const ActionAlgebra& a, const Subspace& u) {
  if (u.ambient_dim() != a.ambient().dim())
    fail(errc::dimension_mismatch, "apply_to_subspace ambient");
  std::vector<Vec> gens;
  for (const auto& t : a.basis())
    for (int i = 0; i < u.dim(); ++i) gens.push_back(t.apply(u.basis_vector(i)));
  return Subspace::span(u.ambient_dim(), gens);
}

bool is_invariant(const ActionAlgebra& a, const Subspace& u) {
  return apply_to_subspace(a, u) == u;
}

}  // namespace liexp
