#pragma once

#include <vector>

#include "liexp/action.hpp"
#include "liexp/lie_algebra.hpp"

namespace liexp {

struct RadicalData {
  Subspace R;             // solvable radical
  bool is_nilpotent = false;
  int p = 0;              // least p with N^p = 0 when nilpotent (p = 1 for R = 0), else 0
};

/// Cartan criterion: R = {x : K(x, [L,L]) = 0}; verified to be a solvable
/// ideal.
RadicalData solvable_radical(const LieAlgebra& lie);

struct Quotient {
  LieAlgebra algebra;  // structure constants on the pivot-free complement coordinates
  Matrix pi;           // q x dim projection onto quotient coordinates
  Matrix section;      // dim x q embedding of the complement coordinates
  Subspace ideal;
};

Quotient quotient_algebra(const LieAlgebra& lie, const Subspace& ideal);

struct LeviData {
  Subspace B;     // Levi subalgebra, L = B + R direct
  Matrix kappa;   // dim x q bracket-preserving section of pi
  Matrix pi;      // q x dim projection L -> L/R
};

/// Levi section along the lower central series of a nilpotent radical:
/// start from the pivot-free linear section and correct it stage by stage,
/// solving the linear system for bracket preservation modulo the next term.
LeviData levi_subalgebra(const LieAlgebra& lie, const RadicalData& rad);

struct SemisimpleDecomposition {
  std::vector<Subspace> components;
  std::vector<int> centroid_dims;  // all 1 on success
};

/// Minimal ideals of a semisimple algebra via eigenspaces of a generic
/// centroid element (deterministic seeded retries); every component must be
/// absolutely simple (1-dimensional centroid) or NonSplitComponent is raised.
SemisimpleDecomposition simple_decomposition(const LieAlgebra& q);

/// Basis of {T : T ad x = ad x T and T[x,y] = [Tx,y] for all basis x,y}.
std::vector<Matrix> centroid_basis(const LieAlgebra& q);

struct ComponentGroup {
  std::vector<int> members;
  Subspace sum;
};

/// Connected components of i ~ j iff apply(A, B_i) meets B_j; each group sum
/// is a minimal invariant ideal of the semisimple algebra.
std::vector<ComponentGroup> h_simple_grouping(const LieAlgebra& q,
                                              const SemisimpleDecomposition& dec,
                                              const ActionAlgebra& induced);

/// Action induced on quotient coordinates; every generator must preserve the
/// quotient ideal.
ActionAlgebra induce_on_quotient(const ActionAlgebra& a, const Quotient& q);

struct A0Data {
  Subspace S;
  std::vector<Matrix> a0_basis;       // algebra generated by ad S (non-unital)
  std::vector<Matrix> radical_basis;  // J(A0), trace-form radical
  std::vector<Matrix> tilde_basis;    // semisimple part, spanned by the idempotents
  std::vector<Matrix> idempotents;    // pairwise orthogonal, e_i^2 = e_i exactly
};

/// A0 = <ad S>, J(A0) by the trace form, idempotents of A0/J(A0) lifted by
/// e <- 3e^2 - 2e^3 until exactly idempotent.
A0Data wedderburn_split(const LieAlgebra& lie, const Subspace& levi_b, const Subspace& s);

/// True iff the unital algebra generated by the operators has zero
/// trace-form radical.
bool complete_reducibility_check(const LieAlgebra& lie, const std::vector<Matrix>& operators);

}  // namespace liexp
