#pragma once

#include <optional>
#include <vector>

#include "liexp/structure.hpp"

namespace liexp {

/// The finite set {U_q : q >= 0} with U_0 = u0 and U_{q+1} = [U_q, L],
/// listed in order of first occurrence.
struct ReachSet {
  std::vector<std::pair<int, Subspace>> items;  // (first q, value)
};

ReachSet reach_set(const LieAlgebra& lie, const Subspace& u0);

/// Output of the structural exponent formula for R = N.
struct ExponentResult {
  bool nilpotent = false;  // true iff no nonempty tuple succeeds (d = 0)
  int d = 0;               // sum of witness component dimensions
  std::vector<int> witness_components;  // indices into `groups`
  std::vector<int> witness_q;
  std::vector<Subspace> witness_subspaces;  // chosen reach-set members, in L
  std::vector<ComponentGroup> groups;       // minimal invariant ideals of L/N
  std::vector<int> group_dims;
  bool split_warning = false;  // action algebra's semisimple part not certified split
};

/// Automatic exponent when the solvable radical is nilpotent and invariant:
/// quotient, Levi section, invariant grouping of the simple components, then
/// the maximal-dimension tuple search over reach-set chains. Reported
/// witness is the lexicographically least among maximal-dimension successes
/// (component tuple first, then q tuple).
ExponentResult theorem5_exponent(const LieAlgebra& lie, const ActionAlgebra& action);

/// Same, with a caller-supplied radical and Levi section.
ExponentResult theorem5_exponent(const LieAlgebra& lie, const ActionAlgebra& action,
                                 const RadicalData& rad, const LeviData& levi);

/// {x in L : [x, I] inside J} for nested ideals J inside I.
Subspace annihilator(const LieAlgebra& lie, const Subspace& ideal_i, const Subspace& ideal_j);

struct CertificatePair {
  Subspace I;
  Subspace J;
  std::optional<Subspace> T;
};

/// User-supplied witness for one admissible value of the d' formula.
struct Certificate {
  std::vector<CertificatePair> pairs;
  std::optional<Subspace> S;
  std::optional<Subspace> B;
};

/// Verifies the certificate (absolute irreducibility of each I_k/J_k under
/// the induced action of ad L and the action algebra; complements invariant
/// under the action and under (ad B) + tilde A0; nonzero chain brackets) and
/// returns dim L - dim of the intersected annihilators: one admissible value
/// of the maximand of d'.
int certify_dprime(const LieAlgebra& lie, const ActionAlgebra& action, const Certificate& cert);

/// Best-effort certificate that the semisimple part of the action algebra
/// splits over Q (rationally split center with perfect-square component
/// dimensions). Used only to drive the non-split warning.
bool action_semisimple_part_split_certified(const ActionAlgebra& action);

}  // namespace liexp
