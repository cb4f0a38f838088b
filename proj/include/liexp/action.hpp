#pragma once

#include <string>
#include <vector>

#include "liexp/lie_algebra.hpp"
#include "liexp/operator_span.hpp"

namespace liexp {

enum class GeneratorKind { derivation, automorphism };

const char* kind_name(GeneratorKind k);

struct ActionGenerator {
  std::string name;
  GeneratorKind kind = GeneratorKind::derivation;
  Matrix matrix;  // dim x dim, acting on coordinate columns
};

/// The image of the acting Hopf algebra: a linear basis of the unital
/// associative operator algebra generated by the declared derivations and
/// automorphisms (automorphisms contribute their inverses as well). The
/// identity is always basis element 0.
class ActionAlgebra {
public:
  ActionAlgebra(const LieAlgebra* ambient, std::vector<ActionGenerator> generators,
                std::vector<Matrix> basis)
      : ambient_(ambient), generators_(std::move(generators)), basis_(std::move(basis)) {}

  const LieAlgebra& ambient() const { return *ambient_; }
  const std::vector<ActionGenerator>& generators() const { return generators_; }
  const std::vector<Matrix>& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  bool is_trivial() const { return generators_.empty(); }

private:
  const LieAlgebra* ambient_;  // non-owning; must outlive the action algebra
  std::vector<ActionGenerator> generators_;
  std::vector<Matrix> basis_;
};

/// Validates the derivation/automorphism compatibility laws on all basis
/// pairs and closes the generated unital algebra under composition.
ActionAlgebra build_action_algebra(const LieAlgebra& lie, std::vector<ActionGenerator> generators);

/// Trivial action (H = F): basis {identity}.
ActionAlgebra trivial_action(const LieAlgebra& lie);

/// span{ T v : T in basis, v in u }; contains u.
Subspace apply_to_subspace(const ActionAlgebra& a, const Subspace& u);

/// True iff apply_to_subspace(a, u) = u.
bool is_invariant(const ActionAlgebra& a, const Subspace& u);

}  // namespace liexp
