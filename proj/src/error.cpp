#include "liexp/error.hpp"

namespace liexp {

const char* errc_name(errc c) {
  switch (c) {
    case errc::parse_error: return "ParseError";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::zero_denominator: return "ZeroDenominator";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::size_mismatch: return "SizeMismatch";
    case errc::validation_failed: return "ValidationFailed";
    case errc::not_a_subalgebra: return "NotASubalgebra";
    case errc::not_an_ideal: return "NotAnIdeal";
    case errc::not_nested: return "NotNested";
    case errc::compatibility_violation: return "CompatibilityViolation";
    case errc::singular_automorphism: return "SingularAutomorphism";
    case errc::radical_not_nilpotent: return "RadicalNotNilpotent";
    case errc::radical_not_invariant: return "RadicalNotInvariant";
    case errc::not_semisimple: return "NotSemisimple";
    case errc::non_split_component: return "NonSplitComponent";
    case errc::group_sum_not_invariant: return "GroupSumNotInvariant";
    case errc::bs_not_commuting: return "BSNotCommuting";
    case errc::decomposition_mismatch: return "DecompositionMismatch";
    case errc::lemma_shape_violation: return "LemmaShapeViolation";
    case errc::no_solution: return "NoSolution";
    case errc::condition_one_fails: return "ConditionOneFails";
    case errc::complement_invalid: return "ComplementInvalid";
    case errc::condition_two_prime_fails: return "ConditionTwoPrimeFails";
    case errc::not_invariant_ideal: return "NotInvariantIdeal";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::non_integral_multiplicity: return "NonIntegralMultiplicity";
    case errc::internal_inconsistency: return "InternalInconsistency";
  }
  return "UnknownError";
}

}  // namespace liexp
