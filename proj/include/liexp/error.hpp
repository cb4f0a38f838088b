#pragma once

#include <stdexcept>
#include <string>

namespace liexp {

/// Error codes. The CLI maps input errors to exit code 3 and computational
/// refusals (structural hypotheses not met, failed certificates, budgets) to
/// exit code 1.
enum class errc {
  // input / format errors
  parse_error,
  index_out_of_range,
  zero_denominator,
  dimension_mismatch,
  size_mismatch,
  validation_failed,
  // structural preconditions
  not_a_subalgebra,
  not_an_ideal,
  not_nested,
  compatibility_violation,
  singular_automorphism,
  // computational refusals
  radical_not_nilpotent,
  radical_not_invariant,
  not_semisimple,
  non_split_component,
  group_sum_not_invariant,
  bs_not_commuting,
  decomposition_mismatch,
  lemma_shape_violation,
  no_solution,
  condition_one_fails,
  complement_invalid,
  condition_two_prime_fails,
  not_invariant_ideal,
  budget_exceeded,
  // hard failures
  non_integral_multiplicity,
  internal_inconsistency,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
  Error(errc code, std::string message, int index = -1)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        index_(index) {}

  errc code() const { return code_; }
  /// Pair index for per-certificate-pair errors, -1 when not applicable.
  int index() const { return index_; }

  /// True for errors caused by malformed input files or tables (CLI exit 3).
  bool is_input_error() const {
    switch (code_) {
      case errc::parse_error:
      case errc::index_out_of_range:
      case errc::zero_denominator:
      case errc::dimension_mismatch:
      case errc::size_mismatch:
      case errc::validation_failed:
      case errc::compatibility_violation:
      case errc::singular_automorphism:
        return true;
      default:
        return false;
    }
  }

private:
  errc code_;
  int index_;
};

[[noreturn]] inline void fail(errc code, std::string message, int index = -1) {
  throw Error(code, std::move(message), index);
}

}  // namespace liexp
