#pragma once

#include <string>
#include <vector>

#include "liexp/action.hpp"
#include "liexp/partitions.hpp"

namespace liexp {

struct CodimOptions {
  bool exact = true;  // two-prime modular shortcut with exact fallback when false
  unsigned long long budget = 50000000ULL;  // cap on n! * (dim A)^n * (dim L)^(n+1)
};

struct CodimResult {
  int n = 0;
  unsigned long long value = 0;
  std::string mode;  // "exact" or "two_prime"
  int action_basis_size = 0;
};

/// Rank of the evaluation matrix of all multilinear operator-decorated
/// left-normed brackets [g_1 x_{s(1)}, ..., g_n x_{s(n)}] over basis tuples:
/// the n-th codimension of polynomial identities with the given action.
CodimResult codimension(const LieAlgebra& lie, const ActionAlgebra& action, int n,
                        const CodimOptions& opts = {});

struct CocharacterReport {
  int n = 0;
  unsigned long long codim = 0;
  std::vector<std::pair<Partition, mpz_class>> multiplicities;
};

/// Multiplicities m(lambda) of the S_n-module structure on the evaluation
/// image: traces of one permutation per cycle type against the irreducible
/// characters. All multiplicities are verified to be nonnegative integers
/// and to resolve the codimension through the hook formula.
CocharacterReport cocharacter_multiplicities(const LieAlgebra& lie, const ActionAlgebra& action,
                                             int n, const CodimOptions& opts = {});

struct GrowthRow {
  int n = 0;
  unsigned long long codim = 0;
  std::string root;  // decimal rendering of codim^(1/n)
  bool has_d = false;
  int d = 0;
};

/// Observational table (n, c_n, c_n^(1/n), structural d when applicable).
std::vector<GrowthRow> growth_report(const LieAlgebra& lie, const ActionAlgebra& action, int nmax,
                                     const CodimOptions& opts = {});

}  // namespace liexp
