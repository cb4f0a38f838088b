#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "liexp/error.hpp"

namespace liexp {

/// Partition of n: weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  int n() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
  }
  std::string str() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
};

/// All partitions of n in descending lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

mpz_class factorial(int n);

/// n! / product of hook lengths.
mpz_class hook_dim(const Partition& lambda);

/// Size of the conjugacy class of cycle type mu in S_n.
mpz_class class_size(const Partition& mu);

/// Irreducible S_n character chi_lambda on the class of cycle type mu
/// (Murnaghan-Nakayama over beta-numbers).
mpz_class mn_character(const Partition& lambda, const Partition& mu);

}  // namespace liexp
