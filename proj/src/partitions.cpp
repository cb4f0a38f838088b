#include "liexp/partitions.hpp"

#include <algorithm>
#include <sstream>

namespace liexp {

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ',';
    os << parts[i];
  }
  os << ')';
  return os.str();
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition{cur});
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) fail(errc::size_mismatch, "partitions of a negative number");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(n, n == 0 ? 1 : n, cur, out);
  return out;
}

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

mpz_class hook_dim(const Partition& lambda) {
  for (std::size_t i = 0; i + 1 < lambda.parts.size(); ++i)
    if (lambda.parts[i] < lambda.parts[i + 1]) fail(errc::size_mismatch, "not a partition");
  int rows = static_cast<int>(lambda.parts.size());
  std::vector<int> conj;  // column lengths
  if (rows > 0) {
    conj.assign(lambda.parts[0], 0);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < lambda.parts[i]; ++j) ++conj[j];
  }
  mpz_class denom(1);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < lambda.parts[i]; ++j)
      denom *= lambda.parts[i] - j + conj[j] - i - 1;
  mpz_class num = factorial(lambda.n());
  if (num % denom != 0) fail(errc::internal_inconsistency, "hook formula division");
  return num / denom;
}

mpz_class class_size(const Partition& mu) {
  int n = mu.n();
  mpz_class z(1);
  int run = 0;
  for (std::size_t i = 0; i < mu.parts.size(); ++i) {
    z *= mu.parts[i];
    ++run;
    if (i + 1 == mu.parts.size() || mu.parts[i + 1] != mu.parts[i]) {
      z *= factorial(run);
      run = 0;
    }
  }
  return factorial(n) / z;
}

namespace {

mpz_class mn_rec(const std::vector<int>& lam, const std::vector<int>& mu, std::size_t k) {
  if (k == mu.size()) return 1;
  int m = mu[k];
  int s = static_cast<int>(lam.size());
  std::vector<int> beta(s);
  for (int i = 0; i < s; ++i) beta[i] = lam[i] + (s - 1 - i);  // strictly decreasing
  mpz_class total(0);
  for (int i = 0; i < s; ++i) {
    int t = beta[i] - m;
    if (t < 0) continue;
    if (std::find(beta.begin(), beta.end(), t) != beta.end()) continue;
    int height = 0;
    for (int j = 0; j < s; ++j)
      if (t < beta[j] && beta[j] < beta[i]) ++height;
    std::vector<int> nb = beta;
    nb[i] = t;
    std::sort(nb.rbegin(), nb.rend());
    std::vector<int> nl(s);
    for (int r = 0; r < s; ++r) nl[r] = nb[r] - (s - 1 - r);
    while (!nl.empty() && nl.back() == 0) nl.pop_back();
    mpz_class sub = mn_rec(nl, mu, k + 1);
    if (height % 2)
      total -= sub;
    else
      total += sub;
  }
  return total;
}

}  // namespace

mpz_class mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.n() != mu.n()) fail(errc::size_mismatch, "character argument sizes differ");
  return mn_rec(lambda.parts, mu.parts, 0);
}

}  // namespace liexp
