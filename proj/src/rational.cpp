#include "liexp/rational.hpp"

#include <cctype>
#include <ostream>

namespace liexp {

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_integer(s, true))
      fail(errc::parse_error, "bad rational literal '" + std::string(s) + "'");
    return Rational(mpq_class(mpz_class(std::string(s)), 1));
  }
  std::string_view ns = s.substr(0, slash);
  std::string_view ds = s.substr(slash + 1);
  if (!valid_integer(ns, true) || !valid_integer(ds, false))
    fail(errc::parse_error, "bad rational literal '" + std::string(s) + "'");
  mpz_class den{std::string(ds)};
  if (den == 0) fail(errc::zero_denominator, "'" + std::string(s) + "'");
  return Rational(mpq_class(mpz_class(std::string(ns)), den));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::uint64_t Rational::mod(std::uint64_t p) const {
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class n = v_.get_num() % pz;
  if (n < 0) n += pz;
  mpz_class d = v_.get_den() % pz;
  if (d == 0) fail(errc::internal_inconsistency, "prime divides a denominator");
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t()) == 0)
    fail(errc::internal_inconsistency, "no modular inverse");
  mpz_class r = (n * inv) % pz;
  return r.get_ui();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Vec operator+(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec operator*(const Rational& c, const Vec& v) {
  Vec r(v);
  for (auto& x : r) x *= c;
  return r;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace liexp
