#ifndef COMPACTA_BIGINT_HPP
#define COMPACTA_BIGINT_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace compacta {

using integer = mpz_class;
using rational = mpq_class;

inline integer factorial(unsigned long n) {
  integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline integer binomial(unsigned long n, unsigned long k) {
  integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline integer catalan(unsigned long n) { return binomial(2 * n, n) / (n + 1); }

/// (2n-1)!! with the empty-product convention (-1)!! = 1.
inline integer odd_double_factorial(unsigned long n) {
  if (n == 0) return 1;
  integer r;
  mpz_2fac_ui(r.get_mpz_t(), 2 * n - 1);
  return r;
}

inline integer fibonacci(unsigned long n) {
  integer r;
  mpz_fib_ui(r.get_mpz_t(), n);
  return r;
}

inline integer pow(const integer& base, unsigned long e) {
  integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Natural log of |x| without overflowing a double, for x != 0.
inline long double log_abs(const integer& x) {
  if (x == 0) throw std::domain_error("log_abs: zero argument");
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
  return std::log(static_cast<long double>(std::fabs(mant))) +
         static_cast<long double>(exp2) * std::log(2.0L);
}

inline long double log_abs(const rational& q) {
  return log_abs(integer(q.get_num())) - log_abs(integer(q.get_den()));
}

inline bool is_integral(const rational& q) { return q.get_den() == 1; }

inline std::string to_string(const integer& x) { return x.get_str(); }

inline std::string to_string(const rational& q) { return q.get_str(); }

}  // namespace compacta

#endif  // COMPACTA_BIGINT_HPP
