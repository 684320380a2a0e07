#ifndef COMPACTA_POLYNOMIAL_HPP
#define COMPACTA_POLYNOMIAL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "compacta/bigint.hpp"

namespace compacta {

/// Dense univariate polynomial, coefficients in ascending degree. The zero
/// polynomial has no coefficients; otherwise the last one is nonzero.
template <class Coeff>
class polynomial {
 public:
  using coeff_type = Coeff;

  polynomial() = default;
  polynomial(Coeff c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) c_.push_back(std::move(c));
  }
  polynomial(long c) : polynomial(Coeff(c)) {}  // NOLINT(google-explicit-constructor)
  polynomial(int c) : polynomial(Coeff(c)) {}   // NOLINT(google-explicit-constructor)
  polynomial(std::initializer_list<Coeff> cs) : c_(cs) { normalize(); }
  explicit polynomial(std::vector<Coeff> cs) : c_(std::move(cs)) { normalize(); }

  /// The monomial c*z^d.
  static polynomial monomial(std::size_t d, Coeff c = Coeff(1)) {
    if (c == 0) return {};
    std::vector<Coeff> v(d + 1, Coeff(0));
    v[d] = std::move(c);
    return polynomial(std::move(v));
  }

  static polynomial z() { return monomial(1); }

  bool is_zero() const noexcept { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Coeff>& coefficients() const noexcept { return c_; }

  /// Coefficient of z^i (zero beyond the degree).
  Coeff operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Coeff(0); }

  const Coeff& leading() const {
    static const Coeff zero(0);
    return c_.empty() ? zero : c_.back();
  }

  polynomial& operator+=(const polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
  }

  polynomial& operator-=(const polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
  }

  polynomial& operator*=(const polynomial& o) { return *this = *this * o; }

  polynomial& operator*=(const Coeff& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend polynomial operator+(polynomial a, const polynomial& b) { return a += b; }
  friend polynomial operator-(polynomial a, const polynomial& b) { return a -= b; }
  friend polynomial operator-(polynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }

  friend polynomial operator*(const polynomial& a, const polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return polynomial(std::move(r));
  }

  friend polynomial operator*(polynomial a, const Coeff& s) { return a *= s; }
  friend polynomial operator*(const Coeff& s, polynomial a) { return a *= s; }

  friend bool operator==(const polynomial& a, const polynomial& b) { return a.c_ == b.c_; }

  /// Multiplication by z^d.
  polynomial shift(std::size_t d) const {
    if (is_zero()) return {};
    std::vector<Coeff> v(d, Coeff(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return polynomial(std::move(v));
  }

  polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Coeff> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return polynomial(std::move(v));
  }

  /// Horner evaluation in any ring the coefficients convert into.
  template <class T>
  T evaluate(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  long double evaluate_ld(long double x) const {
    long double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_long_double(*it);
    return acc;
  }

  /// Ascending-degree text, e.g. "1 - 2*z + z^2". The variable name is configurable.
  std::string to_string(const std::string& var = "z") const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      Coeff mag = c_[i] < 0 ? Coeff(-c_[i]) : c_[i];
      if (first) {
        if (c_[i] < 0) out += "-";
      } else {
        out += c_[i] < 0 ? " - " : " + ";
      }
      first = false;
      bool unit = (mag == 1);
      if (i == 0) {
        out += mag.get_str();
        continue;
      }
      if (!unit) out += mag.get_str() + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const polynomial& p) { return os << p.to_string(); }

 private:
  static long double to_long_double(const integer& x) {
    if (mpz_sizeinbase(x.get_mpz_t(), 2) < 60) return static_cast<long double>(x.get_si());
    long e = 0;
    double m = mpz_get_d_2exp(&e, x.get_mpz_t());
    return std::ldexp(static_cast<long double>(m), static_cast<int>(e));
  }
  static long double to_long_double(const rational& q) {
    return to_long_double(integer(q.get_num())) / to_long_double(integer(q.get_den()));
  }

  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

using int_poly = polynomial<integer>;
using rat_poly = polynomial<rational>;

inline rat_poly to_rational(const int_poly& p) {
  std::vector<rational> v;
  v.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) v.emplace_back(c);
  return rat_poly(std::move(v));
}

/// Falling factorial x(x-1)...(x-i+1) as a polynomial in x.
inline int_poly falling_factorial(std::size_t i) {
  int_poly r(1);
  for (std::size_t j = 0; j < i; ++j) r *= int_poly{integer(-static_cast<long>(j)), integer(1)};
  return r;
}

}  // namespace compacta

#endif  // COMPACTA_POLYNOMIAL_HPP
