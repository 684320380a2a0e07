#ifndef COMPACTA_OPERATOR_HPP
#define COMPACTA_OPERATOR_HPP

// Linear differential operators sum_i p_i(z) D^i with integer polynomial
// coefficients, the operator families L_k and M_k, and Chebyshev identities.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compacta/bigint.hpp"
#include "compacta/polynomial.hpp"
#include "compacta/tree.hpp"

namespace compacta {

class diff_operator {
 public:
  diff_operator() = default;
  /// Multiplication by a polynomial (order 0).
  diff_operator(int_poly p) { // NOLINT(google-explicit-constructor)
    if (!p.is_zero()) c_.push_back(std::move(p));
  }
  explicit diff_operator(std::vector<int_poly> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static diff_operator D(std::size_t power = 1) {
    std::vector<int_poly> v(power + 1);
    v[power] = int_poly(1);
    return diff_operator(std::move(v));
  }

  bool is_zero() const noexcept { return c_.empty(); }
  /// Highest i with a nonzero coefficient; -1 for the zero operator.
  long order() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<int_poly>& coefficients() const noexcept { return c_; }
  /// Coefficient of D^i (zero outside the stored range, including i < 0).
  int_poly operator[](long i) const { return i >= 0 && i < static_cast<long>(c_.size()) ? c_[i] : int_poly(); }

  /// Largest degree among the coefficients.
  long max_degree() const {
    long d = -1;
    for (const auto& p : c_) d = std::max(d, p.degree());
    return d;
  }

  diff_operator& operator+=(const diff_operator& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
  }
  diff_operator& operator-=(const diff_operator& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
  }

  friend diff_operator operator+(diff_operator a, const diff_operator& b) { return a += b; }
  friend diff_operator operator-(diff_operator a, const diff_operator& b) { return a -= b; }
  friend diff_operator operator-(diff_operator a) {
    for (auto& p : a.c_) p = -p;
    return a;
  }

  /// Composition (a*b)(f) = a(b(f)), brought back to canonical form with
  /// D^i b = sum_t binom(i,t) b^(t) D^(i-t).
  friend diff_operator operator*(const diff_operator& a, const diff_operator& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<int_poly> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      int_poly deriv = b.c_[j];
      for (std::size_t t = 0; t < a.c_.size() && !deriv.is_zero(); ++t) {
        for (std::size_t i = t; i < a.c_.size(); ++i) {
          if (a.c_[i].is_zero()) continue;
          out[i - t + j] += a.c_[i] * deriv * binomial(i, t);
        }
        deriv = deriv.derivative();
      }
    }
    return diff_operator(std::move(out));
  }

  friend bool operator==(const diff_operator&, const diff_operator&) = default;

  /// Drops the first `s` coefficients: if p_0 .. p_{s-1} vanish, L = L' D^s.
  diff_operator drop_low(std::size_t s) const {
    if (s >= c_.size()) return {};
    return diff_operator(std::vector<int_poly>(c_.begin() + static_cast<long>(s), c_.end()));
  }

  /// "(poly)*D^i" terms joined by " + ", highest order first.
  std::string to_plain() const {
    if (is_zero()) return "0";
    std::string out;
    for (long i = order(); i >= 0; --i) {
      if (c_[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + c_[i].to_string() + ")*D^" + std::to_string(i);
    }
    return out;
  }

  std::string to_latex() const {
    if (is_zero()) return "0";
    std::string out;
    for (long i = order(); i >= 0; --i) {
      if (c_[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "\\left(" + latex_poly(c_[i]) + "\\right)";
      if (i == 1) out += " D";
      else if (i > 1) out += " D^{" + std::to_string(i) + "}";
    }
    return out;
  }

  static std::string latex_poly(const int_poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& cs = p.coefficients();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (cs[i] == 0) continue;
      integer mag = abs(cs[i]);
      if (out.empty()) {
        if (cs[i] < 0) out += "-";
      } else {
        out += cs[i] < 0 ? " - " : " + ";
      }
      if (i == 0 || mag != 1) out += mag.get_str();
      if (i >= 1) out += "z";
      if (i > 1) out += "^{" + std::to_string(i) + "}";
    }
    return out;
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<int_poly> c_;
};

/// True if a = c*b for some nonzero rational c.
inline bool equal_up_to_scalar(const diff_operator& a, const diff_operator& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.order() != b.order()) return false;
  const int_poly& pa = a.coefficients().back();
  const int_poly& pb = b.coefficients().back();
  if (pa.degree() != pb.degree()) return false;
  const integer alpha = pa.leading();
  const integer beta = pb.leading();
  for (long i = 0; i <= a.order(); ++i)
    if (a[i] * beta != b[i] * alpha) return false;
  return true;
}

inline const int_poly& z_poly() {
  static const int_poly z = int_poly::z();
  return z;
}

/// Annihilator family for relaxed trees of right height at most k.
/// L_0 = 1 - z is the base of the recursion, not an annihilator of R_0.
inline diff_operator build_L(std::uint32_t k) {
  const diff_operator L0(int_poly{1, -1});
  const diff_operator L1(std::vector<int_poly>{int_poly(-1), int_poly{1, -2}});
  if (k == 0) return L0;
  const diff_operator D = diff_operator::D();
  const diff_operator D2z = diff_operator::D(2) * diff_operator(z_poly());
  diff_operator prev = L0, cur = L1;
  for (std::uint32_t j = 2; j <= k; ++j) {
    diff_operator next = cur * D - prev * D2z;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Annihilator family for compacted trees of right height at most k.
inline diff_operator build_M(std::uint32_t k) {
  const diff_operator M0(std::vector<int_poly>{int_poly(-1), int_poly{1, -1}});
  const diff_operator M1(std::vector<int_poly>{int_poly(), int_poly{-3, 1}, int_poly{1, -2}});
  if (k == 0) return M0;
  const diff_operator D = diff_operator::D();
  const diff_operator z(z_poly());
  const diff_operator step = diff_operator::D(2) * z - z * D;
  diff_operator prev = M0, cur = M1;
  for (std::uint32_t j = 2; j <= k; ++j) {
    diff_operator next = cur * D - prev * step;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// The annihilator used for streaming: L_k for relaxed k >= 1, M_k for
/// compacted; relaxed k = 0 uses M_0 = (1-z)D - 1, whose solution 1/(1-z)
/// is R_0.
inline diff_operator annihilator(family f, std::uint32_t k) {
  if (f == family::relaxed && k >= 1) return build_L(k);
  return build_M(k);
}

/// ell_{k,i}: coefficient of D^i in L_k.
inline int_poly ell(const diff_operator& Lk, long i) { return Lk[i]; }
/// m_{k,i}: coefficient of D^{i+1} in M_k.
inline int_poly em(const diff_operator& Mk, long i) { return Mk[i + 1]; }

struct recurrence_report {
  bool ok = true;
  char op = 'L';  // 'L' or 'M'
  std::uint32_t k = 0;
  long i = 0;
  std::string what;
};

namespace detail {

inline int_poly at(const std::vector<int_poly>& v, long i) {
  return i >= 0 && i < static_cast<long>(v.size()) ? v[static_cast<std::size_t>(i)] : int_poly();
}

}  // namespace detail

/// Recomputes the coefficient polynomials of L_j and M_j (j <= k) from their
/// per-coefficient recurrences, seeded only by L_0, L_1, M_0, M_1, and
/// compares with the composed operators. Also checks ell_{j,0} = 0,
/// m_{j,-1} = 0, m_{j,0} in closed form and m_{j,j} = ell_{j,j} for j >= 2.
inline recurrence_report coeff_recurrences_check(std::uint32_t k) {
  const int_poly z = z_poly();
  // ell[j][i] for i = 0..j ; mm[j][i+1] holds m_{j,i} for i = -1..j.
  std::vector<std::vector<int_poly>> ell_rec(k + 1), m_rec(k + 1);
  ell_rec[0] = build_L(0).coefficients();
  if (k >= 1) ell_rec[1] = build_L(1).coefficients();
  m_rec[0] = build_M(0).coefficients();
  if (k >= 1) m_rec[1] = build_M(1).coefficients();
  for (std::uint32_t j = 2; j <= k; ++j) {
    ell_rec[j].resize(j + 1);
    for (long i = 0; i <= static_cast<long>(j); ++i) {
      ell_rec[j][i] = detail::at(ell_rec[j - 1], i - 1) -
                      detail::at(ell_rec[j - 2], i - 1) * integer(i + 1) -
                      z * detail::at(ell_rec[j - 2], i - 2);
    }
    m_rec[j].resize(j + 2);
    for (long i = -1; i <= static_cast<long>(j); ++i) {
      // Index shift: m_{j,i} lives at position i+1.
      auto m = [&](std::uint32_t jj, long ii) { return detail::at(m_rec[jj], ii + 1); };
      m_rec[j][i + 1] = m(j - 1, i - 1) + m(j - 2, i) * integer(i + 1) +
                        m(j - 2, i - 1) * int_poly{integer(-i - 2), integer(1)} - z * m(j - 2, i - 2);
    }
  }

  for (std::uint32_t j = 0; j <= k; ++j) {
    const diff_operator Lj = build_L(j);
    const diff_operator Mj = build_M(j);
    for (long i = 0; i <= static_cast<long>(j); ++i)
      if (detail::at(ell_rec[j], i) != Lj[i]) return {false, 'L', j, i, "ell recurrence disagrees with composition"};
    if (Lj.order() != static_cast<long>(j) && j >= 1) return {false, 'L', j, static_cast<long>(j), "order of L_k is not k"};
    for (long i = -1; i <= static_cast<long>(j); ++i)
      if (detail::at(m_rec[j], i + 1) != Mj[i + 1]) return {false, 'M', j, i, "m recurrence disagrees with composition"};
    if (j >= 1 && Mj.order() != static_cast<long>(j) + 1) return {false, 'M', j, static_cast<long>(j), "order of M_k is not k+1"};
    if (j < 2) continue;
    if (!Lj[0].is_zero()) return {false, 'L', j, 0, "ell_{k,0} is not zero"};
    if (!Mj[0].is_zero()) return {false, 'M', j, -1, "m_{k,-1} is not zero"};
    const int_poly m0 = j % 2 == 0 ? int_poly{3, -2} : int_poly{-3, 1};
    if (Mj[1] != m0) return {false, 'M', j, 0, "m_{k,0} differs from its closed form"};
    if (em(Mj, j) != ell(Lj, j)) return {false, 'M', j, static_cast<long>(j), "m_{k,k} differs from ell_{k,k}"};
  }
  return {};
}

inline int_poly chebyshev_T(std::uint32_t n) {
  int_poly a(1), b{0, 1};
  if (n == 0) return a;
  const int_poly two_x{0, 2};
  for (std::uint32_t i = 1; i < n; ++i) {
    int_poly c = two_x * b - a;
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

inline int_poly chebyshev_U(std::uint32_t n) {
  int_poly a(1), b{0, 2};
  if (n == 0) return a;
  const int_poly two_x{0, 2};
  for (std::uint32_t i = 1; i < n; ++i) {
    int_poly c = two_x * b - a;
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

/// sum_n (-1)^n binom(k+2-n, n) z^n, the expected ell_{k,k}.
inline int_poly leading_closed_form(std::uint32_t k) {
  std::vector<integer> c((k + 2) / 2 + 1);
  for (std::uint32_t n = 0; 2 * n <= k + 2; ++n) {
    integer b = binomial(k + 2 - n, n);
    c[n] = n % 2 ? integer(-b) : b;
  }
  return int_poly(std::move(c));
}

/// (2x)^K p(1/(4x^2)) multiplied by x^s, with the smallest s >= 0 that makes
/// the result a polynomial in x. Returns the polynomial and s.
inline std::pair<rat_poly, std::size_t> half_inverse_transform(const int_poly& p, std::uint32_t K) {
  const long deg = p.degree();
  std::size_t s = deg >= 0 && 2 * deg > static_cast<long>(K) ? static_cast<std::size_t>(2 * deg - K) : 0;
  rat_poly out;
  for (long n = 0; n <= deg; ++n) {
    if (p[static_cast<std::size_t>(n)] == 0) continue;
    long e = static_cast<long>(K) - 2 * n;  // power of both 2 and x
    rational c(p[static_cast<std::size_t>(n)]);
    if (e >= 0) c *= rational(pow(integer(2), static_cast<unsigned long>(e)));
    else c /= rational(pow(integer(2), static_cast<unsigned long>(-e)));
    out += rat_poly::monomial(static_cast<std::size_t>(e + static_cast<long>(s)), c);
  }
  return {out, s};
}

/// (2x)^{k+2} ell_{k,k}(1/(4x^2)) == U_{k+2}(x).
inline bool transformed_leading_matches(const diff_operator& Lk, std::uint32_t k) {
  auto [lhs, s] = half_inverse_transform(ell(Lk, k), k + 2);
  return lhs == to_rational(chebyshev_U(k + 2)).shift(s);
}

/// With K = k+2:
/// 2(x^2-1) (2x)^K m_{k,k-1}(1/(4x^2)) ==
///   (K-3 - 2(K^2+K-2) x^2) T_K(x) + (1 + 2(K-1) x^2) U_K(x).
inline bool h_formula_matches(const diff_operator& Mk, std::uint32_t k) {
  const std::uint32_t K = k + 2;
  auto [t, s] = half_inverse_transform(em(Mk, static_cast<long>(k) - 1), K);
  rat_poly lhs = to_rational(int_poly{-2, 0, 2}) * t;
  const long Kl = K;
  int_poly a{integer(Kl - 3), 0, integer(-2 * (Kl * Kl + Kl - 2))};
  int_poly b{1, 0, integer(2 * (Kl - 1))};
  int_poly rhs = a * chebyshev_T(K) + b * chebyshev_U(K);
  return lhs == to_rational(rhs).shift(s);
}

/// Number of leading identically-zero coefficients p_0, p_1, ...; the
/// reduced operator acts on the shift-th derivative of the solution.
struct reduced_operator {
  diff_operator op;
  std::size_t shift = 0;
};

inline reduced_operator reduce_order(const diff_operator& L) {
  std::size_t s = 0;
  while (static_cast<long>(s) < L.order() && L[static_cast<long>(s)].is_zero()) ++s;
  return {L.drop_low(s), s};
}

}  // namespace compacta

#endif  // COMPACTA_OPERATOR_HPP
