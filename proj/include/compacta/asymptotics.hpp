#ifndef COMPACTA_ASYMPTOTICS_HPP
#define COMPACTA_ASYMPTOTICS_HPP

// Dominant singularity, local exponents, and numerical estimates of the
// constant in count ~ const * n! * growth^n * n^exponent.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "compacta/bigint.hpp"
#include "compacta/dfinite.hpp"
#include "compacta/operator.hpp"

namespace compacta {

struct singularity_data {
  std::uint32_t k = 0;
  family kind = family::relaxed;
  long double rho = 1;
  long double growth = 1;
  long double delta1 = 1;          // closed form
  long double delta1_numeric = 1;  // ratio of operator coefficients at rho
  std::optional<rational> delta1_exact;
  long double residual = 0;  // |leading coefficient at rho|
  std::vector<long double> indicial_roots;
  long double exponent = 0;
};

inline long double rho_k(std::uint32_t k) {
  const long double c = std::cos(std::numbers::pi_v<long double> / (k + 3));
  return 1.0L / (4.0L * c * c);
}

/// k/2 + 1 - 1/(k+3) - (1/4 - 1/(k+3)) / cos^2(pi/(k+3)).
inline long double compacted_delta1(std::uint32_t k) {
  const long double c = std::cos(std::numbers::pi_v<long double> / (k + 3));
  const long double inv = 1.0L / (k + 3);
  return k / 2.0L + 1.0L - inv - (0.25L - inv) / (c * c);
}

/// Relaxed delta1 = k/2 holds iff 2 ell_{k,k-1} = k ell'_{k,k} exactly.
inline bool relaxed_delta1_identity(std::uint32_t k) {
  const diff_operator L = build_L(k);
  return ell(L, static_cast<long>(k) - 1) * integer(2) == ell(L, k).derivative() * integer(k);
}

inline singularity_data singularity(std::uint32_t k, family f) {
  singularity_data s;
  s.k = k;
  s.kind = f;
  if (k == 0) {
    // 1/(1-z) for both families.
    s.rho = 1;
    s.growth = 1;
    s.delta1 = s.delta1_numeric = 1;
    s.delta1_exact = rational(1);
    s.indicial_roots = {-1.0L};
    s.exponent = 0;
    return s;
  }
  s.rho = rho_k(k);
  s.growth = 1.0L / s.rho;
  if (f == family::relaxed) {
    const diff_operator L = build_L(k);
    const int_poly lead = ell(L, k);
    s.delta1_exact = rational(k, 2);
    s.delta1_exact->canonicalize();
    s.delta1 = k / 2.0L;
    s.delta1_numeric = ell(L, static_cast<long>(k) - 1).evaluate_ld(s.rho) / lead.derivative().evaluate_ld(s.rho);
    s.residual = std::fabs(lead.evaluate_ld(s.rho));
    for (std::uint32_t i = 0; i + 2 <= k; ++i) s.indicial_roots.push_back(i);
    s.indicial_roots.push_back(k / 2.0L - 1.0L);
    s.exponent = s.delta1 - k;
  } else {
    const diff_operator M = build_M(k);
    const int_poly lead = em(M, k);
    s.delta1 = compacted_delta1(k);
    s.delta1_numeric = em(M, static_cast<long>(k) - 1).evaluate_ld(s.rho) / lead.derivative().evaluate_ld(s.rho);
    s.residual = std::fabs(lead.evaluate_ld(s.rho));
    for (std::uint32_t i = 0; i < k; ++i) s.indicial_roots.push_back(i);
    s.indicial_roots.push_back(k - s.delta1);
    s.exponent = s.delta1 - k - 1;
  }
  return s;
}

/// alpha_k - beta_k: exponent of n in the fraction of relaxed trees that are compacted.
inline long double proportion_exponent(std::uint32_t k) {
  const long double c = std::cos(std::numbers::pi_v<long double> / (k + 3));
  const long double inv = 1.0L / (k + 3);
  return -inv - (0.25L - inv) / (c * c);
}

struct table1_row {
  std::uint32_t k;
  long double r, alpha, beta;
  double r_ref, alpha_ref, beta_ref;
  bool pass;
};

/// Growth, compacted exponent and relaxed exponent for k = 1..7 against
/// the published three-decimal values.
inline std::vector<table1_row> table1(long double tol = 5e-4L) {
  static constexpr double r_ref[] = {2.000, 2.618, 3.000, 3.246, 3.414, 3.532, 3.618};
  static constexpr double a_ref[] = {-0.750, -1.276, -1.778, -2.275, -2.772, -3.268, -3.766};
  static constexpr double b_ref[] = {-0.5, -1.0, -1.5, -2.0, -2.5, -3.0, -3.5};
  std::vector<table1_row> rows;
  for (std::uint32_t k = 1; k <= 7; ++k) {
    auto c = singularity(k, family::compacted);
    auto r = singularity(k, family::relaxed);
    table1_row row{k, c.growth, c.exponent, r.exponent, r_ref[k - 1], a_ref[k - 1], b_ref[k - 1], false};
    row.pass = std::fabs(row.r - row.r_ref) <= tol && std::fabs(row.alpha - row.alpha_ref) <= tol &&
               std::fabs(row.beta - row.beta_ref) <= tol;
    rows.push_back(row);
  }
  return rows;
}

/// log(count / (n! growth^n n^exponent)), from the exact count.
inline long double log_normalized(const integer& count, std::uint32_t n, long double growth, long double exponent) {
  const long double ln = n > 0 ? std::log(static_cast<long double>(n)) : 0.0L;
  return log_abs(count) - std::lgamma(static_cast<long double>(n) + 1.0L) - n * std::log(growth) - exponent * ln;
}

/// Polynomial extrapolation to h = 0 of values y_i sampled at h_i (Neville).
inline long double extrapolate_to_zero(const std::vector<long double>& h, std::vector<long double> y) {
  const std::size_t m = y.size();
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i) {
      y[i] = (h[i - level] * y[i] - h[i] * y[i - 1]) / (h[i - level] - h[i]);
      if (i == level) break;
    }
  return y[m - 1];
}

struct constant_fit {
  long double estimate = 0;
  long double previous = 0;  // same extrapolation one rung lower
  bool converged = true;
  std::vector<std::uint32_t> ladder_n;  // ascending
  std::vector<long double> ladder_u;
  std::string warning;
};

/// u_n on the ladder n_max/2^j (j = 0..rungs-1), then Richardson
/// extrapolation in 1/n of the given order using the largest order+1 rungs.
/// `counts` must hold the exact counts for n = 0..n_max.
inline constant_fit fit_constant(const std::vector<integer>& counts, long double growth, long double exponent,
                                 unsigned order = 3, unsigned rungs = 5) {
  constant_fit fit;
  if (counts.empty()) throw std::invalid_argument("fit_constant: no counts");
  const auto n_max = static_cast<std::uint32_t>(counts.size() - 1);
  for (unsigned j = rungs; j-- > 0;) {
    std::uint32_t n = n_max >> j;
    if (n == 0) continue;
    if (!fit.ladder_n.empty() && fit.ladder_n.back() == n) continue;
    fit.ladder_n.push_back(n);
    fit.ladder_u.push_back(std::exp(log_normalized(counts[n], n, growth, exponent)));
  }
  auto extrapolate = [&](std::size_t last) {
    const std::size_t count = std::min<std::size_t>(order + 1, last + 1);
    std::vector<long double> h, y;
    for (std::size_t i = last + 1 - count; i <= last; ++i) {
      h.push_back(1.0L / fit.ladder_n[i]);
      y.push_back(fit.ladder_u[i]);
    }
    return extrapolate_to_zero(h, y);
  };
  const std::size_t last = fit.ladder_n.size() - 1;
  fit.estimate = extrapolate(last);
  fit.previous = last > 0 ? extrapolate(last - 1) : fit.estimate;
  const long double rel = std::fabs(fit.estimate - fit.previous) / std::max(std::fabs(fit.estimate), 1e-300L);
  if (rel > 1e-3L) {
    fit.converged = false;
    fit.warning = "extrapolants differ by " + std::to_string(static_cast<double>(rel)) + " relative";
  }
  return fit;
}

inline constant_fit fit_constant(std::uint32_t k, family f, std::uint32_t n_max, unsigned order = 3) {
  const auto s = singularity(k, f);
  return fit_constant(bounded_height_sequence(k, f, n_max), s.growth, s.exponent, order);
}

/// Least-squares slope of log(count/(n! growth^n)) against log n over
/// n in [lo, hi]; estimates the exponent of n.
inline long double fit_exponent(const std::vector<integer>& counts, long double growth, std::uint32_t lo,
                                std::uint32_t hi) {
  long double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t m = 0;
  for (std::uint32_t n = lo; n <= hi && n < counts.size(); ++n) {
    const long double x = std::log(static_cast<long double>(n));
    const long double y = log_normalized(counts[n], n, growth, 0.0L);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 2) throw std::invalid_argument("fit_exponent: need at least two points");
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

/// The constant for compacted k = 1: 2 e^{1/4} / Gamma(1/4).
inline long double compacted_k1_constant() { return 2.0L * std::exp(0.25L) / std::tgamma(0.25L); }

/// The constant for relaxed k = 1: (2n-1)!! = n! 2^n binom(2n,n)/4^n ~ n! 2^n / sqrt(pi n).
inline long double relaxed_k1_constant() { return 1.0L / std::sqrt(std::numbers::pi_v<long double>); }

}  // namespace compacta

#endif  // COMPACTA_ASYMPTOTICS_HPP
