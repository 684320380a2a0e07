#ifndef COMPACTA_DFINITE_HPP
#define COMPACTA_DFINITE_HPP

// From an annihilating operator to a P-recurrence on series coefficients,
// seeding, exact streaming, and closed-form oracles for small k.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compacta/bigint.hpp"
#include "compacta/enumerate.hpp"
#include "compacta/error.hpp"
#include "compacta/operator.hpp"
#include "compacta/polynomial.hpp"
#include "compacta/recurrences.hpp"

namespace compacta {

/// sum_{j=0}^{span} q_j(n) a_{n-j} = 0, valid for every n >= 0 when
/// a_m = 0 for m < 0.
struct coeff_recurrence {
  std::vector<int_poly> q;  // polynomials in n

  std::size_t span() const noexcept { return q.empty() ? 0 : q.size() - 1; }

  /// Left-hand side at n for the given ordinary coefficients a_0..a_n.
  rational residual(const std::vector<rational>& a, std::size_t n) const {
    rational acc = 0;
    const integer nn(static_cast<unsigned long>(n));
    for (std::size_t j = 0; j < q.size() && j <= n; ++j) {
      if (q[j].is_zero()) continue;
      acc += rational(q[j].evaluate(nn)) * a[n - j];
    }
    return acc;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (q[j].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + q[j].to_string("n") + ")*a[n-" + std::to_string(j) + "]";
    }
    return out.empty() ? "0" : out + " = 0";
  }
};

/// Coefficient extraction: for L = sum_i p_i(z) D^i of order r,
/// q_j(n) = sum_i [z^{i+j-r}] p_i(z) * (n-j)^{falling i}.
inline coeff_recurrence ode_to_recurrence(const diff_operator& L) {
  if (L.is_zero()) throw recurrence_error("ode_to_recurrence: zero operator");
  const long r = L.order();
  const long d = L.max_degree();
  coeff_recurrence rec;
  rec.q.resize(static_cast<std::size_t>(r + d + 1));
  std::vector<int_poly> ff;
  for (long i = 0; i <= r; ++i) ff.push_back(falling_factorial(static_cast<std::size_t>(i)));
  for (long j = 0; j <= r + d; ++j) {
    int_poly qj;
    for (long i = 0; i <= r; ++i) {
      long m = i + j - r;
      if (m < 0 || m > d) continue;
      const integer c = L[i][static_cast<std::size_t>(m)];
      if (c == 0) continue;
      // (n-j)^{falling i}: substitute n -> n - j.
      int_poly shifted;
      int_poly power(1);
      const int_poly n_minus_j{integer(-j), integer(1)};
      const auto& f = ff[static_cast<std::size_t>(i)];
      for (std::size_t e = 0; e < f.coefficients().size(); ++e) {
        if (e) power *= n_minus_j;
        shifted += power * f.coefficients()[e];
      }
      qj += shifted * c;
    }
    rec.q[static_cast<std::size_t>(j)] = std::move(qj);
  }
  while (rec.q.size() > 1 && rec.q.back().is_zero()) rec.q.pop_back();
  if (rec.q[0].is_zero()) throw recurrence_error("ode_to_recurrence: leading recurrence coefficient vanishes");
  return rec;
}

enum class scale : std::uint8_t { egf, ogf };

struct seeded_sequence {
  coeff_recurrence rec;
  std::vector<rational> seeds;  // a_0 .. a_{N0-1}
  compacta::scale scale = scale::egf;
};

/// Number of trees of size n with right height at most k, exactly, for use
/// as a seed: the unrestricted tables when n <= k+1 (every tree qualifies),
/// otherwise exhaustive generation.
inline integer bounded_height_count(std::uint32_t k, family f, std::uint32_t n,
                                    const integer& budget = default_budget()) {
  if (n <= k + 1) return unrestricted_count(f, n);
  try {
    return integer(static_cast<unsigned long>(count_by_generation({n, k, f}, budget)));
  } catch (const budget_exceeded& e) {
    throw seed_unavailable("no seed for n=" + std::to_string(n) + " (k=" + std::to_string(k) +
                           "): " + e.what());
  }
}

/// Seeds a_0..a_{N0-1} for the bounded-height sequence. The default N0 is the
/// operator order. Every seed beyond the order is verified against the
/// recurrence.
inline seeded_sequence seed(std::uint32_t k, family f, std::optional<std::uint32_t> N0 = std::nullopt,
                            const integer& budget = default_budget()) {
  const diff_operator L = annihilator(f, k);
  seeded_sequence seq;
  seq.rec = ode_to_recurrence(L);
  const auto order = static_cast<std::uint32_t>(L.order());
  const std::uint32_t n0 = N0.value_or(order);
  if (n0 < order)
    throw seed_unavailable("N0=" + std::to_string(n0) + " is below the operator order " + std::to_string(order));
  for (std::uint32_t n = 0; n < n0; ++n)
    seq.seeds.emplace_back(bounded_height_count(k, f, n, budget), factorial(n));
  for (auto& s : seq.seeds) s.canonicalize();
  for (std::uint32_t n = order; n < n0; ++n)
    if (seq.rec.residual(seq.seeds, n) != 0)
      throw recurrence_error("seed a_" + std::to_string(n) + " violates the recurrence");
  return seq;
}

/// Ordinary coefficients a_0..a_upto by forward unrolling over the rationals.
inline std::vector<rational> stream_rational(const seeded_sequence& seq, std::uint32_t upto) {
  std::vector<rational> a(seq.seeds.begin(), seq.seeds.begin() + std::min<std::size_t>(seq.seeds.size(), upto + 1));
  const auto& q = seq.rec.q;
  for (std::size_t n = a.size(); n <= upto; ++n) {
    const integer nn(static_cast<unsigned long>(n));
    const integer q0 = q[0].evaluate(nn);
    if (q0 == 0) throw recurrence_error("leading coefficient vanishes at n=" + std::to_string(n) + "; seed further");
    rational acc = 0;
    for (std::size_t j = 1; j < q.size() && j <= n; ++j) {
      if (q[j].is_zero()) continue;
      acc += rational(q[j].evaluate(nn)) * a[n - j];
    }
    rational an = -acc / rational(q0);
    an.canonicalize();
    a.push_back(std::move(an));
  }
  return a;
}

namespace detail {

/// n!-scaled unrolling in the integers: with b_n = n! a_n the relation
/// becomes sum_j q_j(n) n^{falling j} b_{n-j} = 0, and b_n must come out of
/// an exact division.
inline std::vector<integer> stream_egf_integers(const seeded_sequence& seq, std::uint32_t upto) {
  std::vector<integer> b;
  for (std::size_t n = 0; n < seq.seeds.size() && n <= upto; ++n) {
    rational v = seq.seeds[n] * rational(factorial(static_cast<unsigned long>(n)));
    v.canonicalize();
    if (!is_integral(v)) throw integrality_error("seed " + std::to_string(n) + " is not an integer after n! scaling");
    b.emplace_back(v.get_num());
  }
  const auto& q = seq.rec.q;
  integer acc, qj, ffj, rem;
  for (std::size_t n = b.size(); n <= upto; ++n) {
    const integer nn(static_cast<unsigned long>(n));
    const integer q0 = q[0].evaluate(nn);
    if (q0 == 0) throw recurrence_error("leading coefficient vanishes at n=" + std::to_string(n) + "; seed further");
    acc = 0;
    ffj = 1;  // n^{falling j}
    for (std::size_t j = 1; j < q.size() && j <= n; ++j) {
      ffj *= static_cast<unsigned long>(n - j + 1);
      if (q[j].is_zero()) continue;
      qj = q[j].evaluate(nn) * ffj;
      mpz_addmul(acc.get_mpz_t(), qj.get_mpz_t(), b[n - j].get_mpz_t());
    }
    acc = -acc;
    integer quot;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), acc.get_mpz_t(), q0.get_mpz_t());
    if (rem != 0)
      throw integrality_error("n!*a_n is not an integer at n=" + std::to_string(n) +
                              " (wrong seed or operator)");
    b.push_back(std::move(quot));
  }
  return b;
}

}  // namespace detail

/// Exact values for n = 0..upto: n!*a_n for egf scale, a_n for ogf scale.
/// Throws integrality_error if a reported value is not an integer.
inline std::vector<integer> stream(const seeded_sequence& seq, std::uint32_t upto) {
  if (seq.scale == scale::egf) return detail::stream_egf_integers(seq, upto);
  std::vector<integer> out;
  for (const auto& a : stream_rational(seq, upto)) {
    if (!is_integral(a)) throw integrality_error("a_" + std::to_string(out.size()) + " is not an integer");
    out.emplace_back(a.get_num());
  }
  return out;
}

/// Number of trees with right height at most k, for n = 0..upto.
inline std::vector<integer> bounded_height_sequence(std::uint32_t k, family f, std::uint32_t upto) {
  return stream(seed(k, f), upto);
}

/// (n-1)! / sqrt(5) * (phi^n - psi^n) with phi, psi = (3 +- sqrt(5))/2,
/// evaluated exactly in Z[sqrt(5)]/2.
inline integer relaxed_k2_surd(std::uint32_t n) {
  if (n == 0) return 1;
  // x = (A + B sqrt5)/2 ; starts at x = 1.
  integer A = 2, B = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    integer a2 = 3 * A + 5 * B, b2 = A + 3 * B;
    if (!mpz_divisible_2exp_p(a2.get_mpz_t(), 1) || !mpz_divisible_2exp_p(b2.get_mpz_t(), 1))
      throw std::logic_error("relaxed_k2_surd: parity");
    A = a2 / 2;
    B = b2 / 2;
  }
  // phi^n - psi^n = B sqrt5, so the division by sqrt5 leaves B.
  return factorial(n - 1) * B;
}

/// c_{1,n+1} = n! [z^n] e^{z/2} (1-2z)^{-5/4}; c_{1,0} = 1.
inline integer compacted_k1_series(std::uint32_t n) {
  if (n == 0) return 1;
  const std::uint32_t m = n - 1;
  rational sum = 0;
  rational exp_term = 1;  // [z^i] e^{z/2} = 1/(2^i i!)
  for (std::uint32_t i = 0; i <= m; ++i) {
    if (i) exp_term /= rational(2 * i);
    // [z^{m-i}] (1-2z)^{-5/4} = 2^t (5/4)^{rising t} / t!
    const std::uint32_t t = m - i;
    rational bin = 1;
    for (std::uint32_t s = 0; s < t; ++s) {
      rational f(static_cast<unsigned long>(2 * (5 + 4 * s)), static_cast<unsigned long>(4 * (s + 1)));
      f.canonicalize();
      bin *= f;
    }
    sum += exp_term * bin;
  }
  sum *= rational(factorial(m));
  sum.canonicalize();
  if (!is_integral(sum)) throw integrality_error("compacted k=1 series value is not an integer");
  return integer(sum.get_num());
}

/// Independent exact formulas where one exists: relaxed k = 0, 1, 2 and
/// compacted k = 0, 1. Nothing for the other cases.
inline std::optional<integer> closed_form_oracle(std::uint32_t k, family f, std::uint32_t n) {
  if (f == family::relaxed) {
    switch (k) {
      case 0: return factorial(n);
      case 1: return odd_double_factorial(n);
      case 2: return n == 0 ? integer(1) : integer(factorial(n - 1) * fibonacci(2 * n));
      default: return std::nullopt;
    }
  }
  switch (k) {
    case 0: return factorial(n);
    case 1: return compacted_k1_series(n);
    default: return std::nullopt;
  }
}

}  // namespace compacta

#endif  // COMPACTA_DFINITE_HPP
