#ifndef COMPACTA_SELFTEST_HPP
#define COMPACTA_SELFTEST_HPP

// Cross-checks between independent routes to the same numbers: exhaustive
// generation, spine products, the two-parameter tables, operator streams and
// closed forms. Kept small enough to run in a couple of seconds.

#include <cstdint>
#include <string>
#include <vector>

#include "compacta/asymptotics.hpp"
#include "compacta/dfinite.hpp"
#include "compacta/enumerate.hpp"
#include "compacta/operator.hpp"
#include "compacta/recurrences.hpp"

namespace compacta {

struct check_result {
  std::string name;
  bool passed = true;
  std::string detail;
};

namespace detail {

inline std::string mismatch(const std::string& what, std::uint32_t n, const integer& a, const integer& b) {
  return what + " at n=" + std::to_string(n) + ": " + a.get_str() + " vs " + b.get_str();
}

}  // namespace detail

inline std::vector<check_result> run_selftest(std::uint32_t brute_n = 5, unsigned threads = 1) {
  std::vector<check_result> out;
  const auto gamma = build_table(table_kind::gamma, 12);
  const auto delta = build_table(table_kind::delta, 12);

  {
    check_result c{"relaxed: table vs spine product vs generation", true, {}};
    for (std::uint32_t n = 0; n <= 9 && c.passed; ++n) {
      integer sp = count_relaxed_spine_product(n, std::nullopt, 0, threads);
      if (sp != delta.count(n)) c = {c.name, false, detail::mismatch("spine product", n, sp, delta.count(n))};
      if (c.passed && n <= brute_n) {
        integer g(static_cast<unsigned long>(count_by_generation({n, std::nullopt, family::relaxed}, default_budget(), threads)));
        if (g != delta.count(n)) c = {c.name, false, detail::mismatch("generation", n, g, delta.count(n))};
      }
    }
    out.push_back(c);
  }
  {
    check_result c{"compacted: table vs generation", true, {}};
    for (std::uint32_t n = 0; n <= brute_n && c.passed; ++n) {
      integer g(static_cast<unsigned long>(count_by_generation({n, std::nullopt, family::compacted}, default_budget(), threads)));
      if (g != gamma.count(n)) c = {c.name, false, detail::mismatch("generation", n, g, gamma.count(n))};
    }
    out.push_back(c);
  }
  {
    check_result c{"relaxed with pool: delta_{n,p} vs spine product", true, {}};
    for (std::uint32_t n = 0; n <= 5 && c.passed; ++n)
      for (std::uint32_t p = 0; p <= 4 && c.passed; ++p) {
        integer sp = count_relaxed_spine_product(n, std::nullopt, p);
        if (sp != delta.at(n, p))
          c = {c.name, false, detail::mismatch("p=" + std::to_string(p), n, sp, delta.at(n, p))};
      }
    out.push_back(c);
  }
  {
    check_result c{"bounded height: stream vs generation", true, {}};
    for (std::uint32_t k = 0; k <= 3 && c.passed; ++k)
      for (family f : {family::relaxed, family::compacted}) {
        auto s = bounded_height_sequence(k, f, brute_n);
        for (std::uint32_t n = 0; n <= brute_n && c.passed; ++n) {
          integer g(static_cast<unsigned long>(count_by_generation({n, k, f}, default_budget(), threads)));
          if (g != s[n])
            c = {c.name, false, detail::mismatch(std::string(to_string(f)) + " k=" + std::to_string(k), n, s[n], g)};
        }
      }
    out.push_back(c);
  }
  {
    check_result c{"bounded height: stream vs closed forms", true, {}};
    const std::pair<std::uint32_t, family> cases[] = {
        {0, family::relaxed}, {1, family::relaxed}, {2, family::relaxed}, {0, family::compacted}, {1, family::compacted}};
    for (auto [k, f] : cases) {
      auto s = bounded_height_sequence(k, f, 30);
      for (std::uint32_t n = 0; n <= 30 && c.passed; ++n) {
        integer cf = *closed_form_oracle(k, f, n);
        if (cf != s[n])
          c = {c.name, false, detail::mismatch(std::string(to_string(f)) + " k=" + std::to_string(k), n, s[n], cf)};
      }
    }
    out.push_back(c);
  }
  {
    auto rep = coeff_recurrences_check(12);
    out.push_back({"operators: coefficient recurrences up to k=12", rep.ok,
                   rep.ok ? std::string() : std::string(1, rep.op) + " k=" + std::to_string(rep.k) +
                                                 " i=" + std::to_string(rep.i) + ": " + rep.what});
  }
  {
    check_result c{"operators: Chebyshev identities up to k=12", true, {}};
    for (std::uint32_t k = 1; k <= 12 && c.passed; ++k) {
      const auto L = build_L(k);
      const auto M = build_M(k);
      if (ell(L, k) != leading_closed_form(k)) c = {c.name, false, "leading closed form, k=" + std::to_string(k)};
      else if (!transformed_leading_matches(L, k)) c = {c.name, false, "U_{k+2} identity, k=" + std::to_string(k)};
      else if (!h_formula_matches(M, k)) c = {c.name, false, "h-formula, k=" + std::to_string(k)};
    }
    out.push_back(c);
  }
  {
    check_result c{"singularity: delta1 closed form vs operator coefficients", true, {}};
    for (std::uint32_t k = 1; k <= 12 && c.passed; ++k)
      for (family f : {family::relaxed, family::compacted}) {
        auto sd = singularity(k, f);
        if (std::fabs(sd.delta1 - sd.delta1_numeric) > 1e-9L || sd.residual > 1e-12L)
          c = {c.name, false, std::string(to_string(f)) + " k=" + std::to_string(k)};
      }
    out.push_back(c);
  }
  return out;
}

}  // namespace compacta

#endif  // COMPACTA_SELFTEST_HPP
