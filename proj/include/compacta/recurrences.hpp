#ifndef COMPACTA_RECURRENCES_HPP
#define COMPACTA_RECURRENCES_HPP

// Two-parameter tables gamma_{n,p} (compacted) and delta_{n,p} (relaxed):
// the number of trees of size n when p extra subtrees are available as
// pointer targets besides the leaf.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "compacta/bigint.hpp"
#include "compacta/tree.hpp"

namespace compacta {

enum class table_kind : std::uint8_t { gamma, delta };

/// Triangular storage: entry (n, p) exists for n + p <= nmax, which is all
/// that entry (nmax, 0) depends on.
class count_table {
 public:
  count_table(table_kind kind, std::uint32_t nmax) : kind_(kind), nmax_(nmax), rows_(nmax + 1) {
    for (std::uint32_t n = 0; n <= nmax; ++n) rows_[n].resize(nmax - n + 1);
    for (std::uint32_t p = 0; p <= nmax; ++p) rows_[0][p] = p + 1;
    if (nmax >= 1) {
      for (std::uint32_t p = 0; p < nmax; ++p) {
        integer q = p;
        // (p+1)^2 pointer pairs; for compacted trees the p pairs that rebuild
        // a tree already in the pool are excluded.
        rows_[1][p] = kind == table_kind::gamma ? integer(q * q + q + 1) : integer((q + 1) * (q + 1));
      }
    }
    for (std::uint32_t n = 1; n + 1 <= nmax; ++n) {
      for (std::uint32_t p = 0; n + 1 + p <= nmax; ++p) {
        integer& out = rows_[n + 1][p];
        out = 0;
        for (std::uint32_t i = 0; i <= n; ++i)
          mpz_addmul(out.get_mpz_t(), rows_[i][p].get_mpz_t(), rows_[n - i][p + i].get_mpz_t());
      }
    }
  }

  table_kind kind() const noexcept { return kind_; }
  std::uint32_t nmax() const noexcept { return nmax_; }

  const integer& at(std::uint32_t n, std::uint32_t p) const {
    if (n > nmax_ || p > nmax_ - n)
      throw std::out_of_range("count_table: entry (" + std::to_string(n) + "," + std::to_string(p) +
                              ") outside n+p <= " + std::to_string(nmax_));
    return rows_[n][p];
  }

  /// c_n or r_n, the p = 0 column.
  const integer& count(std::uint32_t n) const { return at(n, 0); }

  void write_csv(std::ostream& os) const {
    os << "n,p,value\n";
    for (std::uint32_t n = 0; n <= nmax_; ++n)
      for (std::uint32_t p = 0; p + n <= nmax_; ++p) os << n << ',' << p << ',' << rows_[n][p] << '\n';
  }

 private:
  table_kind kind_;
  std::uint32_t nmax_;
  std::vector<std::vector<integer>> rows_;
};

inline count_table build_table(table_kind kind, std::uint32_t nmax) { return count_table(kind, nmax); }

inline integer compacted_count(std::uint32_t n) { return count_table(table_kind::gamma, n).count(n); }

inline integer relaxed_count(std::uint32_t n) { return count_table(table_kind::delta, n).count(n); }

inline integer unrestricted_count(family f, std::uint32_t n) {
  return f == family::compacted ? compacted_count(n) : relaxed_count(n);
}

}  // namespace compacta

#endif  // COMPACTA_RECURRENCES_HPP
