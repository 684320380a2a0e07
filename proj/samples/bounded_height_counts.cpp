// Counts of relaxed and compacted trees with right height at most k, from
// the differential operators, next to the unrestricted counts.

#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "compacta/dfinite.hpp"
#include "compacta/recurrences.hpp"

int main(int argc, char** argv) {
  const unsigned upto = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 10;
  const unsigned kmax = 4;
  using compacta::family;

  for (family f : {family::relaxed, family::compacted}) {
    std::cout << compacta::to_string(f) << "\n";
    const auto table = compacta::build_table(
        f == family::relaxed ? compacta::table_kind::delta : compacta::table_kind::gamma, upto);
    for (unsigned k = 0; k <= kmax; ++k) {
      const auto v = compacta::bounded_height_sequence(k, f, upto);
      std::cout << "  k=" << k << ":";
      for (const auto& x : v) std::cout << ' ' << x;
      std::cout << "\n";
    }
    std::cout << "  all:";
    for (unsigned n = 0; n <= upto; ++n) std::cout << ' ' << table.count(n);
    std::cout << "\n\n";
  }
}
