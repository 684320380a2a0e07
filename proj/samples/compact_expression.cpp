// Value-numbers (x^2 - y^2)(x^2 + y^2) and prints the triple table, the
// compacted DAG, and the tree recovered from it.

#include <iostream>

#include "compacta/compaction.hpp"

int main(int argc, char** argv) {
  const char* text = argc > 1 ? argv[1] : "(* (- (* x x) (* y y)) (+ (* x x) (* y y)))";
  const auto tree = compacta::parse_tree(text);
  const auto res = compacta::uid_compact(tree);

  std::cout << "input:     " << compacta::to_string(tree) << "  (" << tree.size() << " internal nodes)\n\n";
  res.table.write_csv(std::cout);
  std::cout << "\ncompacted: " << compacta::to_string(res.dag) << "  (" << res.dag.size() << " nodes)\n";
  std::cout << "unfolded:  " << compacta::to_string(compacta::unfold(res.dag)) << "  (labels are not kept)\n";
}
