// Random subset search for n = 4, complete conflict freedom (ell = 2), GC = 2.
#include <iostream>

#include "dnacodes/search.hpp"

int main() {
  using namespace dnacodes;
  SearchConfig cfg;
  cfg.trials = 20000;
  cfg.master_seed = 7;
  cfg.subset_law = SubsetLaw::parse("uniform:8");
  const auto table = random_construction({4, 2, 2}, cfg);
  std::cout << "seed set size " << table.seed_set_size << '\n';
  for (const auto& e : table.entries) {
    std::cout << "d_H >= " << e.distance << ": " << e.size << " codewords";
    if (e.trial) std::cout << " (trial " << *e.trial << ")";
    std::cout << '\n';
  }
  const auto best = table.at_distance(3);
  for (const auto& w : best.code) std::cout << "  " << w << '\n';
}
