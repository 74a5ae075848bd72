// Encode the [7,4,3] Hamming code with the block pair (ATA, CGC) and print
// the resulting DNA code together with the measured constraints.
#include <iostream>

#include "dnacodes/factory.hpp"

int main() {
  using namespace dnacodes;
  const auto pair = BlockPair::parse("ATA", "CGC");
  const auto build = build_dna_code(hamming_7_4(), pair, BlockRole::Xc);
  for (const auto& w : build.code.words()) std::cout << w << '\n';
  const auto& m = build.report.measured;
  std::cout << "length " << m.length << ", size " << m.size << ", min distance " << m.min_hamming
            << ", conflict-free level " << m.conflict_free_level << '\n';
  for (const auto& c : build.report.checks) {
    std::cout << (c.gating ? "  claim  " : "  note   ") << c.name << ": predicted " << c.predicted << ", measured "
              << c.measured << (c.pass ? "" : "  (differs)") << '\n';
  }
  return build.report.pass() ? 0 : 1;
}
