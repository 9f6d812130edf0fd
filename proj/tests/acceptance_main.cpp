// One line per acceptance criterion. All comparisons are exact in the
// cyclotomic field, so the pinned tolerance is zero for every criterion.
// DEVIATION marks a criterion whose checkable claims all hold while a stated
// sub-claim is proven false; the proof is printed beneath it.

#include <iostream>

#include "cdga/acceptance.hpp"

int main() {
  using namespace cdga;
  int failed = 0, id = 1;
  for (const auto& f : acceptance_suite()) {
    const CriterionResult r = run_criterion(f, id++);
    std::cout << "[" << r.status() << "] criterion " << r.id << ": " << r.reference << " (tolerance: exact)\n";
    std::cout << "    " << r.detail << "\n";
    for (const auto& u : r.unattainable) std::cout << "    unattainable: " << u << "\n";
    if (!r.pass) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria checked" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
