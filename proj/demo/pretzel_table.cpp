// Prints the d-invariants of 15-surgery on P(-2,3,7) and the obstruction
// verdict, then the certified non-fillable interval for a few m.
#include <iostream>

#include "pretzelfill/obstruction.hpp"

int main() {
  using namespace pretzelfill;

  const PretzelParameter p(3);
  const auto torsion = torsion_coefficients(pretzel_alexander(p));
  const auto table = d_table(torsion, 15);
  for (std::size_t i = 0; i < table.size(); ++i) std::cout << "d(M_{15,3}, " << i << ") = " << table.entries()[i] << '\n';

  const auto report = check_slope(torsion, 15);
  std::cout << "max 4d = " << report.max4d << ", threshold = " << report.threshold
            << (report.conclusive ? ", no negative definite filling\n" : ", inconclusive\n");

  for (std::int64_t m = 3; m <= 8; ++m) {
    const auto scan = certify_nonfillable_interval(PretzelParameter(m));
    std::cout << "m = " << m << ": ";
    if (scan.certified_interval) {
      std::cout << "[" << scan.certified_interval->lower << ", " << scan.certified_interval->upper << "]\n";
    } else {
      std::cout << "nothing certified\n";
    }
  }
}
