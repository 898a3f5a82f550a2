// Decide hyponormality questions for conj(z)^2 + alpha z and a four-term symbol.
#include <iostream>

#include "hypolab/hypolab.hpp"

int main() {
  using namespace hypolab;

  HarmonicPolySymbol phi;
  phi.add_coanalytic(2, ExactComplex(1));
  phi.add_analytic(1, ExactComplex(ratio(19, 10)));

  const ScanResult scan = hypo_scan(phi, 10);
  std::cout << "scan up to degree 10: " << (scan.refuted ? "refuted" : "passes") << '\n';
  if (scan.refuted) {
    for (const auto& [deg, c] : scan.witness) std::cout << "  witness z^" << deg << " coefficient " << c << '\n';
    std::cout << "  <C f, f> = " << scan.value->get_str() << '\n';
  }

  const FourTermSymbol s{ExactComplex(1), ExactComplex(1), ExactComplex(0), ExactComplex(ratio(3, 4)), 2, 1, 1, 2};
  const InequalityReport main = main_inequality(s);
  std::cout << "main inequality: lhs = " << main.lhs.get_str() << ", rhs^2 = " << main.rhs_squared.get_str()
            << (main.holds ? " (holds)" : " (fails)") << '\n';

  const SpectrumInterval iv = spectrum_interval(tridiagonal_model(s));
  std::cout << "limit spectrum: [" << iv.lower_text() << ", " << iv.upper_text() << "]\n";
  if (const auto n = negative_section_size(tridiagonal_model(s)))
    std::cout << "first negative finite section: N = " << *n << '\n';
}
