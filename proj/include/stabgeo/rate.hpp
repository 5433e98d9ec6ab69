#pragma once

#include <cmath>
#include <stdexcept>

namespace stabgeo {

// H2(x) = -x log2(x) - (1-x) log2(1-x), extended by continuity at the
// endpoints.
inline double binary_entropy(double x) {
  if (!(x >= 0.0) || !(x <= 1.0))
    throw std::invalid_argument("entropy argument must lie in [0, 1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

// Asymptotic achievable rate R = 1 - 2*delta*log2(3) - H2(2*delta) for a
// decohered fraction delta of the qubits; delta < 1/4 keeps the entropy term
// left of its maximum. R(0) is exactly 1.
inline double gv_rate(double delta) {
  if (!(delta >= 0.0) || !(delta < 0.25))
    throw std::invalid_argument("delta must lie in [0, 0.25)");
  if (delta == 0.0) return 1.0;
  return 1.0 - 2.0 * delta * std::log2(3.0) - binary_entropy(2.0 * delta);
}

}  // namespace stabgeo
