#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace torsionlab {

using Complex = std::complex<double>;

// Absolute tolerance on |det V - 1| below which a matrix is accepted as SL2.
// Inputs are polished Newton roots with residuals well under this.
inline double sl2_det_tolerance = 1e-9;

inline bool rel_close(Complex a, Complex b, double tol) {
  return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

}  // namespace torsionlab
