#pragma once

#include "torsionlab/types.hpp"

namespace torsionlab {

// Chebyshev-like sequence of the second kind on the trace variable:
// S_0 = 1, S_1 = z, S_k = z*S_{k-1} - S_{k-2}, extended to every integer
// index via the reflection S_{-k} = -S_{k-2} (so S_{-1} = 0, S_{-2} = -1).
Complex s_cheb(int k, Complex z);

// Partial sum P_k = S_0 + ... + S_k, with P_{-1} = 0 (empty sum).
// Computed by summation, never by the (z-2) division, so z = 2 is exact.
// Requires k >= -1.
Complex p_cheb(int k, Complex z);

// P_k + P_{k-1}: the determinant of a length-(k+1) geometric matrix sum,
// equal to (S_{k+1} - S_{k-1} - 2)/(z-2) away from z = 2 and to its
// removable-singularity limit there. Requires k >= 0.
Complex det_sum_ratio(int k, Complex z);

}  // namespace torsionlab
