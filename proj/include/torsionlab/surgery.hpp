#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "torsionlab/riley.hpp"
#include "torsionlab/types.hpp"

namespace torsionlab {

// Surgery coefficient p/q in lowest terms.
struct Slope {
  int p;
  int q;
  Slope(int p_, int q_);
};

struct SurgeryRep {
  RileyPoint point;
  Slope slope;
  double extension_residual;  // max-modulus of rho(a)^p rho(lambda)^q - I
};

// rho of the canonical longitude lambda = wbar^n w^n. Entry-level identity
// in (s, u); no root condition needed.
Mat2 rho_longitude(int n, const RileyPoint& pt);

// Closed form 2 + u^2 (s^2 + s^-2 + 2) / ((u+1)(s^2 + s^-2 - 2) - u^2).
// Equals tr rho(lambda) only on the representation variety; callers pass
// Riley roots. Throws std::domain_error when the denominator degenerates.
Complex trace_longitude(const RileyPoint& pt);

struct ExtensionResult {
  bool accepted;
  double residual;
};

// Does rho extend over the filled manifold: residual of rho(a)^p rho(lambda)^q = I.
ExtensionResult extension_check(int n, const RileyPoint& pt, const Slope& slope,
                                double tol = 1e-8);

struct SolveOptions {
  int starts = 0;          // 0 = full start grid
  double tol = 1e-8;       // extension-gate tolerance
  int max_iter = 100;      // Newton iteration cap per start
  double newton_tol = 1e-12;
  std::uint64_t seed = 0;  // jitter for the start grid
};

// Multi-start damped Newton on F(s, u) = (phi(s,u), tr(rho(a)^p rho(lambda)^q) - 2),
// gated by the full matrix extension condition and deduplicated. Points
// related by s -> 1/s are distinct and both reported. Returns an empty
// list when nothing converges (not an error).
std::vector<SurgeryRep> solve_surgery_reps(int n, const Slope& slope,
                                           const SolveOptions& opts = {});

// Torsion of the surgered manifold by the closed form
// ((x-2)*ratio - x*S_{n-1}(z)) * (u^-2 (u+1)(x^2-4) - 1) / x^2.
// Requires x outside {0, 2} and tr rho(lambda) != 2; the point is assumed
// to be a Riley root (the extension condition is not re-verified here).
Complex torsion_surgery(int n, const RileyPoint& pt);
Complex torsion_surgery(int n, const SurgeryRep& rep);

// Quotient route tau(complement) / (2 - tr rho(lambda)), the cross-check.
Complex torsion_surgery_from_complement(int n, const RileyPoint& pt);

}  // namespace torsionlab
