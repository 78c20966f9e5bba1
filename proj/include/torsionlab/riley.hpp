#pragma once

#include <string>
#include <vector>

#include "torsionlab/mat2.hpp"
#include "torsionlab/polyc.hpp"
#include "torsionlab/types.hpp"

namespace torsionlab {

// The twist knot with 2 half-twists in one box and 2n in the other;
// n = 1 is the trefoil, n = -1 the figure-eight knot.
struct TwistKnot {
  int n;
  explicit TwistKnot(int n_);
};

// A point (s, u) on the nonabelian representation variety: s is the
// meridian eigenvalue, u the lower-left parameter of rho(b).
struct RileyPoint {
  Complex s{1.0, 0.0};
  Complex u{0.0, 0.0};

  // meridian trace
  Complex x() const { return s + 1.0 / s; }
  // trace of rho(w), w the commutator word of the knot group relator
  Complex z() const {
    const Complex s2 = s * s;
    return 2.0 + (2.0 - s2 - 1.0 / s2) * u + u * u;
  }
};

// rho(a) = [[s, 1], [0, 1/s]],  rho(b) = [[s, 0], [-u, 1/s]]
Mat2 rho_a(Complex s);
Mat2 rho_b(Complex s, Complex u);

// rho of w = b a^-1 b^-1 a and of its letter-reversed companion, as
// explicit entry formulas (no matrix products).
Mat2 rho_w(Complex s, Complex u);
Mat2 rho_w_bar(Complex s, Complex u);

// rho(w^n) and rho(wbar^n) through the trace recurrence: each entry is an
// S_n / S_{n-1} combination of the base matrix entries. Valid for every
// integer n and every (s, u) with s != 0.
Mat2 rho_w_pow(int n, Complex s, Complex u);
Mat2 rho_w_bar_pow(int n, Complex s, Complex u);

// The Riley function phi(s, u) = S_n(z) - (u^2 - (u+1)(s^2 + s^-2 - 3)) S_{n-1}(z).
// Its zero set with u != 0 parametrizes the nonabelian representations.
Complex riley_eval(int n, Complex s, Complex u);

// phi(s, .) expanded as a polynomial in u by exact coefficient arithmetic,
// trimmed at 1e-12 relative. Throws std::domain_error if everything trims
// away (s sits at a degenerate value).
PolyC riley_poly_in_u(int n, Complex s);

struct RootOptions {
  double tol = 1e-12;  // Newton residual target on riley_eval
  int max_iter = 500;  // cap for Durand-Kerner and for each Newton polish
};

struct RileyRootsResult {
  std::vector<RileyPoint> points;
  std::vector<std::string> warnings;  // per-root convergence failures
  std::vector<std::string> notices;   // informational drops (abelian locus)
};

// All roots u of riley_poly_in_u(n, s) with |u| > 1e-10, Durand-Kerner
// seeded and Newton-polished on riley_eval, deduplicated at distance 1e-8,
// sorted by (re, im). Roots that fail to polish are dropped and reported
// in warnings; near-zero roots are dropped with a notice (abelian locus).
RileyRootsResult riley_roots(int n, Complex s, const RootOptions& opts = {});

}  // namespace torsionlab
