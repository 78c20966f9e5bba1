#pragma once

#include <string>
#include <vector>

#include "torsionlab/fox.hpp"
#include "torsionlab/riley.hpp"
#include "torsionlab/types.hpp"

namespace torsionlab {

enum class TorsionMethod { closed_form, fox_oracle };

struct TorsionReport {
  Complex value{0.0, 0.0};
  TorsionMethod method = TorsionMethod::closed_form;
  int n = 0;
  RileyPoint point;
  std::vector<std::string> warnings;
};

// Evaluates the complement torsion by the requested route.
TorsionReport make_torsion_report(int n, const RileyPoint& pt, TorsionMethod method,
                                  double root_tol = 1e-8);

// w = b a^-1 b^-1 a and the knot-group relator w^n a w^-n b^-1.
Word twist_knot_word();
Word twist_knot_relator(int n);

// Throws std::domain_error unless |riley_eval(n, s, u)| < tol.
void require_riley_root(int n, const RileyPoint& pt, double tol = 1e-8);

// (S_n(z) - S_{n-2}(z) - 2)/(z - 2) in division-free form: the expression
// is even in n, so both signs reduce to P_{|n|-1} + P_{|n|-2}.
Complex torsion_ratio(int n, Complex z);

// Reidemeister torsion of the knot complement at a Riley root:
// (2 - x) * torsion_ratio + x * S_{n-1}(z). Requires x != 2 (parabolic
// points are outside the formula's hypothesis) and a root residual
// below root_tol.
Complex torsion_complement(int n, const RileyPoint& pt, double root_tol = 1e-8);

// Independent route: Fox derivative of the relator evaluated under rho,
// determinant divided by det(rho(b) - I).
Complex fox_torsion_complement(int n, const RileyPoint& pt);

// Closed forms for the 2x2 block Omega = rho(a^-1 (1-b)(1-a)) * Delta that
// drives the complement torsion, where Delta sums inverse powers of w.
Complex omega_det(int n, const RileyPoint& pt, double root_tol = 1e-8);
Complex omega_trace(int n, const RileyPoint& pt, double root_tol = 1e-8);

// Literal matrix construction of Omega. For n >= 1, Delta = sum_{i=0}^{n-1}
// rho(w^-1)^i; for n <= -1 the Fox-consistent continuation is
// Delta = -(rho(w) + ... + rho(w)^{|n|}).
Mat2 omega_matrix(int n, const RileyPoint& pt);

}  // namespace torsionlab
