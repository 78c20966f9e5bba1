#include "torsionlab/torsion.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "torsionlab/chebyshev.hpp"

namespace torsionlab {

Word twist_knot_word() {
  return Word::gen(Gen::B) * Word::gen(Gen::A, -1) * Word::gen(Gen::B, -1) * Word::gen(Gen::A);
}

Word twist_knot_relator(int n) {
  if (n == 0) throw std::invalid_argument("twist_knot_relator: n must be nonzero");
  const Word w = twist_knot_word();
  return w.pow(n) * Word::gen(Gen::A) * w.pow(-n) * Word::gen(Gen::B, -1);
}

void require_riley_root(int n, const RileyPoint& pt, double tol) {
  const double res = std::abs(riley_eval(n, pt.s, pt.u));
  if (!(res < tol)) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3e", res);
    throw std::domain_error("point is not a Riley root (residual " + std::string(buf) + ")");
  }
}

Complex torsion_ratio(int n, Complex z) {
  if (n == 0) throw std::invalid_argument("torsion_ratio: n must be nonzero");
  return det_sum_ratio(std::abs(n) - 1, z);
}

Complex torsion_complement(int n, const RileyPoint& pt, double root_tol) {
  const Complex x = pt.x();
  if (std::abs(x - 2.0) <= 1e-8) {
    throw std::domain_error("torsion_complement: parabolic point (x = 2) outside formula domain");
  }
  require_riley_root(n, pt, root_tol);
  const Complex z = pt.z();
  return (2.0 - x) * torsion_ratio(n, z) + x * s_cheb(n - 1, z);
}

Complex fox_torsion_complement(int n, const RileyPoint& pt) {
  const SL2Assignment rho{rho_a(pt.s), rho_b(pt.s, pt.u)};
  return johnson_torsion(twist_knot_relator(n), rho, Gen::B);
}

TorsionReport make_torsion_report(int n, const RileyPoint& pt, TorsionMethod method,
                                  double root_tol) {
  TorsionReport report;
  report.method = method;
  report.n = n;
  report.point = pt;
  if (method == TorsionMethod::closed_form) {
    report.value = torsion_complement(n, pt, root_tol);
  } else {
    require_riley_root(n, pt, root_tol);
    report.value = fox_torsion_complement(n, pt);
  }
  return report;
}

Complex omega_det(int n, const RileyPoint& pt, double root_tol) {
  require_riley_root(n, pt, root_tol);
  const Complex x = pt.x();
  return (2.0 - x) * (2.0 - x) * torsion_ratio(n, pt.z());
}

Complex omega_trace(int n, const RileyPoint& pt, double root_tol) {
  require_riley_root(n, pt, root_tol);
  const Complex x = pt.x();
  return x * (2.0 - x) * s_cheb(n - 1, pt.z()) - 1.0;
}

Mat2 omega_matrix(int n, const RileyPoint& pt) {
  if (n == 0) throw std::invalid_argument("omega_matrix: n must be nonzero");
  const Mat2 a = rho_a(pt.s);
  const Mat2 b = rho_b(pt.s, pt.u);
  const Mat2 w = rho_w(pt.s, pt.u);
  const Mat2 id = Mat2::identity();
  const Mat2 head = a.inverse() * (id - b) * (id - a);
  Mat2 delta;
  if (n >= 1) {
    delta = geom_sum(w.inverse(), n - 1);
  } else {
    delta = -(w * geom_sum(w, -n - 1));
  }
  return head * delta;
}

}  // namespace torsionlab
