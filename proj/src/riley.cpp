#include "torsionlab/riley.hpp"

#include <algorithm>
#include <stdexcept>

#include "torsionlab/chebyshev.hpp"

namespace torsionlab {

TwistKnot::TwistKnot(int n_) : n(n_) {
  if (n == 0) throw std::invalid_argument("TwistKnot: n must be nonzero");
}

namespace {

void require_nonzero_s(Complex s, const char* who) {
  if (s == Complex(0.0)) throw std::invalid_argument(std::string(who) + ": s must be nonzero");
}

void require_nonzero_n(int n, const char* who) {
  if (n == 0) throw std::invalid_argument(std::string(who) + ": n must be nonzero");
}

Mat2 pow_from_base(const Mat2& base, int n, Complex z) {
  const Complex sn = s_cheb(n, z);
  const Complex sn1 = s_cheb(n - 1, z);
  return {sn - base.d * sn1, base.b * sn1,
          base.c * sn1, sn - base.a * sn1};
}

}  // namespace

Mat2 rho_a(Complex s) {
  require_nonzero_s(s, "rho_a");
  return {s, Complex(1.0), Complex(0.0), 1.0 / s};
}

Mat2 rho_b(Complex s, Complex u) {
  require_nonzero_s(s, "rho_b");
  return {s, Complex(0.0), -u, 1.0 / s};
}

Mat2 rho_w(Complex s, Complex u) {
  require_nonzero_s(s, "rho_w");
  const Complex s2 = s * s;
  const Complex si = 1.0 / s;
  const Complex si2 = si * si;
  return {1.0 - s2 * u, si - s - s * u,
          (s - si) * u + s * u * u, 1.0 + (2.0 - si2) * u + u * u};
}

Mat2 rho_w_bar(Complex s, Complex u) {
  require_nonzero_s(s, "rho_w_bar");
  const Complex s2 = s * s;
  const Complex si = 1.0 / s;
  const Complex si2 = si * si;
  return {1.0 + (2.0 - s2) * u + u * u, s - si - si * u,
          (si - s) * u + si * u * u, 1.0 - si2 * u};
}

Mat2 rho_w_pow(int n, Complex s, Complex u) {
  const Mat2 w = rho_w(s, u);
  return pow_from_base(w, n, w.trace());
}

Mat2 rho_w_bar_pow(int n, Complex s, Complex u) {
  const Mat2 wb = rho_w_bar(s, u);
  return pow_from_base(wb, n, wb.trace());
}

Complex riley_eval(int n, Complex s, Complex u) {
  require_nonzero_n(n, "riley_eval");
  require_nonzero_s(s, "riley_eval");
  const Complex c2 = s * s + 1.0 / (s * s);
  const Complex z = 2.0 + (2.0 - c2) * u + u * u;
  const Complex mult = u * u - (u + 1.0) * (c2 - 3.0);
  return s_cheb(n, z) - mult * s_cheb(n - 1, z);
}

PolyC riley_poly_in_u(int n, Complex s) {
  require_nonzero_n(n, "riley_poly_in_u");
  require_nonzero_s(s, "riley_poly_in_u");
  const Complex c2 = s * s + 1.0 / (s * s);

  const PolyC z_poly{Complex(2.0), 2.0 - c2, Complex(1.0)};
  const PolyC mult{-(c2 - 3.0), -(c2 - 3.0), Complex(1.0)};

  // S_k(z(u)) for 0 <= k <= top; negative indices through S_{-k} = -S_{k-2}
  const int top = std::max(std::abs(n), std::abs(n - 1));
  std::vector<PolyC> s_polys;
  s_polys.reserve(top + 1);
  s_polys.push_back(PolyC::constant(Complex(1.0)));  // S_0
  if (top >= 1) s_polys.push_back(z_poly);           // S_1
  for (int k = 2; k <= top; ++k) {
    s_polys.push_back(z_poly * s_polys[k - 1] - s_polys[k - 2]);
  }
  const auto s_at = [&](int k) -> PolyC {
    if (k >= 0) return s_polys[k];
    if (k == -1) return PolyC{};
    return Complex(-1.0) * s_polys[-k - 2];
  };

  const PolyC phi = (s_at(n) - mult * s_at(n - 1)).trimmed(1e-12);
  if (phi.is_zero()) {
    throw std::domain_error("riley_poly_in_u: polynomial degenerates to zero at this s");
  }
  return phi;
}

RileyRootsResult riley_roots(int n, Complex s, const RootOptions& opts) {
  RileyRootsResult out;
  const PolyC phi = riley_poly_in_u(n, s);
  if (phi.degree() < 1) {
    out.warnings.push_back("riley_roots: polynomial is a nonzero constant, no roots");
    return out;
  }

  const auto dk = durand_kerner(phi, opts.max_iter);
  if (!dk.converged) {
    out.warnings.push_back("riley_roots: simultaneous iteration hit the iteration cap");
  }
  const PolyC dphi = phi.derivative();

  std::vector<Complex> polished;
  for (size_t i = 0; i < dk.roots.size(); ++i) {
    Complex u = dk.roots[i];
    bool ok = false;
    for (int it = 0; it < opts.max_iter; ++it) {
      const Complex f = riley_eval(n, s, u);
      if (std::abs(f) < opts.tol) {
        ok = true;
        break;
      }
      const Complex df = dphi.eval(u);
      if (df == Complex(0.0) || !std::isfinite(std::abs(df))) break;
      u -= f / df;
    }
    if (!ok) {
      out.warnings.push_back("riley_roots: root " + std::to_string(i) +
                             " did not reach the residual target (|phi| = " +
                             std::to_string(std::abs(riley_eval(n, s, u))) + ")");
      continue;
    }
    if (std::abs(u) <= 1e-10) {
      out.notices.push_back("riley_roots: dropped a near-zero root (abelian locus)");
      continue;
    }
    polished.push_back(u);
  }

  std::sort(polished.begin(), polished.end(), [](Complex l, Complex r) {
    if (l.real() != r.real()) return l.real() < r.real();
    return l.imag() < r.imag();
  });
  for (const Complex& u : polished) {
    const bool dup = std::any_of(out.points.begin(), out.points.end(),
                                 [&](const RileyPoint& p) { return std::abs(p.u - u) < 1e-8; });
    if (!dup) out.points.push_back(RileyPoint{s, u});
  }
  return out;
}

}  // namespace torsionlab
