#include "torsionlab/surgery.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "torsionlab/chebyshev.hpp"
#include "torsionlab/parallel.hpp"
#include "torsionlab/torsion.hpp"

namespace torsionlab {

Slope::Slope(int p_, int q_) : p(p_), q(q_) {
  if (p == 0 && q == 0) throw std::invalid_argument("Slope: (0,0) is not a slope");
  if (std::gcd(std::abs(p), std::abs(q)) != 1) {
    throw std::invalid_argument("Slope: p and q must be coprime");
  }
}

Mat2 rho_longitude(int n, const RileyPoint& pt) {
  return rho_w_bar_pow(n, pt.s, pt.u) * rho_w_pow(n, pt.s, pt.u);
}

Complex trace_longitude(const RileyPoint& pt) {
  const Complex c2 = pt.s * pt.s + 1.0 / (pt.s * pt.s);
  const Complex u = pt.u;
  const Complex denom = (u + 1.0) * (c2 - 2.0) - u * u;
  if (std::abs(denom) < 1e-12) {
    throw std::domain_error("trace_longitude: longitude trace formula degenerate");
  }
  return 2.0 + u * u * (c2 + 2.0) / denom;
}

ExtensionResult extension_check(int n, const RileyPoint& pt, const Slope& slope, double tol) {
  const Mat2 filled =
      mat_pow(rho_a(pt.s), slope.p) * mat_pow(rho_longitude(n, pt), slope.q);
  const double residual = max_norm(filled - Mat2::identity());
  return {residual < tol, residual};
}

namespace {

struct F2 {
  Complex f1;
  Complex f2;
};

double residual_norm(const F2& f) { return std::max(std::abs(f.f1), std::abs(f.f2)); }

// rho(a)^p rho(lambda)^q with unchecked powers: intermediate iterates are
// SL2 only up to rounding.
Mat2 filled_relation(int n, const Slope& slope, Complex s, Complex u) {
  const RileyPoint pt{s, u};
  return mat_pow_unchecked(rho_a(s), slope.p) *
         mat_pow_unchecked(rho_longitude(n, pt), slope.q);
}

// entry of filled_relation - I selected for the polish stage; the trace
// gap is quadratic in the matrix deviation near a solution, so driving it
// to 1e-12 leaves entries around 1e-6, and one entry must take over
Complex filled_entry(int n, const Slope& slope, Complex s, Complex u, int which) {
  const Mat2 e = filled_relation(n, slope, s, u) - Mat2::identity();
  switch (which) {
    case 0: return e.a;
    case 1: return e.b;
    case 2: return e.c;
    default: return e.d;
  }
}

// Newton objective: the Riley function plus either the trace gap
// (entry < 0) or one entry of the filled relation minus identity.
F2 eval_system(int n, const Slope& slope, Complex s, Complex u, int entry) {
  Complex second;
  if (entry < 0) {
    second = filled_relation(n, slope, s, u).trace() - 2.0;
  } else {
    second = filled_entry(n, slope, s, u, entry);
  }
  return {riley_eval(n, s, u), second};
}

struct NewtonOutcome {
  bool converged = false;
  Complex s;
  Complex u;
};

// damped Newton on (riley_eval, second component selected by `entry`)
bool newton_stage(int n, const Slope& slope, Complex& s, Complex& u, int entry, double target,
                  int max_iter) {
  F2 f;
  try {
    f = eval_system(n, slope, s, u, entry);
  } catch (const std::exception&) {
    return false;
  }
  int restarts = 0;
  for (int it = 0; it < max_iter; ++it) {
    const double fnorm = residual_norm(f);
    if (!std::isfinite(fnorm)) return false;
    if (fnorm < target) return true;
    if (std::abs(s) < 1e-3) return false;  // wandering toward the s = 0 pole

    // central-difference Jacobian in the two complex directions
    const double hs = 1e-7 * (1.0 + std::abs(s));
    const double hu = 1e-7 * (1.0 + std::abs(u));
    F2 fsp, fsm, fup, fum;
    try {
      fsp = eval_system(n, slope, s + hs, u, entry);
      fsm = eval_system(n, slope, s - hs, u, entry);
      fup = eval_system(n, slope, s, u + hu, entry);
      fum = eval_system(n, slope, s, u - hu, entry);
    } catch (const std::exception&) {
      return false;
    }
    const Complex j11 = (fsp.f1 - fsm.f1) / (2.0 * hs);
    const Complex j12 = (fup.f1 - fum.f1) / (2.0 * hu);
    const Complex j21 = (fsp.f2 - fsm.f2) / (2.0 * hs);
    const Complex j22 = (fup.f2 - fum.f2) / (2.0 * hu);

    const Complex det = j11 * j22 - j12 * j21;
    if (!(std::abs(det) > 1e-300) || !std::isfinite(std::abs(det))) {
      // singular Jacobian: kick the iterate off the bad locus and retry
      if (++restarts > 3) return false;
      const Complex kick = std::polar(1e-4, 2.39996 * restarts);
      s += kick * (1.0 + std::abs(s));
      u += kick * (1.0 + std::abs(u));
      try {
        f = eval_system(n, slope, s, u, entry);
      } catch (const std::exception&) {
        return false;
      }
      continue;
    }
    Complex ds = (f.f1 * j22 - f.f2 * j12) / det;
    Complex du = (j11 * f.f2 - j21 * f.f1) / det;

    // step halving until the residual actually drops
    bool moved = false;
    for (int halving = 0; halving < 20; ++halving) {
      const Complex s_try = s - ds;
      const Complex u_try = u - du;
      F2 f_try;
      try {
        f_try = eval_system(n, slope, s_try, u_try, entry);
      } catch (const std::exception&) {
        ds *= 0.5;
        du *= 0.5;
        continue;
      }
      if (std::isfinite(residual_norm(f_try)) && residual_norm(f_try) < fnorm) {
        s = s_try;
        u = u_try;
        f = f_try;
        moved = true;
        break;
      }
      ds *= 0.5;
      du *= 0.5;
    }
    if (!moved) return fnorm < target;
  }
  try {
    return residual_norm(eval_system(n, slope, s, u, entry)) < target;
  } catch (const std::exception&) {
    return false;
  }
}

NewtonOutcome newton_from(int n, const Slope& slope, Complex s, Complex u,
                          const SolveOptions& opts) {
  NewtonOutcome out;
  if (!newton_stage(n, slope, s, u, -1, opts.newton_tol, opts.max_iter)) return out;

  // polish: re-target the dominant entry of the filled relation, which
  // vanishes linearly where the trace gap only vanishes quadratically
  try {
    const Mat2 e = filled_relation(n, slope, s, u) - Mat2::identity();
    const double mods[4] = {std::abs(e.a), std::abs(e.b), std::abs(e.c), std::abs(e.d)};
    int dominant = 0;
    for (int k = 1; k < 4; ++k) {
      if (mods[k] > mods[dominant]) dominant = k;
    }
    if (mods[dominant] > 1e-13) {
      newton_stage(n, slope, s, u, dominant, 1e-13, 25);
    }
  } catch (const std::exception&) {
    return out;
  }
  out.converged = true;
  out.s = s;
  out.u = u;
  return out;
}

}  // namespace

std::vector<SurgeryRep> solve_surgery_reps(int n, const Slope& slope, const SolveOptions& opts) {
  if (n == 0) throw std::invalid_argument("solve_surgery_reps: n must be nonzero");

  // start grid: concentric s-circles, u seeded from the Riley roots there
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> jitter(-1e-3, 1e-3);
  std::vector<std::pair<Complex, Complex>> starts;
  const double radii[] = {0.6, 0.9, 1.2, 1.5, 1.8};
  const int angles = 12;
  for (double r : radii) {
    for (int j = 0; j < angles; ++j) {
      const double theta = 2.0 * M_PI * j / angles + jitter(rng);
      const Complex s0 = std::polar(r + jitter(rng), theta);
      try {
        for (const RileyPoint& seed : riley_roots(n, s0).points) {
          starts.emplace_back(s0, seed.u);
        }
      } catch (const std::exception&) {
        // degenerate s sample: skip
      }
    }
  }
  if (opts.starts > 0 && static_cast<size_t>(opts.starts) < starts.size()) {
    starts.resize(opts.starts);
  }

  std::vector<NewtonOutcome> outcomes(starts.size());
  parallel_for(starts.size(), [&](size_t i) {
    outcomes[i] = newton_from(n, slope, starts[i].first, starts[i].second, opts);
  });

  std::vector<SurgeryRep> reps;
  for (const NewtonOutcome& o : outcomes) {
    if (!o.converged) continue;
    const RileyPoint pt{o.s, o.u};
    if (std::abs(pt.u) <= 1e-10) continue;  // abelian locus
    if (std::abs(riley_eval(n, pt.s, pt.u)) >= 1e-10) continue;
    ExtensionResult ext;
    try {
      ext = extension_check(n, pt, slope, opts.tol);
    } catch (const std::exception&) {
      continue;
    }
    if (!ext.accepted) continue;
    const bool dup = std::any_of(reps.begin(), reps.end(), [&](const SurgeryRep& r) {
      return std::max(std::abs(r.point.s - pt.s), std::abs(r.point.u - pt.u)) < 1e-6;
    });
    if (!dup) reps.push_back(SurgeryRep{pt, slope, ext.residual});
  }
  return reps;
}

Complex torsion_surgery(int n, const RileyPoint& pt) {
  const Complex x = pt.x();
  if (std::abs(x) <= 1e-8 || std::abs(x - 2.0) <= 1e-8) {
    throw std::domain_error("torsion_surgery: formula requires x outside {0, 2}");
  }
  const Complex tr_l = trace_longitude(pt);
  if (std::abs(tr_l - 2.0) <= 1e-10) {
    throw std::domain_error("torsion_surgery: formula requires tr rho(lambda) != 2");
  }
  const Complex z = pt.z();
  const Complex u = pt.u;
  const Complex bracket = (x - 2.0) * torsion_ratio(n, z) - x * s_cheb(n - 1, z);
  const Complex factor = (u + 1.0) * (x * x - 4.0) / (u * u) - 1.0;
  return bracket * factor / (x * x);
}

Complex torsion_surgery(int n, const SurgeryRep& rep) { return torsion_surgery(n, rep.point); }

Complex torsion_surgery_from_complement(int n, const RileyPoint& pt) {
  const Complex tr_l = trace_longitude(pt);
  if (std::abs(tr_l - 2.0) <= 1e-10) {
    throw std::domain_error(
        "torsion_surgery_from_complement: requires tr rho(lambda) != 2");
  }
  return torsion_complement(n, pt) / (2.0 - tr_l);
}

}  // namespace torsionlab
