#include "torsionlab/polyc.hpp"

namespace torsionlab {

Complex PolyC::eval(Complex x) const {
  Complex acc(0.0, 0.0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyC PolyC::derivative() const {
  if (c_.size() <= 1) return PolyC{};
  std::vector<Complex> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = double(i) * c_[i];
  return PolyC(std::move(d));
}

PolyC PolyC::operator+(const PolyC& o) const {
  std::vector<Complex> r(std::max(c_.size(), o.c_.size()), Complex(0.0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return PolyC(std::move(r));
}

PolyC PolyC::operator-(const PolyC& o) const {
  std::vector<Complex> r(std::max(c_.size(), o.c_.size()), Complex(0.0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return PolyC(std::move(r));
}

PolyC PolyC::operator*(const PolyC& o) const {
  if (c_.empty() || o.c_.empty()) return PolyC{};
  std::vector<Complex> r(c_.size() + o.c_.size() - 1, Complex(0.0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return PolyC(std::move(r));
}

PolyC operator*(Complex s, const PolyC& p) {
  std::vector<Complex> r(p.c_);
  for (auto& v : r) v *= s;
  return PolyC(std::move(r));
}

PolyC PolyC::trimmed(double rel_tol) const {
  double max_mod = 0.0;
  for (const auto& v : c_) max_mod = std::max(max_mod, std::abs(v));
  if (max_mod == 0.0) return PolyC{};
  const double cut = rel_tol * max_mod;
  size_t n = c_.size();
  while (n > 0 && std::abs(c_[n - 1]) < cut) --n;
  return PolyC(std::vector<Complex>(c_.begin(), c_.begin() + n));
}

DurandKernerResult durand_kerner(const PolyC& p, int max_iter, double tol) {
  DurandKernerResult out;
  const int deg = p.degree();
  if (deg < 1) {
    out.converged = true;
    return out;
  }

  // monic normalization
  std::vector<Complex> m(p.coeffs());
  const Complex lead = m.back();
  double coeff_ratio = 0.0;
  for (auto& v : m) {
    v /= lead;
    coeff_ratio = std::max(coeff_ratio, std::abs(v));
  }
  const PolyC monic{std::vector<Complex>(m)};

  const double radius = 1.0 + coeff_ratio;
  out.roots.resize(deg);
  for (int i = 0; i < deg; ++i) {
    // off-axis phase plus a tiny radius stagger so no start is a root of
    // unity times another (conjugate-symmetric traps stall the iteration)
    const double angle = 2.0 * M_PI * i / deg + 0.4;
    const double r = radius * (1.0 + 1e-4 * i);
    out.roots[i] = std::polar(r, angle);
  }

  for (int it = 0; it < max_iter; ++it) {
    double step_max = 0.0;
    for (int i = 0; i < deg; ++i) {
      Complex denom(1.0, 0.0);
      for (int j = 0; j < deg; ++j) {
        if (j != i) denom *= out.roots[i] - out.roots[j];
      }
      if (denom == Complex(0.0)) {
        out.roots[i] += Complex(1e-8, 1e-8);
        step_max = 1.0;
        continue;
      }
      const Complex delta = monic.eval(out.roots[i]) / denom;
      out.roots[i] -= delta;
      step_max = std::max(step_max, std::abs(delta));
    }
    out.iterations = it + 1;
    if (step_max < tol * (1.0 + radius)) {
      out.converged = true;
      break;
    }
  }
  return out;
}

}  // namespace torsionlab
