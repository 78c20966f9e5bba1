#pragma once

#include <initializer_list>
#include <vector>

#include "torsionlab/types.hpp"

namespace torsionlab {

// Univariate polynomial with complex coefficients, ascending degree order.
class PolyC {
 public:
  PolyC() = default;
  explicit PolyC(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {}
  PolyC(std::initializer_list<Complex> coeffs) : c_(coeffs) {}

  static PolyC constant(Complex v) { return PolyC{v}; }

  const std::vector<Complex>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is reported as -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Complex coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Complex(0.0);
  }
  Complex leading() const { return c_.empty() ? Complex(0.0) : c_.back(); }

  Complex eval(Complex x) const;
  PolyC derivative() const;

  PolyC operator+(const PolyC& o) const;
  PolyC operator-(const PolyC& o) const;
  PolyC operator*(const PolyC& o) const;
  friend PolyC operator*(Complex s, const PolyC& p);

  // Drop leading coefficients with modulus below rel_tol times the largest
  // coefficient modulus. An all-below-threshold polynomial trims to zero.
  PolyC trimmed(double rel_tol = 1e-12) const;

 private:
  std::vector<Complex> c_;
};

struct DurandKernerResult {
  std::vector<Complex> roots;
  bool converged = false;
  int iterations = 0;
};

// Simultaneous Weierstrass iteration for all roots of p. The polynomial is
// normalized to monic internally; initial guesses sit on a slightly
// perturbed circle of radius 1 + max |c_i / c_lead|.
DurandKernerResult durand_kerner(const PolyC& p, int max_iter = 500, double tol = 1e-14);

}  // namespace torsionlab
