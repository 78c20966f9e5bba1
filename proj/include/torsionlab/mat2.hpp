#pragma once

#include "torsionlab/types.hpp"

namespace torsionlab {

// 2x2 complex matrix, row-major entries [[a, b], [c, d]].
struct Mat2 {
  Complex a{0.0, 0.0};
  Complex b{0.0, 0.0};
  Complex c{0.0, 0.0};
  Complex d{0.0, 0.0};

  static Mat2 identity() { return {Complex(1.0), Complex(0.0), Complex(0.0), Complex(1.0)}; }

  Complex det() const { return a * d - b * c; }
  Complex trace() const { return a + d; }

  Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  Mat2 operator-() const { return {-a, -b, -c, -d}; }

  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }

  friend Mat2 operator*(Complex s, const Mat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }

  // General inverse, adjugate over determinant.
  Mat2 inverse() const {
    const Complex dt = det();
    return {d / dt, -b / dt, -c / dt, a / dt};
  }
};

// Entrywise max-modulus norm; the norm used for all 2x2 tolerance checks.
double max_norm(const Mat2& m);

bool is_sl2(const Mat2& m, double tol = sl2_det_tolerance);

// V^k for any integer k through the Cayley-Hamilton closed form
// V^k = S_k(t) I - S_{k-1}(t) V^{-1} with t = tr V. Requires det V = 1
// within sl2_det_tolerance; throws std::invalid_argument otherwise.
Mat2 mat_pow(const Mat2& v, int k);

// Same closed form without the determinant gate. For internal use on
// iterates that are SL2 only up to accumulated rounding.
Mat2 mat_pow_unchecked(const Mat2& v, int k);

// I + V + ... + V^k via the partial-sum closed form. Requires k >= 0 and
// det V = 1 within sl2_det_tolerance.
Mat2 geom_sum(const Mat2& v, int k);

}  // namespace torsionlab
