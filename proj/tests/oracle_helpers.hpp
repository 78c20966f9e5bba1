#pragma once

// Brute-force oracles and deterministic draws for the unit suites. These
// stay on the naive evaluation path (plain recurrences, repeated matrix
// multiplication, termwise sums) so the closed forms are checked against
// something that cannot share their mistakes.

#include <random>

#include "torsionlab/checks.hpp"
#include "torsionlab/mat2.hpp"
#include "torsionlab/types.hpp"

namespace oracle {

using torsionlab::Complex;
using torsionlab::Mat2;
using torsionlab::Rng;

// S_k by the plain recurrence, run forward or literally backward.
inline Complex s_cheb_brute(int k, Complex z) {
  if (k >= 0) {
    Complex p(1.0), c = z;
    if (k == 0) return p;
    for (int i = 2; i <= k; ++i) {
      const Complex n = z * c - p;
      p = c;
      c = n;
    }
    return c;
  }
  // backward: S_{k-2} = z*S_{k-1} - S_k starting from (S_0, S_{-1})
  Complex hi(1.0);       // S_{i+1}
  Complex lo(0.0, 0.0);  // S_i, i = -1
  for (int i = -2; i >= k; --i) {
    const Complex next = z * lo - hi;
    hi = lo;
    lo = next;
  }
  return lo;
}

inline Complex p_cheb_brute(int k, Complex z) {
  Complex sum(0.0, 0.0);
  for (int i = 0; i <= k; ++i) sum += s_cheb_brute(i, z);
  return sum;
}

inline Mat2 pow_brute(const Mat2& v, int k) {
  const Mat2 base = k >= 0 ? v : v.inverse();
  Mat2 acc = Mat2::identity();
  for (int i = 0; i < std::abs(k); ++i) acc = acc * base;
  return acc;
}

inline Mat2 geom_sum_brute(const Mat2& v, int k) {
  Mat2 acc{};
  Mat2 p = Mat2::identity();
  for (int i = 0; i <= k; ++i) {
    acc = acc + p;
    p = p * v;
  }
  return acc;
}

}  // namespace oracle
