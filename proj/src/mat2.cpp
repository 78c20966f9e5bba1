#include "torsionlab/mat2.hpp"

#include <stdexcept>

#include "torsionlab/chebyshev.hpp"

namespace torsionlab {

double max_norm(const Mat2& m) {
  return std::max(std::max(std::abs(m.a), std::abs(m.b)),
                  std::max(std::abs(m.c), std::abs(m.d)));
}

bool is_sl2(const Mat2& m, double tol) { return std::abs(m.det() - Complex(1.0)) < tol; }

namespace {

void require_sl2(const Mat2& v, const char* who) {
  if (!is_sl2(v)) {
    throw std::invalid_argument(std::string(who) + ": determinant is not 1 within tolerance");
  }
}

}  // namespace

Mat2 mat_pow_unchecked(const Mat2& v, int k) {
  const Complex t = v.trace();
  const Complex sk = s_cheb(k, t);
  const Complex sk1 = s_cheb(k - 1, t);
  return {sk - v.d * sk1, v.b * sk1,
          v.c * sk1, sk - v.a * sk1};
}

Mat2 mat_pow(const Mat2& v, int k) {
  require_sl2(v, "mat_pow");
  return mat_pow_unchecked(v, k);
}

Mat2 geom_sum(const Mat2& v, int k) {
  if (k < 0) throw std::invalid_argument("geom_sum: index must be >= 0");
  require_sl2(v, "geom_sum");
  const Complex t = v.trace();
  const Complex pk = p_cheb(k, t);
  const Complex pk1 = p_cheb(k - 1, t);
  return {pk - v.d * pk1, v.b * pk1,
          v.c * pk1, pk - v.a * pk1};
}

}  // namespace torsionlab
