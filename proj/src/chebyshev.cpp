#include "torsionlab/chebyshev.hpp"

#include <stdexcept>
#include <utility>

namespace torsionlab {

namespace {

// forward recurrence, k >= 0
Complex s_forward(int k, Complex z) {
  Complex prev(1.0, 0.0);  // S_0
  if (k == 0) return prev;
  Complex cur = z;  // S_1
  for (int i = 2; i <= k; ++i) {
    const Complex next = z * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// {P_k, P_{k-1}} in one forward pass, k >= 0
std::pair<Complex, Complex> p_pair(int k, Complex z) {
  Complex sum_prev(0.0, 0.0);  // P_{-1}
  Complex sum(1.0, 0.0);       // P_0
  Complex s_prev(1.0, 0.0);    // S_0
  Complex s_cur = z;           // S_1
  for (int i = 1; i <= k; ++i) {
    sum_prev = sum;
    sum += s_cur;
    const Complex next = z * s_cur - s_prev;
    s_prev = s_cur;
    s_cur = next;
  }
  return {sum, sum_prev};
}

}  // namespace

Complex s_cheb(int k, Complex z) {
  if (k >= 0) return s_forward(k, z);
  if (k == -1) return Complex(0.0, 0.0);
  return -s_forward(-k - 2, z);
}

Complex p_cheb(int k, Complex z) {
  if (k < -1) throw std::invalid_argument("p_cheb: index must be >= -1");
  if (k == -1) return Complex(0.0, 0.0);
  return p_pair(k, z).first;
}

Complex det_sum_ratio(int k, Complex z) {
  if (k < 0) throw std::invalid_argument("det_sum_ratio: index must be >= 0");
  const auto [pk, pk_prev] = p_pair(k, z);
  return pk + pk_prev;
}

}  // namespace torsionlab
