#include <doctest.h>

#include "oracle_helpers.hpp"
#include "torsionlab/chebyshev.hpp"
#include "torsionlab/surgery.hpp"
#include "torsionlab/torsion.hpp"

using namespace torsionlab;

namespace {

RileyPoint fig8_x3_point() {
  return RileyPoint{Complex(2.618033988749895, 0.0), Complex(2.0 + 2.0 * std::sqrt(2.0), 0.0)};
}

RileyPoint trefoil_s2_point() { return RileyPoint{Complex(2.0), Complex(3.25)}; }

}  // namespace

TEST_CASE("Slope validation") {
  CHECK_THROWS_AS(Slope(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Slope(2, 4), std::invalid_argument);
  CHECK(Slope(0, 1).q == 1);
  CHECK(Slope(1, 0).p == 1);  // trivial filling is representable
  CHECK(Slope(-3, 2).p == -3);
}

TEST_CASE("longitude commutes with the meridian at roots") {
  Rng rng(71);
  for (int n : {1, -1, 2, -2}) {
    for (const auto& smp : sample_roots(n, 5, rng)) {
      const Mat2 lam = rho_longitude(n, smp.pt);
      const Mat2 a = rho_a(smp.pt.s);
      CHECK(max_norm(lam * a - a * lam) < 1e-9);
      CHECK(std::abs(lam.det() - 1.0) < 1e-9);
    }
  }
}

TEST_CASE("longitude trace pinned at the figure-eight x = 3 root") {
  const RileyPoint pt = fig8_x3_point();
  CHECK(std::abs(trace_longitude(pt) - 38.0) < 1e-8);
  CHECK(std::abs(rho_longitude(-1, pt).trace() - 38.0) < 1e-8);
}

TEST_CASE("longitude closed form equals the word-engine product") {
  Rng rng(72);
  const Word w = twist_knot_word();
  const Word w_bar = reverse_word(w);
  for (int n : {1, -1, 2, -3}) {
    for (const auto& smp : sample_roots(n, 4, rng)) {
      const SL2Assignment rho{rho_a(smp.pt.s), rho_b(smp.pt.s, smp.pt.u)};
      const Mat2 via_words = evaluate_word(w_bar.pow(n) * w.pow(n), rho);
      const Mat2 via_closed = rho_longitude(n, smp.pt);
      CHECK(max_norm(via_words - via_closed) <= 1e-10 * (1.0 + max_norm(via_words)));
    }
  }
}

TEST_CASE("trace_longitude agrees with the matrix trace at roots") {
  Rng rng(73);
  for (int n : {1, -1, 2, -2, 3}) {
    for (const auto& smp : sample_roots(n, 5, rng)) {
      CHECK(rel_close(trace_longitude(smp.pt), rho_longitude(n, smp.pt).trace(), 1e-8));
      // rearranged factor form
      const Complex x = smp.pt.x(), u = smp.pt.u;
      const Complex factor = (u + 1.0) * (x * x - 4.0) / (u * u) - 1.0;
      CHECK(rel_close(trace_longitude(smp.pt) - 2.0, x * x / factor, 1e-9));
    }
  }
}

TEST_CASE("extension_check behavior") {
  const RileyPoint pt = fig8_x3_point();
  // q = +-1, p = 0 requires rho(lambda) = I; trace is 38, so rejected
  const auto zero_one = extension_check(-1, pt, Slope(0, 1));
  CHECK_FALSE(zero_one.accepted);
  CHECK(zero_one.residual > 1.0);

  // generic slope at a generic root: rejected with a visible residual
  const auto generic = extension_check(-1, pt, Slope(1, 1));
  CHECK_FALSE(generic.accepted);
  CHECK(generic.residual > 1e-4);
}

TEST_CASE("surgery torsion pinned values") {
  // trefoil at s = 2: 2 / (x^2 (x^2-3)^2) with x = 2.5
  const RileyPoint tre = trefoil_s2_point();
  const Complex expect = 2.0 / (6.25 * 10.5625);
  CHECK(std::abs(torsion_surgery(1, tre) - expect) < 1e-12);

  // figure-eight x = 3: (2x-2)/(x^2 (x^2-5)) = 1/9, and the same through
  // the complement quotient with tr lambda = 38
  const RileyPoint pt = fig8_x3_point();
  CHECK(std::abs(torsion_surgery(-1, pt) - 1.0 / 9.0) < 1e-10);
  CHECK(std::abs(torsion_surgery_from_complement(-1, pt) - 1.0 / 9.0) < 1e-10);
  CHECK(std::abs((2.0 - (-4.0) / (1.0 / 9.0)) - 38.0) < 1e-9);  // consistency of the numbers
}

TEST_CASE("surgery torsion rejects excluded meridian traces") {
  // x = 0: s = i
  const Complex s_x0(0.0, 1.0);
  const RileyPoint x0{s_x0, Complex(1.0)};
  CHECK_THROWS_AS(torsion_surgery(1, x0), std::domain_error);
  const RileyPoint parabolic{Complex(1.0), Complex(1.0)};
  CHECK_THROWS_AS(torsion_surgery(1, parabolic), std::domain_error);

  // a trefoil point squeezed next to x = 0 passes the x gate but lands
  // inside the tr lambda = 2 guard
  const Complex x_tiny(1e-7, 0.0);
  const Complex s_tiny = (x_tiny + std::sqrt(x_tiny * x_tiny - 4.0)) / 2.0;
  const RileyPoint near_zero{s_tiny, x_tiny * x_tiny - 3.0};
  CHECK_THROWS_WITH_AS(torsion_surgery(1, near_zero), doctest::Contains("tr rho(lambda)"),
                       std::domain_error);
}

TEST_CASE("surgery formula equals the complement quotient on the variety") {
  Rng rng(74);
  for (int n = -4; n <= 4; ++n) {
    if (n == 0) continue;
    for (const auto& smp : sample_roots(n, 5, rng)) {
      const Complex direct = torsion_surgery(n, smp.pt);
      const Complex quotient = torsion_surgery_from_complement(n, smp.pt);
      CHECK(std::abs(direct - quotient) < 1e-8 * (1.0 + std::abs(direct)));
    }
  }
}

TEST_CASE("longitude trace through the S_{n-1}^2 identity") {
  Rng rng(75);
  for (int n : {1, -1, 2, -2, 3, -3}) {
    for (const auto& smp : sample_roots(n, 5, rng)) {
      const Complex s = smp.pt.s, u = smp.pt.u;
      const Complex c2 = s * s + 1.0 / (s * s);
      const Complex sn1 = s_cheb(n - 1, smp.pt.z());
      const Complex rhs = 2.0 + u * u * (c2 + 2.0) * (c2 - 2.0 - u) * sn1 * sn1;
      CHECK(rel_close(rho_longitude(n, smp.pt).trace(), rhs, 1e-8));
    }
  }
}

TEST_CASE("solver finds the figure-eight (1,1) filling") {
  const std::vector<SurgeryRep> reps = solve_surgery_reps(-1, Slope(1, 1));
  REQUIRE(!reps.empty());
  for (const SurgeryRep& rep : reps) {
    CHECK(rep.extension_residual < 1e-8);
    CHECK(std::abs(riley_eval(-1, rep.point.s, rep.point.u)) < 1e-10);
    // the filled relation holds as matrices
    const Mat2 filled =
        mat_pow(rho_a(rep.point.s), 1) * mat_pow(rho_longitude(-1, rep.point), 1);
    CHECK(max_norm(filled - Mat2::identity()) < 1e-8);
    // both torsion routes agree
    const Complex direct = torsion_surgery(-1, rep.point);
    const Complex quotient = torsion_surgery_from_complement(-1, rep.point);
    CHECK(std::abs(direct - quotient) < 1e-8 * (1.0 + std::abs(direct)));
  }
  // reruns with the same seed reproduce the same representations
  const std::vector<SurgeryRep> again = solve_surgery_reps(-1, Slope(1, 1));
  REQUIRE(again.size() == reps.size());
  for (size_t i = 0; i < reps.size(); ++i) {
    CHECK(std::abs(again[i].point.s - reps[i].point.s) < 1e-12);
    CHECK(std::abs(again[i].point.u - reps[i].point.u) < 1e-12);
  }
}

TEST_CASE("negative filling coefficient goes through the same machinery") {
  // (1,-1) on the figure-eight; the knot is amphichiral so this mirrors
  // the (1,1) filling
  const std::vector<SurgeryRep> reps = solve_surgery_reps(-1, Slope(1, -1));
  REQUIRE(!reps.empty());
  for (const SurgeryRep& rep : reps) {
    CHECK(rep.extension_residual < 1e-8);
    const Mat2 filled =
        mat_pow(rho_a(rep.point.s), 1) * mat_pow(rho_longitude(-1, rep.point), -1);
    CHECK(max_norm(filled - Mat2::identity()) < 1e-8);
  }
}

TEST_CASE("no representation yields an empty list, not an error") {
  // this filling closes to a lens space, whose cyclic group admits no
  // irreducible SL2 representation
  const std::vector<SurgeryRep> reps = solve_surgery_reps(1, Slope(-5, 1));
  CHECK(reps.empty());
}
