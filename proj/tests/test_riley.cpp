#include <doctest.h>

#include "oracle_helpers.hpp"
#include "torsionlab/chebyshev.hpp"
#include "torsionlab/riley.hpp"

using namespace torsionlab;

TEST_CASE("TwistKnot rejects n = 0") {
  CHECK_THROWS_AS(TwistKnot(0), std::invalid_argument);
  CHECK(TwistKnot(-1).n == -1);
}

TEST_CASE("meridian matrices") {
  const Mat2 a1 = rho_a(Complex(1.0));
  CHECK(a1.a == Complex(1.0));
  CHECK(a1.b == Complex(1.0));
  CHECK(a1.c == Complex(0.0));
  CHECK(a1.d == Complex(1.0));
  CHECK_THROWS_AS(rho_a(Complex(0.0)), std::invalid_argument);
  CHECK_THROWS_AS(rho_b(Complex(0.0), Complex(1.0)), std::invalid_argument);

  Rng rng(41);
  for (int t = 0; t < 30; ++t) {
    const Complex s = rand_annulus(rng, 0.5, 2.0);
    const Complex u = rand_annulus(rng, 0.1, 2.0);
    CHECK(std::abs(rho_b(s, u).det() - 1.0) < 1e-14);
    CHECK(std::abs(rho_a(s).det() - 1.0) < 1e-14);
    CHECK(std::abs(rho_a(s).trace() - (s + 1.0 / s)) < 1e-14);
  }
}

TEST_CASE("rho_w matches the commutator product and its trace is z") {
  Rng rng(42);
  for (int t = 0; t < 100; ++t) {
    const Complex s = rand_annulus(rng, 0.7, 1.4);
    const Complex u = rand_annulus(rng, 0.05, 1.5);
    const Mat2 a = rho_a(s), b = rho_b(s, u);
    const Mat2 prod = b * a.inverse() * b.inverse() * a;
    CHECK(max_norm(rho_w(s, u) - prod) < 1e-12);

    const RileyPoint pt{s, u};
    CHECK(std::abs(rho_w(s, u).trace() - pt.z()) < 1e-13);
  }
  // u -> 0 degenerates to the abelian locus: every u-term drops out and
  // rho(w) becomes the parabolic [[1, 1/s - s], [0, 1]] with trace 2
  {
    const Complex s(1.3, 0.2);
    const Mat2 w0 = rho_w(s, Complex(0.0));
    const Mat2 want{Complex(1.0), 1.0 / s - s, Complex(0.0), Complex(1.0)};
    CHECK(max_norm(w0 - want) == 0.0);
    CHECK(std::abs(w0.trace() - 2.0) == 0.0);
    CHECK(max_norm(rho_w(Complex(1.0), Complex(0.0)) - Mat2::identity()) == 0.0);
  }
}

TEST_CASE("the two z expressions agree") {
  Rng rng(43);
  for (int t = 0; t < 100; ++t) {
    const RileyPoint pt{rand_annulus(rng, 0.6, 1.6), rand_annulus(rng, 0.05, 2.0)};
    const Complex x = pt.x();
    const Complex z_via_x = pt.u * pt.u - (x * x - 4.0) * pt.u + 2.0;
    CHECK(std::abs(z_via_x - pt.z()) < 1e-12);
  }
}

TEST_CASE("rho_w_pow pinned and against mat_pow") {
  Rng rng(44);
  const Complex s = rand_annulus(rng, 0.8, 1.2);
  const Complex u = rand_annulus(rng, 0.2, 1.0);
  CHECK(max_norm(rho_w_pow(0, s, u) - Mat2::identity()) == 0.0);
  CHECK(max_norm(rho_w_pow(1, s, u) - rho_w(s, u)) < 1e-14);

  for (int t = 0; t < 60; ++t) {
    const Complex ss = rand_annulus(rng, 0.75, 1.3);
    const Complex uu = rand_annulus(rng, 0.05, 1.2);
    for (int n : {-3, -2, 2, 4}) {
      const Mat2 want = mat_pow(rho_w(ss, uu), n);
      CHECK(max_norm(rho_w_pow(n, ss, uu) - want) <= 1e-10 * (1.0 + max_norm(want)));
      const Mat2 want_bar = mat_pow(rho_w_bar(ss, uu), n);
      CHECK(max_norm(rho_w_bar_pow(n, ss, uu) - want_bar) <=
            1e-10 * (1.0 + max_norm(want_bar)));
    }
  }
}

TEST_CASE("riley_eval reductions for the trefoil and figure-eight") {
  Rng rng(45);
  for (int t = 0; t < 50; ++t) {
    const Complex s = rand_annulus(rng, 0.6, 1.5);
    const Complex x = s + 1.0 / s;
    // n = 1 vanishes exactly at u = x^2 - 3 and matches -(u - (x^2-3))
    const Complex u_root = x * x - 3.0;
    CHECK(std::abs(riley_eval(1, s, u_root)) < 1e-12 * (1.0 + std::abs(u_root)));
    const Complex u = rand_annulus(rng, 0.1, 2.0);
    CHECK(std::abs(riley_eval(1, s, u) + (u - (x * x - 3.0))) < 1e-12 * (1.0 + std::abs(u)));
    // n = -1 vanishes iff u^2 - (u+1)(x^2-5) = 0
    const Complex quad = u * u - (u + 1.0) * (x * x - 5.0);
    CHECK(std::abs(riley_eval(-1, s, u) - quad) < 1e-12 * (1.0 + std::abs(quad)));
  }
}

TEST_CASE("riley_poly_in_u pinned examples") {
  // trefoil at s = 2: single root u = x^2 - 3 = 3.25
  const PolyC p1 = riley_poly_in_u(1, Complex(2.0));
  CHECK(p1.degree() == 1);
  const Complex root1 = -p1.coeff(0) / p1.coeff(1);
  CHECK(std::abs(root1 - 3.25) < 1e-12);

  // figure-eight at x = 3: u^2 - 4u - 4, roots 2 +- 2*sqrt(2)
  const Complex s_x3(2.618033988749895, 0.0);
  const PolyC p2 = riley_poly_in_u(-1, s_x3);
  CHECK(p2.degree() == 2);
  const Complex disc = std::sqrt(p2.coeff(1) * p2.coeff(1) - 4.0 * p2.coeff(2) * p2.coeff(0));
  const Complex r_hi = (-p2.coeff(1) + disc) / (2.0 * p2.coeff(2));
  CHECK(std::abs(r_hi - (2.0 + 2.0 * std::sqrt(2.0))) < 1e-9);

  // polynomial evaluation agrees with the direct form away from the
  // zero crossings (a result-relative comparison is meaningless there)
  Rng rng(46);
  for (int t = 0; t < 60; ++t) {
    const Complex s = rand_annulus(rng, 0.75, 1.3);
    for (int n : {1, -1, 2, -2, 3, -3, 6, -6}) {
      const PolyC phi = riley_poly_in_u(n, s);
      const Complex u = rand_annulus(rng, 0.1, 3.0);
      double term_scale = 0.0, upow = 1.0;
      for (int i = 0; i <= phi.degree(); ++i) {
        term_scale += std::abs(phi.coeff(i)) * upow;
        upow *= std::abs(u);
      }
      const Complex direct = riley_eval(n, s, u);
      if (std::abs(direct) < 1e-3 * term_scale) continue;
      CHECK(rel_close(phi.eval(u), direct, 1e-10));
    }
  }
}

TEST_CASE("riley_roots pinned examples") {
  const auto trefoil = riley_roots(1, Complex(2.0));
  CHECK(trefoil.warnings.empty());
  REQUIRE(trefoil.points.size() == 1);
  CHECK(std::abs(trefoil.points[0].u - 3.25) < 1e-12);

  const auto fig8 = riley_roots(-1, Complex(2.618033988749895));
  CHECK(fig8.warnings.empty());
  REQUIRE(fig8.points.size() == 2);
  // sorted by real part
  CHECK(std::abs(fig8.points[0].u - (2.0 - 2.0 * std::sqrt(2.0))) < 1e-10);
  CHECK(std::abs(fig8.points[1].u - (2.0 + 2.0 * std::sqrt(2.0))) < 1e-10);
}

TEST_CASE("riley_roots satisfy the group relation through matrices only") {
  Rng rng(47);
  for (int t = 0; t < 25; ++t) {
    const Complex s = rand_annulus(rng, 0.8, 1.3);
    for (int n : {1, -1, 2, -2, 3}) {
      for (const RileyPoint& pt : riley_roots(n, s).points) {
        CHECK(std::abs(riley_eval(n, pt.s, pt.u)) < 1e-10);
        const Mat2 wn = mat_pow(rho_w(pt.s, pt.u), n);
        const Mat2 lhs = wn * rho_a(pt.s);
        const Mat2 rhs = rho_b(pt.s, pt.u) * wn;
        CHECK(max_norm(lhs - rhs) < 1e-9);
      }
    }
  }
}

TEST_CASE("antidiagonal shape off the root locus") {
  Rng rng(48);
  for (int t = 0; t < 100; ++t) {
    const Complex s = rand_annulus(rng, 0.75, 1.3);
    const Complex u = rand_annulus(rng, 0.1, 1.2);
    const int n = (t % 2) ? 2 : -3;
    const Mat2 wn = rho_w_pow(n, s, u);
    const Mat2 diff = wn * rho_a(s) - rho_b(s, u) * wn;
    CHECK(std::abs(diff.a) < 1e-10);
    CHECK(std::abs(diff.d) < 1e-10);
    CHECK(std::abs(diff.c - u * diff.b) <= 1e-10 * (1.0 + std::abs(diff.c)));
  }
}

TEST_CASE("inverse-square identity at roots") {
  Rng rng(49);
  for (int n : {1, -1, 2, -2, 3, -3}) {
    auto samples = sample_roots(n, 8, rng);
    REQUIRE(!samples.empty());
    for (const auto& smp : samples) {
      const Complex s = smp.pt.s, u = smp.pt.u;
      const Complex c2 = s * s + 1.0 / (s * s);
      const Complex sn1 = s_cheb(n - 1, smp.pt.z());
      CHECK(std::abs(sn1 * sn1 * (u + 2.0 - c2) * (u * u - (c2 - 2.0) * (u + 1.0)) - 1.0) <
            1e-8);
    }
  }
}

TEST_CASE("near-zero roots are dropped with a notice") {
  // n = 1 at x^2 = 3 puts the lone root at u = 0 exactly
  const Complex x(std::sqrt(3.0), 0.0);
  const Complex s = (x + std::sqrt(x * x - 4.0)) / 2.0;
  const auto rr = riley_roots(1, s);
  CHECK(rr.points.empty());
  CHECK(rr.warnings.empty());
  REQUIRE(!rr.notices.empty());
  CHECK(rr.notices[0].find("abelian") != std::string::npos);
}
