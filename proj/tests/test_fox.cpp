#include <doctest.h>

#include "oracle_helpers.hpp"
#include "torsionlab/fox.hpp"
#include "torsionlab/torsion.hpp"

using namespace torsionlab;

namespace {

Word W(const std::string& text) {
  return parse_word(text, WordMacros{{"w", twist_knot_word()}});
}

}  // namespace

TEST_CASE("parse_word basics") {
  const Word w = W("b a^-1 b^-1 a");
  CHECK(w == twist_knot_word());
  CHECK(w.size() == 4);

  CHECK(W("a a^-1").empty());
  CHECK(W("a^0").empty());

  // compact form without spaces parses letterwise
  CHECK(W("ba^-1b^-1a") == w);

  // macro expansion before reduction; w^2 has no cancellation
  CHECK(W("w^2") == w * w);
  CHECK(W("w^2").size() == 8);

  // parenthesized group with exponent
  CHECK(W("(a b)^-1") == W("b^-1 a^-1"));
  CHECK(W("(a b^-1 a^-1 b)^2 (b a^-1 b^-1 a)^2") == W("w").reversed().pow(2) * W("w").pow(2));
}

TEST_CASE("parse_word errors carry a position") {
  CHECK_THROWS_AS(W(""), ParseError);
  CHECK_THROWS_AS(W("a ^"), ParseError);
  CHECK_THROWS_AS(W("(a b"), ParseError);
  CHECK_THROWS_AS(W("a^x"), ParseError);
  try {
    W("a q b");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position == 2);
    CHECK(std::string(e.what()).find("unknown macro") != std::string::npos);
  }
}

TEST_CASE("reverse_word is letter reversal, not inversion") {
  const Word w = twist_knot_word();
  CHECK(reverse_word(w) == W("a b^-1 a^-1 b"));
  CHECK(reverse_word(Word{}).empty());
  CHECK(reverse_word(W("a")) == W("a"));
  CHECK(reverse_word(w) != w.inverse());
}

TEST_CASE("format round trip on generated expressions") {
  Rng rng(51);
  const WordMacros macros{{"w", twist_knot_word()}};
  int tested = 0;
  while (tested < 100) {
    const Word w = rand_word(rng, 18);
    const std::string text = format_word(w);
    const Word back = parse_word(text, macros);
    CHECK(back == w);
    ++tested;
  }
}

TEST_CASE("fox_derivative base rules") {
  const GroupRingElement da = fox_derivative(W("a"), Gen::A);
  CHECK(da == GroupRingElement::one());

  CHECK(fox_derivative(W("b"), Gen::A).is_zero());

  const GroupRingElement dainv = fox_derivative(W("a^-1"), Gen::A);
  CHECK(dainv == GroupRingElement::from_word(W("a^-1"), -1));
}

TEST_CASE("fox_derivative product rule holds symbolically") {
  Rng rng(52);
  for (int t = 0; t < 200; ++t) {
    const Word u = rand_word(rng, 15);
    const Word v = rand_word(rng, 15);
    for (Gen g : {Gen::A, Gen::B}) {
      const GroupRingElement lhs = fox_derivative(u * v, g);
      const GroupRingElement rhs = fox_derivative(u, g) + u * fox_derivative(v, g);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("relator derivative equals its closed expression") {
  // d(w^n a w^-n b^-1)/da = w^n (1 + (1-a)(1 + w^-1 + ... + w^-(n-1)) a^-1 (1-b))
  const Word w = twist_knot_word();
  const GroupRingElement one = GroupRingElement::one();
  const GroupRingElement a = GroupRingElement::from_word(Word::gen(Gen::A));
  const GroupRingElement a_inv = GroupRingElement::from_word(Word::gen(Gen::A, -1));
  const GroupRingElement b = GroupRingElement::from_word(Word::gen(Gen::B));

  Rng rng(53);
  for (int n : {1, 2, 3}) {
    GroupRingElement tail = GroupRingElement::zero();
    for (int i = 0; i < n; ++i) tail = tail + GroupRingElement::from_word(w.pow(-i));
    const GroupRingElement closed = w.pow(n) * (one + (one - a) * tail * a_inv * (one - b));
    const GroupRingElement direct = fox_derivative(twist_knot_relator(n), Gen::A);
    CHECK(direct == closed);  // already equal in the free group ring

    for (const auto& smp : sample_roots(n, 3, rng)) {
      const SL2Assignment rho{rho_a(smp.pt.s), rho_b(smp.pt.s, smp.pt.u)};
      CHECK(max_norm(evaluate(direct, rho) - evaluate(closed, rho)) < 1e-9);
    }
  }
}

TEST_CASE("evaluate is linear and sends the empty word to I") {
  Rng rng(54);
  const SL2Assignment rho{rand_sl2(rng), rand_sl2(rng)};
  CHECK(max_norm(evaluate(GroupRingElement::one(), rho) - Mat2::identity()) == 0.0);

  const GroupRingElement two_a_minus_b =
      2 * GroupRingElement::from_word(W("a")) - GroupRingElement::from_word(W("b"));
  const Mat2 want = 2.0 * rho.a - rho.b;
  CHECK(max_norm(evaluate(two_a_minus_b, rho) - want) < 1e-14);
}

TEST_CASE("fundamental Fox identity") {
  Rng rng(55);
  for (int t = 0; t < 200; ++t) {
    const Word v = rand_word(rng, 30);
    const SL2Assignment rho{rand_sl2_bounded(rng), rand_sl2_bounded(rng)};
    const Mat2 lhs = evaluate_word(v, rho) - Mat2::identity();
    const Mat2 rhs = evaluate(fox_derivative(v, Gen::A), rho) * (rho.a - Mat2::identity()) +
                     evaluate(fox_derivative(v, Gen::B), rho) * (rho.b - Mat2::identity());
    CHECK(max_norm(lhs - rhs) < 1e-9);
  }
}

TEST_CASE("johnson_torsion pinned values") {
  // trefoil: tau = 2 at every root with x away from 2
  Rng rng(56);
  for (const auto& smp : sample_roots(1, 6, rng)) {
    const SL2Assignment rho{rho_a(smp.pt.s), rho_b(smp.pt.s, smp.pt.u)};
    const Complex tau = johnson_torsion(twist_knot_relator(1), rho, Gen::B);
    CHECK(std::abs(tau - 2.0) < 1e-9);
  }

  // figure-eight at x = 3, u = 2 + 2*sqrt(2): tau = 2 - 2x = -4
  const Complex s(2.618033988749895, 0.0);
  const Complex u(2.0 + 2.0 * std::sqrt(2.0), 0.0);
  const SL2Assignment rho{rho_a(s), rho_b(s, u)};
  CHECK(std::abs(johnson_torsion(twist_knot_relator(-1), rho, Gen::B) - (-4.0)) < 1e-8);
}

TEST_CASE("both column choices agree in modulus") {
  Rng rng(57);
  for (const auto& smp : sample_roots(2, 8, rng)) {
    const SL2Assignment rho{rho_a(smp.pt.s), rho_b(smp.pt.s, smp.pt.u)};
    const Word rel = twist_knot_relator(2);
    const Complex tau_b = johnson_torsion(rel, rho, Gen::B);
    const Complex tau_a = johnson_torsion(rel, rho, Gen::A);
    CHECK(std::abs(std::abs(tau_a) - std::abs(tau_b)) <= 1e-8 * (1.0 + std::abs(tau_b)));
  }
}

TEST_CASE("parabolic meridian is rejected") {
  // s = 1 makes det(rho(b) - I) vanish
  const SL2Assignment rho{rho_a(Complex(1.0)), rho_b(Complex(1.0), Complex(0.5))};
  CHECK_THROWS_AS(johnson_torsion(twist_knot_relator(1), rho, Gen::B), std::domain_error);
}

TEST_CASE("gauge invariance of the determinant torsion") {
  Rng rng(58);
  for (int n : {1, -1, 2, -2}) {
    for (const auto& smp : sample_roots(n, 4, rng)) {
      const Word rel = twist_knot_relator(n);
      const SL2Assignment rho{rho_a(smp.pt.s), rho_b(smp.pt.s, smp.pt.u)};
      const Mat2 g = rand_sl2_bounded(rng);
      const SL2Assignment conj{g * rho.a * g.inverse(), g * rho.b * g.inverse()};
      const Complex base = johnson_torsion(rel, rho, Gen::B);
      const Complex moved = johnson_torsion(rel, conj, Gen::B);
      CHECK(std::abs(base - moved) <= 1e-8 * (1.0 + std::abs(base)));
    }
  }
}
