#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ga3/error.hpp"
#include "ga3/matrix.hpp"
#include "ga3/multivector.hpp"
#include "ga3/random.hpp"
#include "support/oracles.hpp"

using namespace ga3;
using namespace ga3::basis;

namespace {
const Multivector kI = basis::i;
}

TEST_CASE("product table reproduces the basis relations") {
  CHECK(e1 * e2 == e12);
  CHECK(e2 * e1 == -e12);
  CHECK(e1 * e1 == one);
  CHECK(e2 * e2 == one);
  CHECK(e3 * e3 == one);
  CHECK(e23 * e23 == -one);
  CHECK(e13 * e13 == -one);
  CHECK(e12 * e12 == -one);
  CHECK(e123 * e123 == -one);
  CHECK(e1 * e2 * e3 == e123);
  CHECK(e2 * e3 == e23);
  CHECK(e1 * e3 == e13);
}

TEST_CASE("generators anticommute") {
  const std::array<Multivector, 3> gens{e1, e2, e3};
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t k = 0; k < 3; ++k) {
      if (j != k) CHECK(gens[j] * gens[k] == -(gens[k] * gens[j]));
    }
  }
}

TEST_CASE("product agrees with generator-word oracle on every blade pair") {
  for (std::size_t a = 0; a < kBladeCount; ++a) {
    for (std::size_t b = 0; b < kBladeCount; ++b) {
      const Multivector x = Multivector::basis(static_cast<Blade>(a));
      const Multivector y = Multivector::basis(static_cast<Blade>(b));
      CHECK(x * y == oracle::brute_force_product(x, y));
    }
  }
}

TEST_CASE("product is represented by Pauli matrices") {
  Sampler rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Multivector g = rng.multivector();
    const Multivector h = rng.multivector();
    const auto lhs = oracle::to_cmat(to_matrix(g * h).m);
    const auto rhs = oracle::mat_mul(oracle::pauli_image(g), oracle::pauli_image(h));
    CHECK(oracle::mat_diff(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("associativity and center") {
  Sampler rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const Multivector a = rng.multivector();
    const Multivector b = rng.multivector();
    const Multivector c = rng.multivector();
    CHECK(approx_equal((a * b) * c, a * (b * c)));
    CHECK(approx_equal(kI * a, a * kI));
  }
}

TEST_CASE("grade projection") {
  CHECK(grade(one + e1 + e12, 1) == e1);
  CHECK(grade(e1 * e2, 2) == e12);
  const Multivector z = embed(ComplexScalar{1, 2}) * embed(ComplexScalar{-3, 0.5});
  CHECK(grade(z, 0) + grade(z, 3) == z);

  Sampler rng(3);
  const Multivector g = rng.multivector();
  CHECK(grade(g, 0) + grade(g, 1) + grade(g, 2) + grade(g, 3) == g);

  CHECK_THROWS_AS(grade(g, 4), Error);
  try {
    grade(g, -1);
  } catch (const Error& err) {
    CHECK(err.code() == Errc::GradeOutOfRange);
  }
}

TEST_CASE("conjugations") {
  const Multivector g({1, 2, 3, 4, 5, 6, 7, 8});
  // s + v + B + T
  CHECK(reverse(g) == Multivector({1, 2, 3, 4, -5, -6, -7, -8}));
  CHECK(grade_involution(g) == Multivector({1, -2, -3, -4, 5, 6, 7, -8}));
  CHECK(clifford_conjugation(g) == Multivector({1, -2, -3, -4, -5, -6, -7, 8}));

  CHECK(reverse(e1 * e2) == -e12);
  CHECK(reverse(kI) == -kI);
  CHECK(grade_involution(e1) == -e1);
  CHECK(grade_involution(e12) == e12);
  CHECK(clifford_conjugation(e1) == -e1);
  CHECK(clifford_conjugation(kI) == kI);

  Sampler rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Multivector a = rng.multivector();
    const Multivector b = rng.multivector();
    CHECK(reverse(reverse(a)) == a);
    CHECK(grade_involution(grade_involution(a)) == a);
    CHECK(clifford_conjugation(a) == reverse(grade_involution(a)));
    CHECK(clifford_conjugation(a) == grade_involution(reverse(a)));
    CHECK(approx_equal(reverse(a * b), reverse(b) * reverse(a)));
    CHECK(approx_equal(grade_involution(a * b), grade_involution(a) * grade_involution(b)));
  }
}

TEST_CASE("vector products") {
  CHECK(inner(kE1, kE2) == 0.0);
  CHECK(inner(kE1, kE1) == 1.0);
  CHECK(outer(kE1, kE2) == e12);
  CHECK(outer(kE1, kE2) == kI * e3);

  Sampler rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const Vector3 a = rng.vector();
    const Vector3 b = rng.vector();
    const Vector3 c = rng.vector();
    const Multivector ab = embed(a) * embed(b);
    // ab = a.b + a^b
    CHECK(approx_equal(ab, Multivector(inner(a, b)) + outer(a, b)));
    CHECK(approx_equal(Multivector(inner(a, b)), grade((ab + embed(b) * embed(a)) * 0.5, 0)));
    // a . (b ^ c) = -a x (b x c)
    const Multivector bc = outer(b, c);
    const Multivector a_dot_bc = (embed(a) * bc - bc * embed(a)) * 0.5;
    const Vector3 expected = -cross(a, cross(b, c));
    CHECK(approx_equal(a_dot_bc, embed(expected)));
    // general inner/outer agree with the vector definitions
    CHECK(approx_equal(inner_product(embed(a), embed(b)), Multivector(inner(a, b))));
    CHECK(approx_equal(outer_product(embed(a), embed(b)), outer(a, b)));
  }
}

TEST_CASE("triple wedge") {
  CHECK(triple_wedge(kE1, kE2, kE3) == kI);
  CHECK(triple_wedge(kE1, kE1, kE2) == Multivector{});
  Sampler rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const Vector3 a = rng.vector();
    const Vector3 b = rng.vector();
    const Vector3 c = rng.vector();
    const Multivector t = triple_wedge(a, b, c);
    CHECK(t[Blade::E123] == doctest::Approx(oracle::det3(a, b, c)).epsilon(1e-12));
    CHECK(approx_equal(triple_wedge(b, a, c), -t));
    CHECK(approx_equal(outer_product(outer_product(embed(a), embed(b)), embed(c)), t));
  }
}

TEST_CASE("exponential") {
  CHECK(approx_equal(exp(e12 * (std::numbers::pi / 2)), e12));
  CHECK(exp(Multivector{}) == one);
  // Hyperbolic Euler identity, closed form vs raw series.
  const Multivector expected = Multivector(std::cosh(1.0)) + e1 * std::sinh(1.0);
  CHECK(approx_equal(exp(e1), expected));

  Sampler rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    const Multivector a = rng.multivector(2.0);
    const auto via_matrix = oracle::expm(oracle::pauli_image(a));
    CHECK(oracle::mat_diff(oracle::to_cmat(to_matrix(exp(a)).m), via_matrix) < 1e-11);
  }
  // exp(a) exp(-a) = 1
  const Multivector a = rng.multivector();
  CHECK(approx_equal(exp(a) * exp(-a), one));

  CHECK_THROWS_AS(exp(e1, 0.0), Error);
  // A general complex vector goes through the series; large arguments exhaust it.
  const Multivector big = (e1 + kI * e1 * 0.5) * 100.0;
  CHECK_THROWS_AS(exp(big), Error);
}

TEST_CASE("inverse") {
  CHECK(inverse(e1) == e1);
  try {
    inverse(u_plus);
    FAIL("expected NonInvertible");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::NonInvertible);
  }
  CHECK_THROWS_AS(inverse(e1 + kI * e2), Error);  // null vector

  Sampler rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const Multivector g = rng.multivector();
    const Multivector b = rng.multivector();
    if (complex_part(g * clifford_conjugation(g)).abs() < 0.05) continue;
    CHECK(max_abs_diff(g * inverse(g), one) < 1e-12);
    // cancellation
    CHECK(approx_equal(inverse(g) * (g * b), b, 1e-10));
  }
  const Multivector v = embed(Vector3{0.3, -2.0, 1.1});
  CHECK(approx_equal(inverse(v) * v, one));
}

TEST_CASE("approx_equal tolerance") {
  CHECK(approx_equal(one, one + e1 * 1e-13));
  CHECK_FALSE(approx_equal(one, one + e1 * 1e-9));
  CHECK(approx_equal(one * 1e6, one * 1e6 + e1 * 1e-7));
}

TEST_CASE("pretty printing") {
  CHECK(to_string(one + e12 * 2.0) == "1 + 2e12");
  CHECK(to_string(e1 * e2 * e3) == "e123");
  CHECK(to_string(Multivector{}) == "0");
  CHECK(to_string(-e1 - e23 * 0.5) == "-e1 - 0.5e23");
  CHECK(to_string(exp(e12 * (std::numbers::pi / 2))) == "e12");
}
