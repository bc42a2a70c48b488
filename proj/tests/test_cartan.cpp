#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ga3/cartan.hpp"
#include "ga3/error.hpp"
#include "ga3/random.hpp"
#include "support/oracles.hpp"

using namespace ga3;
using namespace ga3::basis;

namespace {

constexpr ComplexScalar I{0.0, 1.0};

double ket_diff_up_to_sign(const KetSpinor& a, const KetSpinor& b) {
  return std::min(max_abs_diff(a, b), max_abs_diff(a, -b));
}

double vdiff(const Vector3& a, const Vector3& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

}  // namespace

TEST_CASE("cartan_null closed form") {
  const NullVector n = cartan_null(kKetZero);
  CHECK(n.z1 == ComplexScalar{1.0});
  CHECK(n.z2 == I);
  CHECK(n.z3 == ComplexScalar{0.0});
  CHECK(n.to_multivector() == e1 + I * e2);
  // Real and imaginary vector parts are orthogonal with equal length.
  CHECK(vdiff(n.real_part(), kE1) == 0.0);
  CHECK(vdiff(n.imag_part(), kE2) == 0.0);

  Sampler rng(301);
  for (int trial = 0; trial < 1000; ++trial) {
    const KetSpinor k = rng.ket();
    const NullVector v = cartan_null(k);
    CHECK(v.quadratic_form().abs() < 1e-10);
    CHECK(std::abs(inner(v.real_part(), v.imag_part())) < 1e-12);
    CHECK(std::abs(v.real_part().norm_sq() - v.imag_part().norm_sq()) < 1e-12);
    CHECK(max_abs_diff(cartan_null_product(k), v.to_multivector()) < 1e-10);
    // N^2 = 0 in the algebra
    CHECK((v.to_multivector() * v.to_multivector()).max_norm() < 1e-10);
  }
}

TEST_CASE("null vector through the Pauli oracle") {
  // [N] = 2 [a0; a1] [a0, a1] J with J the symplectic form, built with std::complex only.
  Sampler rng(303);
  for (int trial = 0; trial < 200; ++trial) {
    const KetSpinor k = rng.ket();
    const oracle::cd a0{k.a0.re, k.a0.im};
    const oracle::cd a1{k.a1.re, k.a1.im};
    const oracle::CMat col_row{{{a0 * a0, a0 * a1}, {a1 * a0, a1 * a1}}};
    const oracle::CMat j{{{oracle::cd{0}, oracle::cd{1}}, {oracle::cd{-1}, oracle::cd{0}}}};
    const oracle::CMat expected = oracle::mat_scale(oracle::cd{2}, oracle::mat_mul(col_row, j));
    const auto actual = oracle::pauli_image(cartan_null(k).to_multivector());
    CHECK(oracle::mat_diff(actual, expected) < 1e-12);
  }
}

TEST_CASE("cartan_inverse") {
  const auto [p, q] = cartan_inverse(NullVector{1.0, I, 0.0});
  CHECK(ket_diff_up_to_sign(p, kKetZero) < 1e-15);
  CHECK(max_abs_diff(q, -p) == 0.0);

  try {
    cartan_inverse(NullVector{1.0, 0.0, 0.0});
    FAIL("expected NotNull");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::NotNull);
    CHECK(err.residual() == doctest::Approx(1.0));
  }

  // alpha0 = 0 branch: z1 = i z2
  const KetSpinor south{0.0, ComplexScalar{0.3, -0.8}};
  const NullVector ns = cartan_null(south);
  CHECK((ns.z1 - I * ns.z2).abs() < 1e-15);
  const auto [s1, s2] = cartan_inverse(ns);
  CHECK(ket_diff_up_to_sign(s1, south) < 1e-12);
  CHECK(max_abs_diff(s2, -s1) == 0.0);

  // alpha1 = 0 branch: z1 = -i z2
  const KetSpinor north{ComplexScalar{-0.2, 0.9}, 0.0};
  CHECK(ket_diff_up_to_sign(cartan_inverse(cartan_null(north)).first, north) < 1e-12);

  Sampler rng(305);
  for (int trial = 0; trial < 1000; ++trial) {
    const KetSpinor k = rng.ket();
    const NullVector n = cartan_null(k);
    const auto [a, b] = cartan_inverse(n);
    CHECK(ket_diff_up_to_sign(a, k) < 1e-9);
    CHECK(max_abs_diff(b, -a) == 0.0);
    for (const KetSpinor& r : {a, b}) {
      const NullVector back = cartan_null(r);
      CHECK(max_abs_diff(back.to_multivector(), n.to_multivector()) < 1e-9);
    }
  }
}

TEST_CASE("null canonical forms") {
  const auto base = null_canonical_forms(kKetZero);
  CHECK(max_abs_diff(base.form_a, e1 + I * e2) < 1e-15);
  CHECK(max_abs_diff(base.form_b, e1 + I * e2) < 1e-15);
  // The k = (1,0) case written out: -2 u+ e3 e1 e3.
  CHECK(max_abs_diff(-2.0 * u_plus * e3 * e1 * e3, e1 + I * e2) < 1e-15);

  CHECK_THROWS_AS(null_canonical_forms(kKetOne), Error);

  const double rho = 1.7;
  const NullVector scaled = cartan_null({rho, 0.0});
  CHECK(max_abs_diff(scaled.to_multivector(), (rho * rho) * (e1 + I * e2)) < 1e-14);

  Sampler rng(307);
  for (int trial = 0; trial < 1000; ++trial) {
    const KetSpinor k = rng.normalized_ket();
    if (k.a0.abs() < 1e-3) continue;
    const auto forms = null_canonical_forms(k);
    const Multivector closed = cartan_null(k).to_multivector();
    CHECK(max_abs_diff(forms.form_a, closed) < 1e-9);
    CHECK(max_abs_diff(forms.form_b, closed) < 1e-9);
    CHECK(max_abs_diff(forms.form_a, forms.form_b) < 1e-9);
  }
}

TEST_CASE("spinor operator") {
  CHECK(spinor_operator(kKetZero).psi == one);

  Sampler rng(309);
  for (int trial = 0; trial < 1000; ++trial) {
    const KetSpinor k = rng.ket();
    const SpinorOperator op = spinor_operator(k);
    const Matrix2C m = op.matrix();
    CHECK((m(0, 0) - k.a0).abs() < 1e-12);
    CHECK((m(1, 0) - k.a1).abs() < 1e-12);
    CHECK((m(0, 1) + k.a1.conj()).abs() < 1e-12);
    CHECK((m(1, 1) - k.a0.conj()).abs() < 1e-12);
    CHECK((m.det() - ComplexScalar{k.norm() * k.norm()}).abs() < 1e-12);
    CHECK(max_abs_diff(op.psi * (std::numbers::sqrt2 * u_plus), k.to_multivector()) < 1e-12);
  }

  for (int trial = 0; trial < 1000; ++trial) {
    const KetSpinor k = rng.normalized_ket();
    const SpinorOperator op = spinor_operator(k);
    const Vector3 a = a_hat_from_ket(k);
    CHECK((op.matrix().det() - ComplexScalar{1.0}).abs() < 1e-10);
    CHECK(max_abs_diff(op.psi * reverse(op.psi), one) < 1e-10);
    CHECK(max_abs_diff(op.sandwich(e3), embed(a)) < 1e-10);
    CHECK(max_abs_diff(op.sandwich(u_plus), simple_idempotent(a).to_multivector()) < 1e-10);
    // psi = e^{i c omega}
    const CanonicalForm f = canonical_form(k);
    CHECK(max_abs_diff(op.psi, exp(I * embed(f.c_hat) * f.omega)) < 1e-10);
  }
}

TEST_CASE("SU(2) closure") {
  Sampler rng(311);
  for (int trial = 0; trial < 500; ++trial) {
    const Multivector g =
        spinor_operator(rng.normalized_ket()).psi * spinor_operator(rng.normalized_ket()).psi;
    CHECK((to_matrix(g).det() - ComplexScalar{1.0}).abs() < 1e-10);
    CHECK(max_abs_diff(g * reverse(g), one) < 1e-10);
    // the product is again a spinor operator: that of its own first column
    const KetSpinor col = KetSpinor::from_ideal(g * (std::numbers::sqrt2 * u_plus));
    CHECK(max_abs_diff(spinor_operator(col).psi, g) < 1e-10);
  }
}

TEST_CASE("null vector is a reflection of e1 + i e2") {
  Sampler rng(313);
  for (int trial = 0; trial < 200; ++trial) {
    const KetSpinor k = rng.normalized_ket();
    if (k.a0.abs() < 1e-3) continue;
    const CanonicalForm f = canonical_form(k);
    const Multivector m = embed(f.m_hat);
    const Multivector reflected = m * (e1 + I * e2) * m;
    // m (e1 + i e2) m is again null
    CHECK((reflected * reflected).max_norm() < 1e-10);
    const Multivector phase = embed(polar(1.0, 2.0 * f.theta));
    CHECK(max_abs_diff(-1.0 * phase * reflected, cartan_null(k).to_multivector()) < 1e-10);
  }
}
