#include "ga3/cartan.hpp"

#include <cmath>
#include <numbers>

#include "ga3/error.hpp"

namespace ga3 {

namespace {
constexpr ComplexScalar kI{0.0, 1.0};
}

Multivector NullVector::to_multivector() const {
  return z1 * basis::e1 + z2 * basis::e2 + z3 * basis::e3;
}

NullVector cartan_null(const KetSpinor& k) {
  const ComplexScalar a0_sq = k.a0 * k.a0;
  const ComplexScalar a1_sq = k.a1 * k.a1;
  return {a0_sq - a1_sq, kI * (a0_sq + a1_sq), ComplexScalar{-2.0} * k.a0 * k.a1};
}

Multivector cartan_null_product(const KetSpinor& k) {
  const Multivector ket = k.to_multivector();
  return ket * basis::e1 * clifford_conjugation(ket);
}

std::pair<KetSpinor, KetSpinor> cartan_inverse(const NullVector& n, double tol) {
  const double scale = n.z1.norm_sq() + n.z2.norm_sq() + n.z3.norm_sq();
  const double residual = n.quadratic_form().abs();
  if (residual > tol * std::max(1.0, scale)) {
    throw Error(Errc::NotNull, "vector is not null", residual);
  }
  const ComplexScalar half{0.5};
  const ComplexScalar a0 = sqrt(half * (n.z1 - kI * n.z2));
  ComplexScalar a1 = kI * sqrt(half * (n.z1 + kI * n.z2));
  const ComplexScalar minus_two{-2.0};
  if ((minus_two * a0 * a1 - n.z3).abs() > (minus_two * a0 * -a1 - n.z3).abs()) a1 = -a1;
  const KetSpinor k{a0, a1};
  return {k, -k};
}

NullCanonicalForms null_canonical_forms(const KetSpinor& k, double tol) {
  const CanonicalForm f = canonical_form(k, tol);
  if (f.alpha0_zero) {
    throw Error(Errc::ZeroAlpha0, "null canonical forms need alpha0 != 0", k.a0.abs());
  }
  const Multivector phase = embed(polar(f.rho * f.rho, 2.0 * f.theta));
  const Multivector m = embed(f.m_hat);
  const Multivector a_plus = simple_idempotent(f.a_hat).to_multivector();
  const Multivector e1_plus_ie2 = basis::e1 + kI * basis::e2;
  return {
      -2.0 * phase * a_plus * m * basis::e1 * m,
      -1.0 * phase * m * e1_plus_ie2 * m,
  };
}

SpinorOperator spinor_operator(const KetSpinor& k) {
  const Multivector ket = k.to_multivector();
  return {(ket + grade_involution(ket)) / std::numbers::sqrt2};
}

}  // namespace ga3
