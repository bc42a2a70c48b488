#pragma once

#include <utility>

#include "ga3/matrix.hpp"
#include "ga3/spinor.hpp"

namespace ga3 {

// N = z1 e1 + z2 e2 + z3 e3 with z1^2 + z2^2 + z3^2 = 0.
struct NullVector {
  ComplexScalar z1;
  ComplexScalar z2;
  ComplexScalar z3;

  ComplexScalar quadratic_form() const { return z1 * z1 + z2 * z2 + z3 * z3; }
  // Real part r and imaginary part s of N = r + i s.
  Vector3 real_part() const { return {z1.re, z2.re, z3.re}; }
  Vector3 imag_part() const { return {z1.im, z2.im, z3.im}; }
  Multivector to_multivector() const;
};

// N = (a0^2 - a1^2) e1 + (a0^2 + a1^2) i e2 - 2 a0 a1 e3.
NullVector cartan_null(const KetSpinor& k);

// The same vector computed as |alpha> e1 cc(|alpha>).
Multivector cartan_null_product(const KetSpinor& k);

// Both spinors (+k, -k) whose null vector is N. alpha0 = sqrt((z1 - i z2)/2)
// and alpha1 = i sqrt((z1 + i z2)/2) on the principal branch, with the sign
// of alpha1 fixed by -2 alpha0 alpha1 = z3. Throws Error{NotNull}.
std::pair<KetSpinor, KetSpinor> cartan_inverse(const NullVector& n, double tol = kConstraintTol);

// formA = -2 rho^2 e^{2 i theta} a+ m e1 m
// formB = -rho^2 e^{2 i theta} m (e1 + i e2) m
// Throws Error{ZeroAlpha0} when alpha0 vanishes.
struct NullCanonicalForms {
  Multivector form_a;
  Multivector form_b;
};
NullCanonicalForms null_canonical_forms(const KetSpinor& k, double tol = kConstraintTol);

// psi = (|alpha> + grade_involution(|alpha>)) / sqrt(2)
//     = (a0 + a1 e1) u+ + (conj a0 - conj a1 e1) u-
struct SpinorOperator {
  Multivector psi;

  Matrix2C matrix() const { return to_matrix(psi); }
  // Two-sided action psi x psi^dagger.
  Multivector sandwich(const Multivector& x) const { return psi * x * reverse(psi); }
};

SpinorOperator spinor_operator(const KetSpinor& k);

}  // namespace ga3
