#pragma once

#include <array>
#include <utility>

#include "ga3/multivector.hpp"

namespace ga3 {

// ---------------------------------------------------------------------------
// Idempotents
// ---------------------------------------------------------------------------

// s = (1 + m + i n) / 2 with m^2 - n^2 = 1 and m . n = 0. Only constructible
// through make_idempotent / simple_idempotent / idempotent_from_ket, which
// validate the constraints.
class Idempotent {
 public:
  const Vector3& m() const { return m_; }
  const Vector3& n() const { return n_; }
  Multivector to_multivector() const;

 private:
  Idempotent(const Vector3& m, const Vector3& n) : m_(m), n_(n) {}
  friend Idempotent make_idempotent(const Vector3& m, const Vector3& n);

  Vector3 m_;
  Vector3 n_;
};

// Throws Error{ConstraintViolated} when |m^2 - n^2 - 1| or |m . n| exceeds
// kConstraintTol; the error's residual() is the larger of the two.
Idempotent make_idempotent(const Vector3& m, const Vector3& n);

// a+ = (1 + a)/2. Throws Error{NotUnit}.
Idempotent simple_idempotent(const Vector3& a_hat);

// s = msq * a+ * b+ with a = m b m (m unit) and msq = m^2 = 2 / (1 + a . b).
struct IdempotentFactors {
  double msq;
  Vector3 a_hat;
  Vector3 b_hat;
};
IdempotentFactors factor_idempotent(const Idempotent& s);

// m + i n = exp(-phi i m n / 2) m exp(phi i m n / 2) with cosh(phi) = |m|.
// When n = 0 the boost axis is undefined: phi = 0 and n_hat is an arbitrary
// unit vector perpendicular to m_hat, flagged by n_hat_arbitrary.
struct BoostDecomposition {
  double phi;
  Vector3 m_hat;
  Vector3 n_hat;
  // Spin velocity v/c = -(m x n) tanh(phi).
  Vector3 velocity;
  bool n_hat_arbitrary;
};
BoostDecomposition boost_decomposition(const Idempotent& s);

// ---------------------------------------------------------------------------
// Ket spinors
// ---------------------------------------------------------------------------

// |alpha> = sqrt(2) (alpha0 + alpha1 e1) u+, the minimal-left-ideal image of
// the Pauli column (alpha0, alpha1).
struct KetSpinor {
  ComplexScalar a0;
  ComplexScalar a1;

  Multivector to_multivector() const;
  // Reads (alpha0, alpha1) off the first column of an element of G3 u+.
  static KetSpinor from_ideal(const Multivector& ideal_element);

  double norm() const;
  KetSpinor normalized() const;

  friend KetSpinor operator*(ComplexScalar z, const KetSpinor& k) { return {z * k.a0, z * k.a1}; }
  friend KetSpinor operator-(const KetSpinor& k) { return {-k.a0, -k.a1}; }
};

inline KetSpinor ket_from_complex(ComplexScalar a0, ComplexScalar a1) { return {a0, a1}; }

// |0> = sqrt(2) u+ and |1> = sqrt(2) e1 u+.
inline constexpr KetSpinor kKetZero{{1.0, 0.0}, {0.0, 0.0}};
inline constexpr KetSpinor kKetOne{{0.0, 0.0}, {1.0, 0.0}};

// Max-abs difference over the four real components.
double max_abs_diff(const KetSpinor& a, const KetSpinor& b);

// The ket sqrt(2) v u+ for a unit vector v; its Bloch vector is v e3 v.
KetSpinor ket_of_direction(const Vector3& v_hat);

// s = (1 + z e1) u+ with z = alpha1 / alpha0. Throws Error{ZeroAlpha0}.
Idempotent idempotent_from_ket(const KetSpinor& k, double tol = kConstraintTol);

// The point on the unit sphere, a = m e3 m. Throws Error{ZeroSpinor}.
Vector3 a_hat_from_ket(const KetSpinor& k, double tol = kConstraintTol);

// Planar projection x = P_xy(m).
struct PlanePoint {
  double x;
  double y;
};
PlanePoint stereographic_project(const Vector3& m);

// z = (a1 + i a2) / (1 + a3). Throws Error{SouthPole} when 1 + a3 <= tol.
ComplexScalar inverse_stereographic(const Vector3& a_hat, double tol = kConstraintTol);

// For m = x + e3 with x in the e1e2 plane: m_perp = -1/x + e3.
// Throws Error{DegenerateX} when |x| <= tol, Error{ConstraintViolated} when
// the e3 component of m is not 1.
Vector3 perp_vector(const Vector3& m, double tol = kConstraintTol);

// <alpha|beta> = conj(a0) b0 + conj(a1) b1.
ComplexScalar inner_product(const KetSpinor& a, const KetSpinor& b);
double norm(const KetSpinor& k);

// |alpha> = sqrt(2) rho e^{i theta} m u+
//         = sqrt(2) rho e^{i(theta + v phi)} u+
//         = sqrt(2) rho e^{i v phi} e^{i e3 theta} u+
//         = sqrt(2) rho e^{i c omega} u+
struct CanonicalForm {
  double rho = 0.0;
  double theta = 0.0;  // [0, 2pi)
  Vector3 m_hat;
  Vector3 a_hat;
  double phi = 0.0;  // [0, pi/2]
  Vector3 v_hat;
  double omega = 0.0;  // [0, pi]
  Vector3 c_hat;

  // alpha0 == 0: theta reported as 0.
  bool alpha0_zero = false;
  // m_hat == e3: phi = 0 and v_hat is arbitrary (e1).
  bool v_hat_degenerate = false;
  // |x0| == rho: omega in {0, pi} and c_hat is arbitrary (e3).
  bool c_hat_degenerate = false;
};

// Throws Error{ZeroSpinor} when norm(k) <= tol.
CanonicalForm canonical_form(const KetSpinor& k, double tol = kConstraintTol);

// The four ideal elements rebuilt from each line of the canonical form, in
// the order listed on CanonicalForm.
std::array<Multivector, 4> canonical_reconstructions(const CanonicalForm& f);

// (1/2)|alpha><alpha|, which equals the simple idempotent a+. Throws
// Error{NotNormalized} when |norm(k) - 1| >= kConstraintTol.
Multivector ket_bra(const KetSpinor& k);

// Throws Error{NotNormalized} unless |norm(k) - 1| < kConstraintTol.
void require_normalized(const KetSpinor& k);

}  // namespace ga3
