#include "ga3/spinor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ga3/error.hpp"
#include "ga3/matrix.hpp"

namespace ga3 {

namespace {

constexpr ComplexScalar kI{0.0, 1.0};
constexpr double kDirectionTol = 1e-12;

Multivector pseudo_vector(const Vector3& v, double scale) { return kI * embed(v * scale); }

}  // namespace

Multivector Idempotent::to_multivector() const {
  return (Multivector(1.0) + embed(m_) + kI * embed(n_)) * 0.5;
}

Idempotent make_idempotent(const Vector3& m, const Vector3& n) {
  const double norm_residual = std::abs(m.norm_sq() - n.norm_sq() - 1.0);
  const double ortho_residual = std::abs(inner(m, n));
  if (norm_residual > kConstraintTol || ortho_residual > kConstraintTol) {
    const double r = std::max(norm_residual, ortho_residual);
    throw Error(Errc::ConstraintViolated,
                "idempotent requires m^2 - n^2 = 1 and m.n = 0 (residual " + std::to_string(r) +
                    ")",
                r);
  }
  return Idempotent(m, n);
}

Idempotent simple_idempotent(const Vector3& a_hat) {
  const double dev = std::abs(a_hat.norm() - 1.0);
  if (dev > kConstraintTol) {
    throw Error(Errc::NotUnit, "simple idempotent needs a unit vector", dev);
  }
  return make_idempotent(a_hat, Vector3{});
}

IdempotentFactors factor_idempotent(const Idempotent& s) {
  const double m_len = s.m().norm();
  const Vector3 m_hat = s.m() / m_len;
  // b = (m_hat + i m_hat n) / |m|, and i m_hat n = -(m_hat x n) since m . n = 0.
  const Vector3 b_hat = (m_hat - cross(m_hat, s.n())) / m_len;
  const Vector3 a_hat = 2.0 * inner(m_hat, b_hat) * m_hat - b_hat;
  return {s.m().norm_sq(), a_hat, b_hat};
}

BoostDecomposition boost_decomposition(const Idempotent& s) {
  BoostDecomposition out{};
  out.m_hat = s.m().normalized();
  const double n_len = s.n().norm();
  out.phi = std::asinh(n_len);
  if (n_len <= kDirectionTol) {
    out.phi = 0.0;
    const Vector3 seed = std::abs(out.m_hat.x) < 0.9 ? kE1 : kE2;
    out.n_hat = cross(out.m_hat, seed).normalized();
    out.n_hat_arbitrary = true;
    out.velocity = Vector3{};
    return out;
  }
  out.n_hat = s.n() / n_len;
  out.velocity = -cross(out.m_hat, out.n_hat) * std::tanh(out.phi);
  out.n_hat_arbitrary = false;
  return out;
}

Multivector KetSpinor::to_multivector() const {
  return (embed(a0) + a1 * basis::e1) * basis::u_plus * std::numbers::sqrt2;
}

KetSpinor KetSpinor::from_ideal(const Multivector& ideal_element) {
  const Matrix2C m = to_matrix(ideal_element);
  const ComplexScalar scale{1.0 / std::numbers::sqrt2};
  return {scale * m(0, 0), scale * m(1, 0)};
}

double KetSpinor::norm() const { return std::sqrt(a0.norm_sq() + a1.norm_sq()); }

KetSpinor KetSpinor::normalized() const {
  const double n = norm();
  return ComplexScalar{1.0 / n} * *this;
}

double max_abs_diff(const KetSpinor& a, const KetSpinor& b) {
  return std::max({std::abs(a.a0.re - b.a0.re), std::abs(a.a0.im - b.a0.im),
                   std::abs(a.a1.re - b.a1.re), std::abs(a.a1.im - b.a1.im)});
}

KetSpinor ket_of_direction(const Vector3& v_hat) {
  return KetSpinor::from_ideal(embed(v_hat) * basis::u_plus * std::numbers::sqrt2);
}

Idempotent idempotent_from_ket(const KetSpinor& k, double tol) {
  if (k.a0.abs() <= tol) {
    throw Error(Errc::ZeroAlpha0, "idempotent is only defined when alpha0 != 0", k.a0.abs());
  }
  const ComplexScalar z = k.a1 / k.a0;
  const Vector3 m{z.re, z.im, 1.0};
  // i n = m ^ e3 = i (m x e3)
  return make_idempotent(m, cross(m, kE3));
}

Vector3 a_hat_from_ket(const KetSpinor& k, double tol) {
  const double rho_sq = k.a0.norm_sq() + k.a1.norm_sq();
  if (rho_sq <= tol * tol) throw Error(Errc::ZeroSpinor, "zero spinor has no Bloch vector");
  const ComplexScalar cross_term = k.a0.conj() * k.a1;
  return Vector3{2.0 * cross_term.re, 2.0 * cross_term.im, k.a0.norm_sq() - k.a1.norm_sq()} /
         rho_sq;
}

PlanePoint stereographic_project(const Vector3& m) { return {m.x, m.y}; }

ComplexScalar inverse_stereographic(const Vector3& a_hat, double tol) {
  const double denom = 1.0 + a_hat.z;
  if (denom <= tol) throw Error(Errc::SouthPole, "south pole has no stereographic image", denom);
  return ComplexScalar{a_hat.x, a_hat.y} / ComplexScalar{denom};
}

Vector3 perp_vector(const Vector3& m, double tol) {
  const double lift = std::abs(m.z - 1.0);
  if (lift > tol) {
    throw Error(Errc::ConstraintViolated, "perp_vector expects m = x + e3", lift);
  }
  const Vector3 x{m.x, m.y, 0.0};
  const double x_sq = x.norm_sq();
  if (std::sqrt(x_sq) <= tol) {
    throw Error(Errc::DegenerateX, "m = e3 has no distinguished perpendicular");
  }
  return -x / x_sq + kE3;
}

ComplexScalar inner_product(const KetSpinor& a, const KetSpinor& b) {
  return a.a0.conj() * b.a0 + a.a1.conj() * b.a1;
}

double norm(const KetSpinor& k) { return k.norm(); }

CanonicalForm canonical_form(const KetSpinor& k, double tol) {
  CanonicalForm f;
  f.rho = k.norm();
  if (f.rho <= tol) throw Error(Errc::ZeroSpinor, "canonical form of the zero spinor");

  const double a0_abs = k.a0.abs();
  if (a0_abs <= tol * f.rho) {
    f.alpha0_zero = true;
    f.theta = 0.0;
    // With theta = 0, m u+ = (alpha1 / rho) e1 u+ forces a horizontal m.
    f.m_hat = Vector3{k.a1.re, k.a1.im, 0.0} / f.rho;
  } else {
    f.theta = k.a0.arg();
    if (f.theta < 0.0) f.theta += 2.0 * std::numbers::pi;
    if (f.theta >= 2.0 * std::numbers::pi) f.theta = 0.0;
    const ComplexScalar w = k.a1 * k.a0.conj();
    f.m_hat = Vector3{w.re, w.im, k.a0.norm_sq()} / (a0_abs * f.rho);
  }
  f.a_hat = a_hat_from_ket(k, tol);

  const Vector3 m_cross_e3 = cross(f.m_hat, kE3);
  const double sin_phi = m_cross_e3.norm();
  f.phi = std::atan2(sin_phi, std::clamp(f.m_hat.z, -1.0, 1.0));
  if (sin_phi <= kDirectionTol) {
    f.v_hat_degenerate = true;
    f.v_hat = kE1;
  } else {
    f.v_hat = m_cross_e3 / sin_phi;
  }

  // e^{i c omega} = psi / rho, whose matrix is [[a0, -conj a1], [a1, conj a0]] / rho.
  const double c_len = std::sqrt(k.a0.im * k.a0.im + k.a1.norm_sq());
  f.omega = std::atan2(c_len / f.rho, k.a0.re / f.rho);
  if (c_len <= kDirectionTol * f.rho) {
    f.c_hat_degenerate = true;
    f.c_hat = kE3;
  } else {
    f.c_hat = Vector3{k.a1.im, -k.a1.re, k.a0.im} / c_len;
  }
  return f;
}

std::array<Multivector, 4> canonical_reconstructions(const CanonicalForm& f) {
  const double scale = std::numbers::sqrt2 * f.rho;
  const Multivector& u = basis::u_plus;
  const Multivector phase = embed(polar(1.0, f.theta));
  const Multivector v_rot = exp(pseudo_vector(f.v_hat, f.phi));
  const Multivector e3_rot = exp(pseudo_vector(kE3, f.theta));
  return {
      scale * phase * embed(f.m_hat) * u,
      scale * exp(embed(ComplexScalar{0.0, f.theta}) + pseudo_vector(f.v_hat, f.phi)) * u,
      scale * v_rot * e3_rot * u,
      scale * exp(pseudo_vector(f.c_hat, f.omega)) * u,
  };
}

void require_normalized(const KetSpinor& k) {
  const double dev = std::abs(k.norm() - 1.0);
  if (dev >= kConstraintTol) throw Error(Errc::NotNormalized, "ket is not normalized", dev);
}

Multivector ket_bra(const KetSpinor& k) {
  require_normalized(k);
  const Multivector ket = k.to_multivector();
  return ket * reverse(ket) * 0.5;
}

}  // namespace ga3
