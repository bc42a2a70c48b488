#pragma once

#include <utility>
#include <vector>

#include "ga3/matrix.hpp"
#include "ga3/spinor.hpp"

namespace ga3 {

// A self-reverse element S = s0 + s.
struct Observable {
  double s0 = 0.0;
  Vector3 s;

  Multivector to_multivector() const { return Multivector(s0) + embed(s); }
};

// [[s0 + s3, s1 - i s2], [s1 + i s2, s0 - s3]]
Matrix2C to_hermitian(const Observable& S);

// S = lambda_plus p_plus + lambda_minus p_minus, p_pm = (1 +- s_hat)/2.
// For s = 0 both eigenvalues equal s0 and the projectors use s_hat = e3.
struct SpectralDecomposition {
  double lambda_plus;
  double lambda_minus;
  Idempotent p_plus;
  Idempotent p_minus;
  bool degenerate;
};
SpectralDecomposition spectral_decompose(const Observable& S, double tol = kConstraintTol);

// Normalized eigenkets built from the nonzero column of [s_hat_pm].
// Throws Error{DegenerateObservable} when |s| <= tol.
struct Eigenket {
  double eigenvalue;
  KetSpinor ket;
};
std::pair<Eigenket, Eigenket> eigenkets(const Observable& S, double tol = kConstraintTol);

// <S> = s0 + s . a_hat. Throws Error{NotNormalized}.
double expectation(const Observable& S, const KetSpinor& k);

// sigma_S = |s x a_hat|. Throws Error{NotNormalized}.
double std_deviation(const Observable& S, const KetSpinor& k);

// (s x a)^2 (t x a)^2 = |(s x a).(t x a)|^2 + |(s x t).a|^2
struct UncertaintyCheck {
  double lhs;
  double rhs;
  double residual;
};
// Throws Error{NotUnit} when |a_hat| deviates from 1 by more than kConstraintTol.
UncertaintyCheck uncertainty_identity(const Vector3& s, const Vector3& t, const Vector3& a_hat);

// |<alpha|beta>|^2. Throws Error{NotNormalized}.
double transition_probability(const KetSpinor& a, const KetSpinor& b);

// (1 + a . b) / 2 for Bloch vectors a, b.
inline double bloch_transition_probability(const Vector3& a_hat, const Vector3& b_hat) {
  return 0.5 * (1.0 + inner(a_hat, b_hat));
}

struct EvolutionConfig {
  double hbar = 1.0;
  std::vector<double> t_grid;
  double theta0 = 0.0;  // phase of the initial state e^{i theta0}|0>
};

// n evenly spaced times from 0 to t_max inclusive (n >= 2).
std::vector<double> uniform_grid(double t_max, int n);

struct EvolutionSample {
  double t;
  KetSpinor ket;
  Vector3 a_hat;
};

// Closed-form solution of i hbar d|alpha>/dt = H|alpha> from |alpha(0)> = e^{i theta0}|0>:
//   sqrt(2) e^{-i s0 t / hbar} (cos(|s| t / hbar) - i s_hat sin(|s| t / hbar)) u+
// Throws Error{InvalidConfig} for hbar <= 0 or a grid that is not strictly increasing.
std::vector<EvolutionSample> evolve(const Observable& H, const EvolutionConfig& cfg);

// Max over interior grid points of || i hbar D_t alpha - [H] alpha ||, with
// D_t the centered difference (alpha_{k+1} - alpha_{k-1}) / (t_{k+1} - t_{k-1}).
double schrodinger_residual(const Observable& H, double hbar,
                            const std::vector<EvolutionSample>& trajectory);

struct NeutrinoSample {
  double t;
  double p_electron;
  double p_muon;
};

// Two-flavor oscillation for H = s0 + s with s perpendicular to e3. The
// electron state is |e3> = |0>; the muon state is e^{-i s0 pi / (2|s|)}
// sqrt(2) x_hat u+ with x_hat = s_hat x e3, which sits at the south pole.
// Throws Error{NotTransverse} when s has an e3 component, and
// Error{DegenerateObservable} when s = 0.
std::vector<NeutrinoSample> neutrino_oscillation(const Observable& H, const EvolutionConfig& cfg);

// Both reference kets used by neutrino_oscillation.
std::pair<KetSpinor, KetSpinor> neutrino_flavor_states(const Observable& H);

// True when s is perpendicular to e3 within tolerance and nonzero.
bool is_transverse(const Observable& H, double tol = kConstraintTol);

}  // namespace ga3
