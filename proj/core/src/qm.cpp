#include "ga3/qm.hpp"

#include <cmath>
#include <numbers>

#include "ga3/error.hpp"

namespace ga3 {

namespace {

constexpr ComplexScalar kI{0.0, 1.0};

void validate(const EvolutionConfig& cfg) {
  if (!(cfg.hbar > 0.0)) throw Error(Errc::InvalidConfig, "hbar must be positive");
  for (std::size_t k = 1; k < cfg.t_grid.size(); ++k) {
    if (!(cfg.t_grid[k] > cfg.t_grid[k - 1])) {
      throw Error(Errc::InvalidConfig, "time grid must be strictly increasing");
    }
  }
}

KetSpinor apply(const Matrix2C& m, const KetSpinor& k) {
  return {m(0, 0) * k.a0 + m(0, 1) * k.a1, m(1, 0) * k.a0 + m(1, 1) * k.a1};
}

}  // namespace

Matrix2C to_hermitian(const Observable& S) {
  Matrix2C r;
  r(0, 0) = ComplexScalar{S.s0 + S.s.z};
  r(0, 1) = ComplexScalar{S.s.x, -S.s.y};
  r(1, 0) = ComplexScalar{S.s.x, S.s.y};
  r(1, 1) = ComplexScalar{S.s0 - S.s.z};
  return r;
}

SpectralDecomposition spectral_decompose(const Observable& S, double tol) {
  const double len = S.s.norm();
  const bool degenerate = len <= tol;
  const Vector3 s_hat = degenerate ? kE3 : S.s / len;
  const double spread = degenerate ? 0.0 : len;
  return {S.s0 + spread, S.s0 - spread, simple_idempotent(s_hat), simple_idempotent(-s_hat),
          degenerate};
}

std::pair<Eigenket, Eigenket> eigenkets(const Observable& S, double tol) {
  const SpectralDecomposition d = spectral_decompose(S, tol);
  if (d.degenerate) {
    throw Error(Errc::DegenerateObservable, "observable with s = 0 has no distinguished eigenkets");
  }
  auto column_ket = [](const Idempotent& p) {
    const Multivector proj = p.to_multivector();
    // sqrt(2) p u+ takes the first column of [p]; when that column vanishes
    // sqrt(2) p e1 u+ brings the second column into the ideal instead.
    const KetSpinor first = KetSpinor::from_ideal(proj * basis::u_plus * std::numbers::sqrt2);
    const KetSpinor second =
        KetSpinor::from_ideal(proj * basis::e1 * basis::u_plus * std::numbers::sqrt2);
    return (first.norm() >= second.norm() ? first : second).normalized();
  };
  return {Eigenket{d.lambda_plus, column_ket(d.p_plus)},
          Eigenket{d.lambda_minus, column_ket(d.p_minus)}};
}

double expectation(const Observable& S, const KetSpinor& k) {
  require_normalized(k);
  return S.s0 + inner(S.s, a_hat_from_ket(k));
}

double std_deviation(const Observable& S, const KetSpinor& k) {
  require_normalized(k);
  return cross(S.s, a_hat_from_ket(k)).norm();
}

UncertaintyCheck uncertainty_identity(const Vector3& s, const Vector3& t, const Vector3& a_hat) {
  const double dev = std::abs(a_hat.norm() - 1.0);
  if (dev > kConstraintTol) throw Error(Errc::NotUnit, "a_hat must be a unit vector", dev);
  const Vector3 sa = cross(s, a_hat);
  const Vector3 ta = cross(t, a_hat);
  const double overlap = inner(sa, ta);
  const double volume = inner(cross(s, t), a_hat);
  const double lhs = sa.norm_sq() * ta.norm_sq();
  const double rhs = overlap * overlap + volume * volume;
  return {lhs, rhs, std::abs(lhs - rhs)};
}

double transition_probability(const KetSpinor& a, const KetSpinor& b) {
  require_normalized(a);
  require_normalized(b);
  return inner_product(a, b).norm_sq();
}

std::vector<double> uniform_grid(double t_max, int n) {
  if (n < 2) throw Error(Errc::InvalidConfig, "a time grid needs at least two points");
  if (!(t_max > 0.0)) throw Error(Errc::InvalidConfig, "t_max must be positive");
  std::vector<double> grid(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) grid[k] = t_max * k / (n - 1);
  grid.back() = t_max;
  return grid;
}

std::vector<EvolutionSample> evolve(const Observable& H, const EvolutionConfig& cfg) {
  validate(cfg);
  const double len = H.s.norm();
  const Vector3 s_hat = len > 0.0 ? H.s / len : kE3;
  const Multivector i_s_hat = kI * embed(s_hat);
  std::vector<EvolutionSample> out;
  out.reserve(cfg.t_grid.size());
  for (double t : cfg.t_grid) {
    const double w = len * t / cfg.hbar;
    const Multivector phase = embed(polar(1.0, cfg.theta0 - H.s0 * t / cfg.hbar));
    const Multivector propagator = Multivector(std::cos(w)) - i_s_hat * std::sin(w);
    const KetSpinor ket =
        KetSpinor::from_ideal(phase * propagator * basis::u_plus * std::numbers::sqrt2);
    out.push_back({t, ket, a_hat_from_ket(ket)});
  }
  return out;
}

double schrodinger_residual(const Observable& H, double hbar,
                            const std::vector<EvolutionSample>& trajectory) {
  const Matrix2C h = to_hermitian(H);
  double worst = 0.0;
  for (std::size_t k = 1; k + 1 < trajectory.size(); ++k) {
    const auto& prev = trajectory[k - 1];
    const auto& next = trajectory[k + 1];
    const ComplexScalar scale{0.0, hbar / (next.t - prev.t)};
    const KetSpinor lhs{scale * (next.ket.a0 - prev.ket.a0), scale * (next.ket.a1 - prev.ket.a1)};
    const KetSpinor rhs = apply(h, trajectory[k].ket);
    const double r =
        std::sqrt((lhs.a0 - rhs.a0).norm_sq() + (lhs.a1 - rhs.a1).norm_sq());
    worst = std::max(worst, r);
  }
  return worst;
}

bool is_transverse(const Observable& H, double tol) {
  const double len = H.s.norm();
  return len > tol && std::abs(H.s.z) <= tol * std::max(1.0, len);
}

std::pair<KetSpinor, KetSpinor> neutrino_flavor_states(const Observable& H) {
  const double len = H.s.norm();
  if (len <= kConstraintTol) {
    throw Error(Errc::DegenerateObservable, "neutrino oscillation needs s != 0");
  }
  if (!is_transverse(H)) {
    throw Error(Errc::NotTransverse, "neutrino oscillation needs s perpendicular to e3",
                std::abs(H.s.z));
  }
  const Vector3 x_hat = cross(H.s / len, kE3).normalized();
  const ComplexScalar muon_phase = polar(1.0, -H.s0 * std::numbers::pi / (2.0 * len));
  return {kKetZero, muon_phase * ket_of_direction(x_hat)};
}

std::vector<NeutrinoSample> neutrino_oscillation(const Observable& H, const EvolutionConfig& cfg) {
  const auto [electron, muon] = neutrino_flavor_states(H);
  const auto trajectory = evolve(H, cfg);
  std::vector<NeutrinoSample> out;
  out.reserve(trajectory.size());
  for (const auto& sample : trajectory) {
    out.push_back({sample.t, inner_product(electron, sample.ket).norm_sq(),
                   inner_product(muon, sample.ket).norm_sq()});
  }
  return out;
}

}  // namespace ga3
