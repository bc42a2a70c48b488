#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "ga3/multivector.hpp"
#include "ga3/spinor.hpp"

namespace ga3 {

// Reproducible sampling for property checks. The engine is std::mt19937_64,
// whose output sequence is fixed by the standard; doubles are formed from
// the top 53 bits so results do not depend on the library's distributions.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  Vector3 vector(double scale = 1.0) {
    return {uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale)};
  }

  // Rejection from the cube, uniform on the sphere.
  Vector3 unit_vector() {
    for (;;) {
      const Vector3 v = vector();
      const double n2 = v.norm_sq();
      if (n2 > 1e-4 && n2 <= 1.0) return v / std::sqrt(n2);
    }
  }

  ComplexScalar complex(double scale = 1.0) {
    return {uniform(-scale, scale), uniform(-scale, scale)};
  }

  Multivector multivector(double scale = 1.0) {
    Multivector m;
    for (std::size_t s = 0; s < kBladeCount; ++s) m[s] = uniform(-scale, scale);
    return m;
  }

  KetSpinor ket(double scale = 1.0) { return {complex(scale), complex(scale)}; }

  KetSpinor normalized_ket() {
    for (;;) {
      const KetSpinor k = ket();
      if (k.norm() > 1e-3) return k.normalized();
    }
  }

  // Valid (m, n) pair: m^2 - n^2 = 1, m . n = 0, with |n| up to max_n.
  std::pair<Vector3, Vector3> idempotent_vectors(double max_n = 2.0) {
    const Vector3 n_dir = unit_vector();
    const Vector3 n = n_dir * uniform(0.0, max_n);
    Vector3 perp = cross(n_dir, unit_vector());
    while (perp.norm() < 1e-3) perp = cross(n_dir, unit_vector());
    const Vector3 m = perp.normalized() * std::sqrt(1.0 + n.norm_sq());
    return {m, n};
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ga3
