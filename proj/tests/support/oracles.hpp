#pragma once

// Reference computations that share no code path with the library. They
// work on std::complex and plain generator lists rather than the ga3 types
// they check.

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include "ga3/multivector.hpp"

namespace ga3::oracle {

using cd = std::complex<double>;
using CMat = std::array<std::array<cd, 2>, 2>;

inline CMat mat_mul(const CMat& a, const CMat& b) {
  CMat r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

inline CMat mat_add(const CMat& a, const CMat& b) {
  CMat r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][j] + b[i][j];
  return r;
}

inline CMat mat_scale(cd s, const CMat& a) {
  CMat r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = s * a[i][j];
  return r;
}

inline double mat_diff(const CMat& a, const CMat& b) {
  double d = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  return d;
}

inline CMat identity() { return CMat{{{cd{1}, cd{0}}, {cd{0}, cd{1}}}}; }
inline CMat sigma1() { return CMat{{{cd{0}, cd{1}}, {cd{1}, cd{0}}}}; }
inline CMat sigma2() { return CMat{{{cd{0}, cd{0, -1}}, {cd{0, 1}, cd{0}}}}; }
inline CMat sigma3() { return CMat{{{cd{1}, cd{0}}, {cd{0}, cd{-1}}}}; }

// Sum of coefficient * (product of Pauli matrices of the blade's generators).
inline CMat pauli_image(const Multivector& g) {
  const CMat s1 = sigma1(), s2 = sigma2(), s3 = sigma3();
  const std::array<CMat, 8> blades{
      identity(), s1, s2, s3, mat_mul(s2, s3), mat_mul(s1, s3), mat_mul(s1, s2),
      mat_mul(mat_mul(s1, s2), s3)};
  CMat r{};
  for (std::size_t k = 0; k < 8; ++k) r = mat_add(r, mat_scale(cd{g[k]}, blades[k]));
  return r;
}

inline CMat to_cmat(const std::array<std::array<ComplexScalar, 2>, 2>& m) {
  CMat r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = cd{m[i][j].re, m[i][j].im};
  return r;
}

// Blade product from generator lists: concatenate, bubble sort counting
// swaps, then cancel adjacent equal generators (e_k^2 = 1).
inline std::pair<std::vector<int>, int> multiply_generators(std::vector<int> word) {
  int sign = 1;
  for (std::size_t pass = 0; pass < word.size(); ++pass) {
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
      if (word[k] > word[k + 1]) {
        std::swap(word[k], word[k + 1]);
        sign = -sign;
      }
    }
  }
  std::vector<int> reduced;
  for (int g : word) {
    if (!reduced.empty() && reduced.back() == g) {
      reduced.pop_back();
    } else {
      reduced.push_back(g);
    }
  }
  return {reduced, sign};
}

inline const std::array<std::vector<int>, 8>& slot_generators() {
  static const std::array<std::vector<int>, 8> g{
      std::vector<int>{}, {1}, {2}, {3}, {2, 3}, {1, 3}, {1, 2}, {1, 2, 3}};
  return g;
}

inline Multivector brute_force_product(const Multivector& a, const Multivector& b) {
  const auto& gens = slot_generators();
  Multivector r;
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      std::vector<int> word = gens[i];
      word.insert(word.end(), gens[j].begin(), gens[j].end());
      const auto [blade, sign] = multiply_generators(word);
      std::size_t slot = 8;
      for (std::size_t s = 0; s < 8; ++s) {
        if (gens[s] == blade) slot = s;
      }
      r[slot] += sign * a[i] * b[j];
    }
  }
  return r;
}

inline double det3(const Vector3& a, const Vector3& b, const Vector3& c) {
  return a.x * (b.y * c.z - b.z * c.y) - b.x * (a.y * c.z - a.z * c.y) +
         c.x * (a.y * b.z - a.z * b.y);
}

// Matrix exponential by scaling and squaring with a Taylor core.
inline CMat expm(const CMat& a) {
  double norm = 0.0;
  for (const auto& row : a)
    for (const auto& z : row) norm = std::max(norm, std::abs(z));
  int squarings = 0;
  while (norm > 0.25) {
    norm /= 2;
    ++squarings;
  }
  const CMat scaled = mat_scale(cd{std::ldexp(1.0, -squarings)}, a);
  CMat sum = identity();
  CMat term = identity();
  for (int n = 1; n < 30; ++n) {
    term = mat_scale(cd{1.0 / n}, mat_mul(term, scaled));
    sum = mat_add(sum, term);
  }
  for (int k = 0; k < squarings; ++k) sum = mat_mul(sum, sum);
  return sum;
}

}  // namespace ga3::oracle
