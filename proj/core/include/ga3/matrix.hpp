#pragma once

#include <array>

#include "ga3/multivector.hpp"

namespace ga3 {

// 2x2 matrix over the complex scalars of G3; the image of the spectral-basis
// representation g = (1 e1) u+ [g] (1 e1)^T.
struct Matrix2C {
  std::array<std::array<ComplexScalar, 2>, 2> m{};

  static constexpr Matrix2C identity() {
    Matrix2C r;
    r.m[0][0] = 1.0;
    r.m[1][1] = 1.0;
    return r;
  }

  constexpr ComplexScalar& operator()(int r, int c) { return m[r][c]; }
  constexpr ComplexScalar operator()(int r, int c) const { return m[r][c]; }

  ComplexScalar det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
  ComplexScalar trace() const { return m[0][0] + m[1][1]; }
  double max_norm() const;

  friend Matrix2C operator+(const Matrix2C& a, const Matrix2C& b);
  friend Matrix2C operator-(const Matrix2C& a, const Matrix2C& b);
  friend Matrix2C operator*(const Matrix2C& a, const Matrix2C& b);
  friend Matrix2C operator*(ComplexScalar z, const Matrix2C& a);
  friend bool operator==(const Matrix2C&, const Matrix2C&) = default;
};

double max_abs_diff(const Matrix2C& a, const Matrix2C& b);
bool is_hermitian(const Matrix2C& a, double tol = kEqualityTol);

Matrix2C to_matrix(const Multivector& g);
Matrix2C conjugate_transpose(const Matrix2C& a);

// g = m00 u+ + m01 e1 u- + m10 e1 u+ + m11 u-
Multivector from_matrix(const Matrix2C& a);

// Rows express 1, e1, e2, e3 over the spectral column (u+, e1 u+, e1 u-, u-).
using BasisChangeTable = std::array<std::array<ComplexScalar, 4>, 4>;
BasisChangeTable basis_change_table();

// The spectral basis column (u+, e1 u+, e1 u-, u-).
std::array<Multivector, 4> spectral_column();

}  // namespace ga3
