#include "ga3/matrix.hpp"

#include <algorithm>

namespace ga3 {

namespace {
constexpr ComplexScalar kI{0.0, 1.0};
}

double Matrix2C::max_norm() const {
  double r = 0.0;
  for (const auto& row : m) {
    for (const auto& z : row) r = std::max({r, std::abs(z.re), std::abs(z.im)});
  }
  return r;
}

Matrix2C operator+(const Matrix2C& a, const Matrix2C& b) {
  Matrix2C r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
  return r;
}

Matrix2C operator-(const Matrix2C& a, const Matrix2C& b) {
  Matrix2C r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][j] - b.m[i][j];
  return r;
}

Matrix2C operator*(const Matrix2C& a, const Matrix2C& b) {
  Matrix2C r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
  return r;
}

Matrix2C operator*(ComplexScalar z, const Matrix2C& a) {
  Matrix2C r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = z * a.m[i][j];
  return r;
}

double max_abs_diff(const Matrix2C& a, const Matrix2C& b) { return (a - b).max_norm(); }

bool is_hermitian(const Matrix2C& a, double tol) {
  return max_abs_diff(a, conjugate_transpose(a)) <= tol * std::max(1.0, a.max_norm());
}

// Writing g = sum_k alpha_k e_k with complex alpha_k (e0 = 1), the image is
// alpha0 I + alpha1 [e1] + alpha2 [e2] + alpha3 [e3].
Matrix2C to_matrix(const Multivector& g) {
  const ComplexScalar a0 = complex_part(g);
  const Vector3 re = vector_part(g);
  const Vector3 im = bivector_dual(g);
  const ComplexScalar a1{re.x, im.x};
  const ComplexScalar a2{re.y, im.y};
  const ComplexScalar a3{re.z, im.z};
  Matrix2C r;
  r.m[0][0] = a0 + a3;
  r.m[0][1] = a1 - kI * a2;
  r.m[1][0] = a1 + kI * a2;
  r.m[1][1] = a0 - a3;
  return r;
}

Matrix2C conjugate_transpose(const Matrix2C& a) {
  Matrix2C r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[j][i].conj();
  return r;
}

std::array<Multivector, 4> spectral_column() {
  using namespace basis;
  return {u_plus, e1 * u_plus, e1 * u_minus, u_minus};
}

Multivector from_matrix(const Matrix2C& a) {
  const auto col = spectral_column();
  return a.m[0][0] * col[0] + a.m[0][1] * col[2] + a.m[1][0] * col[1] + a.m[1][1] * col[3];
}

BasisChangeTable basis_change_table() {
  const ComplexScalar o{0.0};
  const ComplexScalar l{1.0};
  return {{
      {l, o, o, l},
      {o, l, l, o},
      {o, kI, -kI, o},
      {l, o, o, -l},
  }};
}

}  // namespace ga3
