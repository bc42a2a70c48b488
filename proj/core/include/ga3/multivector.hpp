#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

namespace ga3 {

inline constexpr double kEqualityTol = 1e-12;
inline constexpr double kConstraintTol = 1e-10;

// ---------------------------------------------------------------------------
// ComplexScalar: re + im * i, where i = e123 is the pseudoscalar. It is an
// element of the center of G3, so it commutes with everything.
// ---------------------------------------------------------------------------
struct ComplexScalar {
  double re = 0.0;
  double im = 0.0;

  constexpr ComplexScalar() = default;
  constexpr ComplexScalar(double r, double i = 0.0) : re(r), im(i) {}

  constexpr ComplexScalar conj() const { return {re, -im}; }
  constexpr double norm_sq() const { return re * re + im * im; }
  double abs() const { return std::hypot(re, im); }
  double arg() const { return std::atan2(im, re); }

  constexpr ComplexScalar operator-() const { return {-re, -im}; }
  constexpr ComplexScalar& operator+=(ComplexScalar o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  constexpr ComplexScalar& operator-=(ComplexScalar o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  constexpr ComplexScalar& operator*=(ComplexScalar o) {
    const double r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  constexpr ComplexScalar& operator/=(ComplexScalar o) {
    const double d = o.norm_sq();
    const double r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = r;
    return *this;
  }

  friend constexpr ComplexScalar operator+(ComplexScalar a, ComplexScalar b) { return a += b; }
  friend constexpr ComplexScalar operator-(ComplexScalar a, ComplexScalar b) { return a -= b; }
  friend constexpr ComplexScalar operator*(ComplexScalar a, ComplexScalar b) { return a *= b; }
  friend constexpr ComplexScalar operator/(ComplexScalar a, ComplexScalar b) { return a /= b; }
  friend constexpr ComplexScalar operator*(double k, ComplexScalar z) {
    return {k * z.re, k * z.im};
  }
  friend constexpr ComplexScalar operator*(ComplexScalar z, double k) {
    return {k * z.re, k * z.im};
  }
  friend constexpr ComplexScalar operator+(double k, ComplexScalar z) { return {k + z.re, z.im}; }
  friend constexpr ComplexScalar operator+(ComplexScalar z, double k) { return {k + z.re, z.im}; }
  friend constexpr ComplexScalar operator-(ComplexScalar z, double k) { return {z.re - k, z.im}; }
  friend constexpr ComplexScalar operator-(double k, ComplexScalar z) { return {k - z.re, -z.im}; }
  friend constexpr bool operator==(ComplexScalar, ComplexScalar) = default;
};

// e^{i*angle}
inline ComplexScalar polar(double magnitude, double angle) {
  return {magnitude * std::cos(angle), magnitude * std::sin(angle)};
}

// Principal branch, argument in (-pi/2, pi/2].
ComplexScalar sqrt(ComplexScalar z);

// ---------------------------------------------------------------------------
// Vector3: x e1 + y e2 + z e3.
// ---------------------------------------------------------------------------
struct Vector3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vector3 operator-() const { return {-x, -y, -z}; }
  constexpr Vector3& operator+=(const Vector3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Vector3& operator-=(const Vector3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Vector3& operator*=(double s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  constexpr double norm_sq() const { return x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm_sq()); }
  Vector3 normalized() const {
    const double n = norm();
    return {x / n, y / n, z / n};
  }

  friend constexpr Vector3 operator+(Vector3 a, const Vector3& b) { return a += b; }
  friend constexpr Vector3 operator-(Vector3 a, const Vector3& b) { return a -= b; }
  friend constexpr Vector3 operator*(Vector3 a, double s) { return a *= s; }
  friend constexpr Vector3 operator*(double s, Vector3 a) { return a *= s; }
  friend constexpr Vector3 operator/(Vector3 a, double s) { return a *= (1.0 / s); }
  friend constexpr bool operator==(const Vector3&, const Vector3&) = default;
};

inline constexpr Vector3 kE1{1.0, 0.0, 0.0};
inline constexpr Vector3 kE2{0.0, 1.0, 0.0};
inline constexpr Vector3 kE3{0.0, 0.0, 1.0};

// Gibbs-Heaviside products.
constexpr double inner(const Vector3& a, const Vector3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
constexpr Vector3 cross(const Vector3& a, const Vector3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// ---------------------------------------------------------------------------
// Multivector
// ---------------------------------------------------------------------------

// Coefficient slots, in the order [1, e1, e2, e3, e23, e13, e12, e123].
enum class Blade : std::uint8_t { Scalar, E1, E2, E3, E23, E13, E12, E123 };

inline constexpr std::size_t kBladeCount = 8;

inline constexpr std::array<int, kBladeCount> kBladeGrade{0, 1, 1, 1, 2, 2, 2, 3};

namespace detail {

// Bitmask of generators in each slot (bit 0 = e1, bit 1 = e2, bit 2 = e3).
inline constexpr std::array<unsigned, kBladeCount> kSlotMask{0, 1, 2, 4, 6, 5, 3, 7};

constexpr std::size_t slot_of_mask(unsigned mask) {
  for (std::size_t s = 0; s < kBladeCount; ++s) {
    if (kSlotMask[s] == mask) return s;
  }
  return kBladeCount;
}

// Sign of the product of two canonically ordered blades. Counts the
// transpositions needed to sort the concatenated generator list; every
// generator squares to +1.
constexpr int blade_product_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned x = a >> 1; x != 0; x >>= 1) {
    swaps += std::popcount(x & b);
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

struct ProductEntry {
  std::uint8_t slot;
  std::int8_t sign;
};

using ProductTable = std::array<std::array<ProductEntry, kBladeCount>, kBladeCount>;

constexpr ProductTable make_product_table() {
  ProductTable table{};
  for (std::size_t i = 0; i < kBladeCount; ++i) {
    for (std::size_t j = 0; j < kBladeCount; ++j) {
      const unsigned a = kSlotMask[i];
      const unsigned b = kSlotMask[j];
      table[i][j] = ProductEntry{static_cast<std::uint8_t>(slot_of_mask(a ^ b)),
                                 static_cast<std::int8_t>(blade_product_sign(a, b))};
    }
  }
  return table;
}

}  // namespace detail

// e_i e_j = sign * e_slot, generated at compile time.
inline constexpr detail::ProductTable kProductTable = detail::make_product_table();

class Multivector {
 public:
  using Coefficients = std::array<double, kBladeCount>;

  constexpr Multivector() = default;
  constexpr Multivector(double scalar) { c_[0] = scalar; }  // NOLINT: implicit like std::complex
  explicit constexpr Multivector(const Coefficients& c) : c_(c) {}
  explicit constexpr Multivector(ComplexScalar z) {
    c_[0] = z.re;
    c_[7] = z.im;
  }
  explicit constexpr Multivector(const Vector3& v) {
    c_[1] = v.x;
    c_[2] = v.y;
    c_[3] = v.z;
  }

  static constexpr Multivector basis(Blade b, double coefficient = 1.0) {
    Multivector m;
    m.c_[static_cast<std::size_t>(b)] = coefficient;
    return m;
  }

  constexpr double operator[](std::size_t slot) const { return c_[slot]; }
  constexpr double& operator[](std::size_t slot) { return c_[slot]; }
  constexpr double operator[](Blade b) const { return c_[static_cast<std::size_t>(b)]; }
  constexpr double& operator[](Blade b) { return c_[static_cast<std::size_t>(b)]; }

  constexpr const Coefficients& coefficients() const { return c_; }
  std::span<const double, kBladeCount> span() const { return c_; }

  double max_norm() const;

  constexpr Multivector operator-() const {
    Multivector r;
    for (std::size_t s = 0; s < kBladeCount; ++s) r.c_[s] = -c_[s];
    return r;
  }
  constexpr Multivector& operator+=(const Multivector& o) {
    for (std::size_t s = 0; s < kBladeCount; ++s) c_[s] += o.c_[s];
    return *this;
  }
  constexpr Multivector& operator-=(const Multivector& o) {
    for (std::size_t s = 0; s < kBladeCount; ++s) c_[s] -= o.c_[s];
    return *this;
  }
  constexpr Multivector& operator*=(double k) {
    for (double& x : c_) x *= k;
    return *this;
  }

  friend constexpr Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend constexpr Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend constexpr Multivector operator*(Multivector a, double k) { return a *= k; }
  friend constexpr Multivector operator*(double k, Multivector a) { return a *= k; }
  friend constexpr Multivector operator/(Multivector a, double k) { return a *= (1.0 / k); }

  // Geometric product.
  friend constexpr Multivector operator*(const Multivector& a, const Multivector& b) {
    Multivector r;
    for (std::size_t i = 0; i < kBladeCount; ++i) {
      if (a.c_[i] == 0.0) continue;
      for (std::size_t j = 0; j < kBladeCount; ++j) {
        const auto e = kProductTable[i][j];
        r.c_[e.slot] += e.sign * a.c_[i] * b.c_[j];
      }
    }
    return r;
  }

  friend constexpr bool operator==(const Multivector&, const Multivector&) = default;

 private:
  Coefficients c_{};
};

inline constexpr Multivector embed(ComplexScalar z) { return Multivector(z); }
inline constexpr Multivector embed(const Vector3& v) { return Multivector(v); }

constexpr Multivector operator*(ComplexScalar z, const Multivector& m) { return embed(z) * m; }
constexpr Multivector operator*(const Multivector& m, ComplexScalar z) { return m * embed(z); }
constexpr Multivector operator*(const Vector3& v, const Multivector& m) { return embed(v) * m; }
constexpr Multivector operator*(const Multivector& m, const Vector3& v) { return m * embed(v); }

namespace basis {
inline constexpr Multivector one{1.0};
inline constexpr Multivector e1 = Multivector::basis(Blade::E1);
inline constexpr Multivector e2 = Multivector::basis(Blade::E2);
inline constexpr Multivector e3 = Multivector::basis(Blade::E3);
inline constexpr Multivector e23 = Multivector::basis(Blade::E23);
inline constexpr Multivector e13 = Multivector::basis(Blade::E13);
inline constexpr Multivector e12 = Multivector::basis(Blade::E12);
inline constexpr Multivector e123 = Multivector::basis(Blade::E123);
inline constexpr Multivector i = e123;
// Mutually annihilating idempotents (1 +- e3)/2.
inline constexpr Multivector u_plus = (one + e3) * 0.5;
inline constexpr Multivector u_minus = (one - e3) * 0.5;
}  // namespace basis

// Projection onto grade k (0..3). Throws Error{GradeOutOfRange} otherwise.
Multivector grade(const Multivector& a, int k);

// s + v + B + T -> s + v - B - T
Multivector reverse(const Multivector& a);
// s + v + B + T -> s - v + B - T
Multivector grade_involution(const Multivector& a);
// s + v + B + T -> s - v - B + T
Multivector clifford_conjugation(const Multivector& a);

// Grade 0 + 3 part as a complex scalar.
ComplexScalar complex_part(const Multivector& a);
// Grade 1 part.
Vector3 vector_part(const Multivector& a);
// Bivector part B written as i*b; returns b.
Vector3 bivector_dual(const Multivector& a);

// Outer product of vectors, a ^ b = i (a x b).
Multivector outer(const Vector3& a, const Vector3& b);

// a ^ b ^ c = det[a b c] i.
Multivector triple_wedge(const Vector3& a, const Vector3& b, const Vector3& c);

// Grade-wise inner and outer products for general multivectors:
//   a | b = sum_{r,s} < <a>_r <b>_s >_{|r-s|}
//   a ^ b = sum_{r,s} < <a>_r <b>_s >_{r+s}
// They reduce to the vector inner and outer products on grade-1 inputs.
Multivector inner_product(const Multivector& a, const Multivector& b);
Multivector outer_product(const Multivector& a, const Multivector& b);

// Exponential. Closed form when the non-central part squares to a real
// scalar; otherwise the power series, summed until a term's max-norm drops
// below tol (at most 200 terms, Error{NoConvergence} past that).
Multivector exp(const Multivector& a, double tol = 1e-16);

// a^{-1} = cc(a) / (a cc(a)). Throws Error{NonInvertible} when the complex
// scalar a cc(a) has modulus <= tol.
Multivector inverse(const Multivector& a, double tol = kEqualityTol);

// Max-abs coefficient difference <= tol, absolutely or relative to the
// larger max-norm.
bool approx_equal(const Multivector& a, const Multivector& b, double tol = kEqualityTol);
double max_abs_diff(const Multivector& a, const Multivector& b);

// "1 + 2e12 - e123"; coefficients below tol relative to the max-norm are
// dropped. Numbers use the shortest round-trip decimal form.
std::string to_string(const Multivector& a, double drop_tol = kEqualityTol);
std::ostream& operator<<(std::ostream& os, const Multivector& a);

std::string_view blade_name(std::size_t slot);

}  // namespace ga3
