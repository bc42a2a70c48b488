#include "ga3/multivector.hpp"

#include <algorithm>
#include <charconv>
#include <complex>
#include <ostream>

#include "ga3/error.hpp"

namespace ga3 {

namespace {

constexpr std::array<std::string_view, kBladeCount> kBladeNames{
    "1", "e1", "e2", "e3", "e23", "e13", "e12", "e123"};

std::string format_shortest(double x) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), end);
}

// Vector + bivector part: a complex vector, so its square is central.
Multivector non_central(const Multivector& a) {
  Multivector w = a;
  w[Blade::Scalar] = 0.0;
  w[Blade::E123] = 0.0;
  return w;
}

}  // namespace

ComplexScalar sqrt(ComplexScalar z) {
  const auto r = std::sqrt(std::complex<double>(z.re, z.im));
  return {r.real(), r.imag()};
}

double Multivector::max_norm() const {
  double m = 0.0;
  for (double x : c_) m = std::max(m, std::abs(x));
  return m;
}

Multivector grade(const Multivector& a, int k) {
  if (k < 0 || k > 3) {
    throw Error(Errc::GradeOutOfRange, "grade must be in 0..3, got " + std::to_string(k));
  }
  Multivector r;
  for (std::size_t s = 0; s < kBladeCount; ++s) {
    if (kBladeGrade[s] == k) r[s] = a[s];
  }
  return r;
}

Multivector reverse(const Multivector& a) {
  Multivector r = a;
  for (std::size_t s = 4; s < kBladeCount; ++s) r[s] = -r[s];
  return r;
}

Multivector grade_involution(const Multivector& a) {
  Multivector r = a;
  for (std::size_t s = 0; s < kBladeCount; ++s) {
    if (kBladeGrade[s] % 2 == 1) r[s] = -r[s];
  }
  return r;
}

Multivector clifford_conjugation(const Multivector& a) {
  Multivector r = a;
  for (std::size_t s = 1; s < 7; ++s) r[s] = -r[s];
  return r;
}

ComplexScalar complex_part(const Multivector& a) { return {a[Blade::Scalar], a[Blade::E123]}; }

Vector3 vector_part(const Multivector& a) { return {a[Blade::E1], a[Blade::E2], a[Blade::E3]}; }

// i e1 = e23, i e2 = -e13, i e3 = e12
Vector3 bivector_dual(const Multivector& a) {
  return {a[Blade::E23], -a[Blade::E13], a[Blade::E12]};
}

Multivector outer(const Vector3& a, const Vector3& b) {
  return embed(ComplexScalar{0.0, 1.0}) * embed(cross(a, b));
}

Multivector triple_wedge(const Vector3& a, const Vector3& b, const Vector3& c) {
  return Multivector::basis(Blade::E123, inner(a, cross(b, c)));
}

Multivector inner_product(const Multivector& a, const Multivector& b) {
  Multivector r;
  for (int ra = 0; ra <= 3; ++ra) {
    const Multivector ga = grade(a, ra);
    for (int rb = 0; rb <= 3; ++rb) {
      r += grade(ga * grade(b, rb), std::abs(ra - rb));
    }
  }
  return r;
}

Multivector outer_product(const Multivector& a, const Multivector& b) {
  Multivector r;
  for (int ra = 0; ra <= 3; ++ra) {
    const Multivector ga = grade(a, ra);
    for (int rb = 0; ra + rb <= 3; ++rb) {
      r += grade(ga * grade(b, rb), ra + rb);
    }
  }
  return r;
}

Multivector exp(const Multivector& a, double tol) {
  if (!(tol > 0.0)) throw Error(Errc::InvalidConfig, "exp tolerance must be positive");
  // a = z + w with z central. If w^2 is a real scalar the exponential of w
  // is trigonometric or hyperbolic, and e^a = e^z e^w since z commutes.
  const ComplexScalar z = complex_part(a);
  const Multivector w = non_central(a);
  const ComplexScalar w2 = complex_part(w * w);
  const double w_scale = std::max(1.0, w.max_norm() * w.max_norm());
  if (std::abs(w2.im) <= 1e-15 * w_scale) {
    Multivector ew;
    if (w2.re < 0.0) {
      const double theta = std::sqrt(-w2.re);
      ew = Multivector(std::cos(theta)) + w * (std::sin(theta) / theta);
    } else if (w2.re > 0.0) {
      const double phi = std::sqrt(w2.re);
      ew = Multivector(std::cosh(phi)) + w * (std::sinh(phi) / phi);
    } else {
      ew = Multivector(1.0) + w;
    }
    return embed(polar(std::exp(z.re), z.im)) * ew;
  }

  constexpr int kMaxTerms = 200;
  Multivector sum(1.0);
  Multivector term(1.0);
  for (int n = 1; n < kMaxTerms; ++n) {
    term = term * a / static_cast<double>(n);
    sum += term;
    if (term.max_norm() < tol) return sum;
  }
  throw Error(Errc::NoConvergence, "exp series did not converge within 200 terms",
              term.max_norm());
}

Multivector inverse(const Multivector& a, double tol) {
  const Multivector conj = clifford_conjugation(a);
  const ComplexScalar n = complex_part(a * conj);
  const double modulus = n.abs();
  if (modulus <= tol) {
    throw Error(Errc::NonInvertible, "multivector is not invertible (|a cc(a)| = " +
                                         format_shortest(modulus) + ")",
                modulus);
  }
  return conj * embed(ComplexScalar{1.0} / n);
}

double max_abs_diff(const Multivector& a, const Multivector& b) { return (a - b).max_norm(); }

bool approx_equal(const Multivector& a, const Multivector& b, double tol) {
  const double diff = max_abs_diff(a, b);
  return diff <= tol || diff <= tol * std::max(a.max_norm(), b.max_norm());
}

std::string_view blade_name(std::size_t slot) { return kBladeNames.at(slot); }

std::string to_string(const Multivector& a, double drop_tol) {
  const double cutoff = drop_tol * std::max(1.0, a.max_norm());
  std::string out;
  for (std::size_t s = 0; s < kBladeCount; ++s) {
    const double c = a[s];
    if (std::abs(c) <= cutoff) continue;
    const double mag = std::abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    if (s == 0) {
      out += format_shortest(mag);
    } else {
      if (mag != 1.0) out += format_shortest(mag);
      out += kBladeNames[s];
    }
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Multivector& a) { return os << to_string(a); }

}  // namespace ga3
