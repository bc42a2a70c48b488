#include <doctest.h>

#include "ga3/matrix.hpp"
#include "ga3/random.hpp"
#include "support/oracles.hpp"

using namespace ga3;
using namespace ga3::basis;

namespace {

Matrix2C make(ComplexScalar a, ComplexScalar b, ComplexScalar c, ComplexScalar d) {
  Matrix2C m;
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

Matrix2C random_matrix(Sampler& rng) {
  return make(rng.complex(), rng.complex(), rng.complex(), rng.complex());
}

constexpr ComplexScalar I{0.0, 1.0};

}  // namespace

TEST_CASE("Pauli matrices are exact") {
  CHECK(to_matrix(e1) == make(0.0, 1.0, 1.0, 0.0));
  CHECK(to_matrix(e2) == make(0.0, -I, I, 0.0));
  CHECK(to_matrix(e3) == make(1.0, 0.0, 0.0, -1.0));
  CHECK(to_matrix(one) == Matrix2C::identity());
  // [e3] = -i [e1][e2]
  CHECK(to_matrix(e3) == ComplexScalar{0.0, -1.0} * (to_matrix(e1) * to_matrix(e2)));
}

TEST_CASE("every basis blade matches the Pauli-product oracle") {
  for (std::size_t s = 0; s < kBladeCount; ++s) {
    const Multivector b = Multivector::basis(static_cast<Blade>(s));
    CHECK(oracle::mat_diff(oracle::to_cmat(to_matrix(b).m), oracle::pauli_image(b)) == 0.0);
    CHECK(from_matrix(to_matrix(b)) == b);
  }
}

TEST_CASE("from_matrix") {
  CHECK(from_matrix(make(0.0, -I, I, 0.0)) == e2);
  CHECK(from_matrix(Matrix2C::identity()) == one);
}

TEST_CASE("isomorphism on random elements") {
  Sampler rng(101);
  for (int trial = 0; trial < 1000; ++trial) {
    const Multivector g = rng.multivector();
    const Multivector h = rng.multivector();
    CHECK(max_abs_diff(to_matrix(g * h), to_matrix(g) * to_matrix(h)) < 1e-12);
    CHECK(max_abs_diff(from_matrix(to_matrix(g)), g) < 1e-12);
    const Matrix2C m = random_matrix(rng);
    CHECK(max_abs_diff(to_matrix(from_matrix(m)), m) < 1e-12);
    // linearity
    CHECK(max_abs_diff(to_matrix(g + h * 2.5), to_matrix(g) + ComplexScalar{2.5} * to_matrix(h)) <
          1e-12);
  }
}

TEST_CASE("conjugate transpose matches reverse") {
  const Matrix2C s2 = to_matrix(e2);
  CHECK(conjugate_transpose(s2) == s2);
  CHECK(conjugate_transpose(to_matrix(e12)) == to_matrix(-e12));
  Sampler rng(103);
  for (int trial = 0; trial < 1000; ++trial) {
    const Multivector g = rng.multivector();
    CHECK(max_abs_diff(to_matrix(reverse(g)), conjugate_transpose(to_matrix(g))) < 1e-12);
  }
}

TEST_CASE("determinant equals g cc(g)") {
  Sampler rng(107);
  for (int trial = 0; trial < 500; ++trial) {
    const Multivector g = rng.multivector();
    const ComplexScalar det = to_matrix(g).det();
    const ComplexScalar n = complex_part(g * clifford_conjugation(g));
    CHECK(det.re == doctest::Approx(n.re).epsilon(1e-12));
    CHECK(det.im == doctest::Approx(n.im).epsilon(1e-12));
    // g cc(g) has no vector or bivector part
    CHECK((g * clifford_conjugation(g) - embed(n)).max_norm() < 1e-12);
  }
}

TEST_CASE("Hermitian matrices are exactly the self-reverse elements") {
  Sampler rng(109);
  for (int trial = 0; trial < 200; ++trial) {
    const Multivector g = rng.multivector();
    const Multivector self_reverse = (g + reverse(g)) * 0.5;
    CHECK(is_hermitian(to_matrix(self_reverse)));
    CHECK_FALSE(is_hermitian(to_matrix(g)));
    CHECK(is_hermitian(to_matrix(g)) == approx_equal(reverse(g), g));
  }
}

TEST_CASE("basis change table") {
  const auto table = basis_change_table();
  CHECK(table[2] == std::array<ComplexScalar, 4>{0.0, I, -I, 0.0});
  CHECK(table[0] == std::array<ComplexScalar, 4>{1.0, 0.0, 0.0, 1.0});
  const auto column = spectral_column();
  const std::array<Multivector, 4> standard{one, e1, e2, e3};
  for (std::size_t row = 0; row < 4; ++row) {
    Multivector rebuilt;
    for (std::size_t k = 0; k < 4; ++k) rebuilt += table[row][k] * column[k];
    CHECK(rebuilt == standard[row]);
  }
}

TEST_CASE("spectral relations") {
  CHECK(u_plus * u_minus == Multivector{});
  CHECK(u_plus + u_minus == one);
  CHECK(u_plus - u_minus == e3);
  CHECK(e1 * u_plus == u_minus * e1);
  CHECK(u_plus * u_plus == u_plus);
}
