#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <future>
#include <numbers>
#include <ostream>
#include <string>

#include "cli/cli.hpp"
#include "ga3/cartan.hpp"
#include "ga3/error.hpp"
#include "ga3/matrix.hpp"
#include "ga3/qm.hpp"
#include "ga3/random.hpp"
#include "ga3/spinor.hpp"

namespace ga3::cli {

namespace {

constexpr ComplexScalar kI{0.0, 1.0};

std::string describe(double x) { return format_real(x); }

std::string describe(const Vector3& v) {
  return "(" + describe(v.x) + ", " + describe(v.y) + ", " + describe(v.z) + ")";
}

std::string describe(ComplexScalar z) {
  return describe(z.re) + (z.im < 0 ? "-" : "+") + describe(std::abs(z.im)) + "i";
}

std::string describe(const KetSpinor& k) {
  return "(" + describe(k.a0) + ", " + describe(k.a1) + ")";
}

std::string describe(const Multivector& m) {
  std::string s = "[";
  for (std::size_t k = 0; k < kBladeCount; ++k) s += (k ? ", " : "") + describe(m[k]);
  return s + "]";
}

// Keeps the largest residual seen and the inputs that produced it.
class Worst {
 public:
  template <typename Describe>
  void record(double residual, Describe&& inputs) {
    if (std::isnan(residual)) residual = INFINITY;
    if (residual > residual_ || trials_ == 0) {
      residual_ = residual;
      inputs_ = inputs();
    }
    ++trials_;
  }
  double residual() const { return residual_; }
  const std::string& inputs() const { return inputs_; }

 private:
  double residual_ = 0.0;
  std::string inputs_;
  int trials_ = 0;
};

using SuiteFn = std::function<void(Sampler&, int, Worst&)>;

struct Suite {
  std::string_view name;
  double tolerance;
  SuiteFn run;
};

void canonical_reconstruction(Sampler& rng, int trials, Worst& w) {
  for (int t = 0; t < trials; ++t) {
    const KetSpinor k = rng.normalized_ket();
    const CanonicalForm f = canonical_form(k);
    double r = std::abs(std::cos(f.omega) - k.a0.re);
    for (const auto& m : canonical_reconstructions(f)) {
      r = std::max(r, max_abs_diff(m, k.to_multivector()));
    }
    w.record(r, [&] { return "k=" + describe(k); });
  }
}

void cartan_null_form(Sampler& rng, int trials, Worst& w) {
  for (int t = 0; t < trials; ++t) {
    const KetSpinor k = rng.ket();
    const NullVector n = cartan_null(k);
    const double r = std::max(n.quadratic_form().abs(),
                              max_abs_diff(cartan_null_product(k), n.to_multivector()));
    w.record(r, [&] { return "k=" + describe(k); });
  }
}

void cartan_round_trip(Sampler& rng, int trials, Worst& w) {
  for (int t = 0; t < trials; ++t) {
    const KetSpinor k = rng.normalized_ket();
    const NullVector n = cartan_null(k);
    const auto [p, q] = cartan_inverse(n);
    double r = std::min(max_abs_diff(p, k), max_abs_diff(q, k));
    if (k.a0.abs() > 1e-3) {
      const auto forms = null_canonical_forms(k);
      const Multivector closed = n.to_multivector();
      r = std::max({r, max_abs_diff(forms.form_a, closed), max_abs_diff(forms.form_b, closed),
                    max_abs_diff(forms.form_a, forms.form_b)});
    }
    w.record(r, [&] { return "k=" + describe(k); });
  }
}

void double_cover(Sampler& rng, int trials, Worst& w) {
  for (int t = 0; t < trials; ++t) {
    const Vector3 n = rng.unit_vector();
    const double r = max_abs_diff(exp(kI * embed(n) * std::numbers::pi), Multivector(-1.0));
    w.record(r, [&] { return "n=" + describe(n); });
  }
}

void factorization(Sampler& rng, int trials, Worst& w) {
  for (int t = 0; t < trials; ++t) {
    const auto [m, n] = rng.idempotent_vectors();
    const Idempotent s = make_idempotent(m, n);
    const auto f = factor_idempotent(s);
    const Multivector rebuilt = f.msq * simple_idempotent(f.a_hat).to_multivector() *
                                simple_idempotent(f.b_hat).to_multivector();
    const double r = std::max(std::abs(f.msq * (1.0 + inner(f.a_hat, f.b_hat)) - 2.0),
                              max_abs_diff(rebuilt, s.to_multivector()));
    w.record(r, [&] { return "m=" + describe(m) + " n=" + describe(n); });
  }
}

void idempotent_square(Sampler& rng, int trials, Worst& w) {
  for (int t = 0; t < trials; ++t) {
    const auto [m, n] = rng.idempotent_vectors();
    const Multivector s = make_idempotent(m, n).to_multivector();
    w.record(max_abs_diff(s * s, s), [&] { return "m=" + describe(m) + " n=" + describe(n); });
  }
}

void isomorphism(Sampler& rng, int trials, Worst& w) {
  const double pauli = max_abs_diff(to_matrix(basis::e1) * to_matrix(basis::e2),
                                    ComplexScalar{0.0, 1.0} * to_matrix(basis::e3));
  w.record(pauli, [] { return std::string("Pauli relation [e1][e2] = i[e3]"); });
  for (int t = 0; t < trials; ++t) {
    const Multivector g = rng.multivector();
    const Multivector h = rng.multivector();
    const double r = std::max(max_abs_diff(to_matrix(g * h), to_matrix(g) * to_matrix(h)),
                              max_abs_diff(from_matrix(to_matrix(g)), g));
    w.record(r, [&] { return "g=" + describe(g) + " h=" + describe(h); });
  }
}

void simple_idempotent_laws(Sampler& rng, int trials, Worst& w) {
  for (int t = 0; t < trials; ++t) {
    const Vector3 a = rng.unit_vector();
    const Vector3 b = rng.unit_vector();
    const Multivector ap = simple_idempotent(a).to_multivector();
    const Multivector bp = simple_idempotent(b).to_multivector();
    const double r = std::max(max_abs_diff(ap * bp * ap, 0.5 * (1.0 + inner(a, b)) * ap),
                              max_abs_diff(ap * embed(b) * ap, inner(a, b) * ap));
    w.record(r, [&] { return "a=" + describe(a) + " b=" + describe(b); });
  }
}

void spinor_operator_laws(Sampler& rng, int trials, Worst& w) {
  for (int t = 0; t < trials; ++t) {
    const KetSpinor k = rng.normalized_ket();
    const SpinorOperator op = spinor_operator(k);
    const Vector3 a = a_hat_from_ket(k);
    const double r =
        std::max({(op.matrix().det() - ComplexScalar{1.0}).abs(),
                  max_abs_diff(op.sandwich(basis::e3), embed(a)),
                  max_abs_diff(op.sandwich(basis::u_plus), simple_idempotent(a).to_multivector())});
    w.record(r, [&] { return "k=" + describe(k); });
  }
}

void stereographic(Sampler& rng, int trials, Worst& w) {
  for (int t = 0; t < trials; ++t) {
    KetSpinor k = rng.ket();
    while (k.a0.abs() <= 0.1) k = rng.ket();
    const double r = (inverse_stereographic(a_hat_from_ket(k)) - k.a1 / k.a0).abs();
    w.record(r, [&] { return "k=" + describe(k); });
  }
}

void transition(Sampler& rng, int trials, Worst& w) {
  for (int t = 0; t < trials; ++t) {
    const KetSpinor a = rng.normalized_ket();
    const KetSpinor b = rng.normalized_ket();
    const double r = std::abs(transition_probability(a, b) -
                              bloch_transition_probability(a_hat_from_ket(a), a_hat_from_ket(b)));
    w.record(r, [&] { return "a=" + describe(a) + " b=" + describe(b); });
  }
}

// Relative residual of the vector identity; a violated inequality counts as infinite.
void uncertainty(Sampler& rng, int trials, Worst& w) {
  for (int t = 0; t < trials; ++t) {
    const Vector3 s = rng.vector(3.0);
    const Vector3 u = rng.vector(3.0);
    const Vector3 a = rng.unit_vector();
    const auto check = uncertainty_identity(s, u, a);
    const double triple = inner(cross(s, u), a);
    double r = check.residual / std::max(1.0, check.lhs);
    if (check.lhs < triple * triple * (1.0 - 1e-12)) r = INFINITY;
    w.record(r, [&] { return "s=" + describe(s) + " t=" + describe(u) + " a=" + describe(a); });
  }
}

void unitarity(Sampler& rng, int trials, Worst& w) {
  for (int t = 0; t < trials; ++t) {
    const Observable h{rng.uniform(-2, 2), rng.vector(2.0)};
    const double hbar = rng.uniform(0.5, 2.0);
    EvolutionConfig cfg;
    cfg.hbar = hbar;
    cfg.t_grid = uniform_grid(10.0, 16);
    double r = 0.0;
    for (const auto& sample : evolve(h, cfg)) r = std::max(r, std::abs(sample.ket.norm() - 1.0));
    w.record(r, [&] {
      return "h=(" + describe(h.s0) + ", " + describe(h.s) + ") hbar=" + describe(hbar);
    });
  }
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = [] {
    std::vector<Suite> v{
        {"canonical_reconstruction", 1e-9, canonical_reconstruction},
        {"cartan_null_form", 1e-10, cartan_null_form},
        {"cartan_round_trip", 1e-9, cartan_round_trip},
        {"double_cover", 1e-12, double_cover},
        {"factorization", 1e-10, factorization},
        {"idempotent_square", 1e-12, idempotent_square},
        {"isomorphism", 1e-12, isomorphism},
        {"simple_idempotent", 1e-12, simple_idempotent_laws},
        {"spinor_operator", 1e-10, spinor_operator_laws},
        {"stereographic", 1e-10, stereographic},
        {"transition", 1e-12, transition},
        {"uncertainty", 1e-10, uncertainty},
        {"unitarity", 1e-10, unitarity},
    };
    std::sort(v.begin(), v.end(), [](const Suite& a, const Suite& b) { return a.name < b.name; });
    return v;
  }();
  return all;
}

// FNV-1a, so each suite draws from its own stream for a given seed.
std::uint64_t suite_seed(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return seed ^ h;
}

std::string scientific(double x, int precision) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific, precision);
  return std::string(buf, res.ptr);
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& s : suites()) names.emplace_back(s.name);
  return names;
}

std::vector<SuiteResult> run_suites(std::uint64_t seed, int trials, double tol_scale) {
  std::vector<std::future<SuiteResult>> pending;
  for (const Suite& suite : suites()) {
    pending.push_back(std::async(std::launch::async, [&suite, seed, trials, tol_scale] {
      SuiteResult result;
      result.name = suite.name;
      result.tolerance = suite.tolerance * tol_scale;
      Sampler rng(suite_seed(seed, suite.name));
      Worst worst;
      try {
        suite.run(rng, trials, worst);
        result.max_residual = worst.residual();
        result.passed = result.max_residual <= result.tolerance;
        if (!result.passed) result.counterexample = worst.inputs();
      } catch (const Error& e) {
        result.max_residual = INFINITY;
        result.passed = false;
        result.counterexample = std::string("unexpected error: ") + e.what();
      }
      return result;
    }));
  }
  std::vector<SuiteResult> results;
  for (auto& f : pending) results.push_back(f.get());
  return results;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kInvalidInput;
  }
  const auto results = run_suites(cfg.seed, cfg.trials, cfg.tol_scale);
  std::size_t passed = 0;
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());

  out << "ga3 verify seed=" << cfg.seed << " trials=" << cfg.trials << '\n';
  for (const auto& r : results) {
    out << r.name << std::string(width - r.name.size() + 2, ' ') << "max_residual "
        << scientific(r.max_residual, 2) << "  tol " << scientific(r.tolerance, 0) << "  "
        << (r.passed ? "PASS" : "FAIL") << '\n';
    if (r.passed) {
      ++passed;
    } else {
      out << "  counterexample (seed " << cfg.seed << "): " << r.counterexample << '\n';
    }
  }
  out << passed << '/' << results.size() << " suites passed\n";
  if (passed != results.size()) {
    err << "verify failed: " << results.size() - passed << " suite(s) out of tolerance\n";
    return exit_code::kVerifyFailed;
  }
  return exit_code::kOk;
}

}  // namespace ga3::cli
