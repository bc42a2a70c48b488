#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ga3 {

enum class Errc {
  NonInvertible,
  ConstraintViolated,
  NotUnit,
  ZeroAlpha0,
  ZeroSpinor,
  SouthPole,
  DegenerateX,
  NotNormalized,
  NotNull,
  DegenerateObservable,
  NotTransverse,
  GradeOutOfRange,
  NoConvergence,
  InvalidConfig,
};

std::string_view to_string(Errc code) noexcept;

// Every precondition failure in the library surfaces as ga3::Error. The
// residual carries the offending quantity when there is one (constraint
// residual, modulus, norm deviation), otherwise 0.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, double residual = 0.0)
      : std::runtime_error(what), code_(code), residual_(residual) {}

  Errc code() const noexcept { return code_; }
  double residual() const noexcept { return residual_; }

 private:
  Errc code_;
  double residual_;
};

}  // namespace ga3
