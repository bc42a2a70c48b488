#include "ga3/error.hpp"

namespace ga3 {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NonInvertible: return "NonInvertible";
    case Errc::ConstraintViolated: return "ConstraintViolated";
    case Errc::NotUnit: return "NotUnit";
    case Errc::ZeroAlpha0: return "ZeroAlpha0";
    case Errc::ZeroSpinor: return "ZeroSpinor";
    case Errc::SouthPole: return "SouthPole";
    case Errc::DegenerateX: return "DegenerateX";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::NotNull: return "NotNull";
    case Errc::DegenerateObservable: return "DegenerateObservable";
    case Errc::NotTransverse: return "NotTransverse";
    case Errc::GradeOutOfRange: return "GradeOutOfRange";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

}  // namespace ga3
