#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nlft {

enum class ErrorCode {
  SingularMatrix,
  EmptyPoly,
  InvalidDistribution,
  EmptyOffDiagonal,
  VanishingDiagonal,
  NotInImage,
  DegenerateGap,
  TooLarge,
  LengthMismatch,
  NotConstMass,
  VanishingC,
  EpsilonTooLarge,
  BadConstraints,
  Io,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::EmptyPoly: return "EmptyPoly";
    case ErrorCode::InvalidDistribution: return "InvalidDistribution";
    case ErrorCode::EmptyOffDiagonal: return "EmptyOffDiagonal";
    case ErrorCode::VanishingDiagonal: return "VanishingDiagonal";
    case ErrorCode::NotInImage: return "NotInImage";
    case ErrorCode::DegenerateGap: return "DegenerateGap";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotConstMass: return "NotConstMass";
    case ErrorCode::VanishingC: return "VanishingC";
    case ErrorCode::EpsilonTooLarge: return "EpsilonTooLarge";
    case ErrorCode::BadConstraints: return "BadConstraints";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

// Library failure with a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nlft
