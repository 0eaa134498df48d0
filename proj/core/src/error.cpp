#include "sdiep/error.hpp"

namespace sdiep {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::FirstNotOne: return "FirstNotOne";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EpsilonTooLarge: return "EpsilonTooLarge";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::WrongResidue: return "WrongResidue";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::PerronColumnMissing: return "PerronColumnMissing";
    case ErrorCode::CoherenceBelowOne: return "CoherenceBelowOne";
    case ErrorCode::Mod8Unsupported: return "Mod8Unsupported";
    case ErrorCode::HadamardUnavailable: return "HadamardUnavailable";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MalformedCsv: return "MalformedCSV";
    case ErrorCode::MalformedJson: return "MalformedJSON";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace sdiep
