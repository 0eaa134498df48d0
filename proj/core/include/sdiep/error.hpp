#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sdiep {

enum class ErrorCode {
  FirstNotOne,
  OutOfRange,
  TooShort,
  IndexOutOfRange,
  DimensionTooSmall,
  DimensionMismatch,
  EpsilonTooLarge,
  NotPrime,
  WrongResidue,
  NotOrthogonal,
  PerronColumnMissing,
  CoherenceBelowOne,
  Mod8Unsupported,
  HadamardUnavailable,
  ConstructionFailed,
  InvalidArgument,
  MalformedCsv,
  MalformedJson,
  NotSquare,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above; the CLI
// maps Io to exit status 3 and everything else to 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sdiep
