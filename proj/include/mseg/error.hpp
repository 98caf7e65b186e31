#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mseg {

// Numeric values are part of the CLI contract (process exit codes); do not renumber.
enum class ErrorCode : int {
  Parse = 10,
  UnknownOrbit = 11,
  BadComposition = 20,
  DifferentLines = 21,
  NotRigid = 22,
  NotALadder = 23,
  NotProperLadder = 24,
  NotTadicForm = 25,
  NotIrreducible = 26,
  UnregisteredAtom = 30,
  WrongFieldSide = 31,
  NotFactorwise = 32,
  BadContext = 33,
  WrongLineKind = 40,
  NoKlyachkoModel = 41,
  IndivisibleType = 42,
  NotNilpotent = 50,
  ZeroScalar = 51,
  DimensionMismatch = 52,
  Usage = 64,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mseg
