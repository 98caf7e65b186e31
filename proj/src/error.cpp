#include "mseg/error.hpp"

namespace mseg {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::UnknownOrbit: return "UnknownOrbit";
    case ErrorCode::BadComposition: return "BadComposition";
    case ErrorCode::DifferentLines: return "DifferentLines";
    case ErrorCode::NotRigid: return "NotRigid";
    case ErrorCode::NotALadder: return "NotALadder";
    case ErrorCode::NotProperLadder: return "NotProperLadder";
    case ErrorCode::NotTadicForm: return "NotTadicForm";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::UnregisteredAtom: return "UnregisteredAtom";
    case ErrorCode::WrongFieldSide: return "WrongFieldSide";
    case ErrorCode::NotFactorwise: return "NotFactorwise";
    case ErrorCode::BadContext: return "BadContext";
    case ErrorCode::WrongLineKind: return "WrongLineKind";
    case ErrorCode::NoKlyachkoModel: return "NoKlyachkoModel";
    case ErrorCode::IndivisibleType: return "IndivisibleType";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::ZeroScalar: return "ZeroScalar";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Usage: return "Usage";
  }
  return "Unknown";
}

}  // namespace mseg
