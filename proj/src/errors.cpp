#include "primtower/errors.hpp"

namespace primtower {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kArithmetic: return "Arithmetic";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kResourceLimit: return "ResourceLimit";
    case ErrorCode::kNonPrimitive: return "NonPrimitive";
    case ErrorCode::kDuplicateName: return "DuplicateName";
    case ErrorCode::kUnknownSymbol: return "UnknownSymbol";
    case ErrorCode::kSyntax: return "SyntaxError";
    case ErrorCode::kNotRemainder: return "NotRemainder";
    case ErrorCode::kNotInAuxiliary: return "NotInAuxiliary";
    case ErrorCode::kNonSimple: return "NonSimple";
    case ErrorCode::kNonConstantResidue: return "NonConstantResidue";
    case ErrorCode::kInvalidTower: return "InvalidTower";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace primtower
