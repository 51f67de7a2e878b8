#include "leavitt/error.hpp"

namespace leavitt {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kDuplicateId: return "DuplicateId";
    case Errc::kDanglingEndpoint: return "DanglingEndpoint";
    case Errc::kEmptyVertexSet: return "EmptyVertexSet";
    case Errc::kUnknownId: return "UnknownId";
    case Errc::kInvalidId: return "InvalidId";
    case Errc::kInvalidInput: return "InvalidInput";
    case Errc::kCapExceeded: return "CapExceeded";
    case Errc::kNullForm: return "NullForm";
    case Errc::kPointNotInDomain: return "PointNotInDomain";
    case Errc::kDomainViolation: return "DomainViolation";
    case Errc::kConditionLViolated: return "ConditionLViolated";
    case Errc::kZeroInput: return "ZeroInput";
    case Errc::kCriteriaNotMet: return "CriteriaNotMet";
    case Errc::kGraphHasCycle: return "GraphHasCycle";
    case Errc::kSyntaxError: return "SyntaxError";
    case Errc::kPrecondition: return "Precondition";
    case Errc::kFieldMismatch: return "FieldMismatch";
    case Errc::kDivisionByZero: return "DivisionByZero";
    case Errc::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace leavitt
