#include "expresso/error.hpp"

namespace expresso {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kInvalidRelation: return "InvalidRelation";
    case ErrorCode::kInvalidDatabase: return "InvalidDatabase";
    case ErrorCode::kDegreeMismatch: return "DegreeMismatch";
    case ErrorCode::kInvalidPermutation: return "InvalidPermutation";
    case ErrorCode::kNotAGroup: return "NotAGroup";
    case ErrorCode::kNotASubgroup: return "NotASubgroup";
    case ErrorCode::kElementOutOfRange: return "ElementOutOfRange";
    case ErrorCode::kGroundMismatch: return "GroundMismatch";
    case ErrorCode::kInvalidPartition: return "InvalidPartition";
    case ErrorCode::kUniverseMismatch: return "UniverseMismatch";
    case ErrorCode::kDomainMismatch: return "DomainMismatch";
    case ErrorCode::kNotWeaklyConnected: return "NotWeaklyConnected";
    case ErrorCode::kEmptyInstance: return "EmptyInstance";
    case ErrorCode::kNotSubdomain: return "NotSubdomain";
    case ErrorCode::kEmptySelection: return "EmptySelection";
    case ErrorCode::kNotInImage: return "NotInImage";
    case ErrorCode::kNotInSet: return "NotInSet";
    case ErrorCode::kNotDisjoint: return "NotDisjoint";
    case ErrorCode::kDatabaseMismatch: return "DatabaseMismatch";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kResourceLimit: return "ResourceLimit";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace expresso
