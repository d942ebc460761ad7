#include "semkg/error.hpp"

#include "semkg/diagnostics.hpp"

namespace semkg {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "INVALID_INPUT";
    case ErrorCode::ShapeMismatch: return "SHAPE";
    case ErrorCode::Parse: return "PARSE";
    case ErrorCode::Io: return "IO";
    case ErrorCode::Cycle: return "CYCLE";
    case ErrorCode::Duplicate: return "DUPLICATE";
    case ErrorCode::Unresolved: return "UNRESOLVED";
    case ErrorCode::DanglingEav: return "DANGLING_EAV";
  }
  return "UNKNOWN";
}

const char* diagnostic_code_name(DiagnosticCode code) {
  switch (code) {
    case DiagnosticCode::NoTuple: return "NO_TUPLE";
    case DiagnosticCode::UnknownEntity: return "UNKNOWN_ENTITY";
  }
  return "UNKNOWN";
}

}  // namespace semkg
