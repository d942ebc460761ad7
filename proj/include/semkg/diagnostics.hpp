#pragma once

#include <string>

namespace semkg {

// Non-fatal pipeline conditions. The pipeline degrades on captioner noise
// instead of aborting, and records what happened per clip.
enum class DiagnosticCode {
  NoTuple,        // a caption yielded no E-R-E tuple
  UnknownEntity,  // an entity had no ontology mapping
};

const char* diagnostic_code_name(DiagnosticCode code);

struct Diagnostic {
  DiagnosticCode code;
  std::string detail;

  bool operator==(const Diagnostic&) const = default;
};

}  // namespace semkg
