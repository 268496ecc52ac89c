#pragma once

#include <stdexcept>
#include <string>

namespace cliquetrack {

// Stable error taxonomy. The CLI maps these onto exit codes: input-shape
// problems (syntax, type, missing field, I/O) exit 2, domain problems exit 1.
enum class ErrorCode {
    SyntaxError,
    BadType,
    MissingField,
    IoError,
    UnknownId,
    DuplicateId,
    LevelOutOfRange,
    LengthMismatch,
    EmptySet,
    MissingState,
    TickOutOfRange,
    BadSpec,
    GraphTooLarge,
    BadDistribution,
    LevelMismatch,
    Infeasible,
};

// Stable kebab-case token, used in CLI output and violation listings.
const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

// Validation findings are data, not exceptions.
struct Violation {
    ErrorCode code;
    std::string entity;   // offending id or document path
    std::string message;
};

} // namespace cliquetrack
