#include "cliquetrack/error.hpp"

namespace cliquetrack {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::SyntaxError: return "syntax-error";
    case ErrorCode::BadType: return "bad-type";
    case ErrorCode::MissingField: return "missing-field";
    case ErrorCode::IoError: return "io-error";
    case ErrorCode::UnknownId: return "unknown-id";
    case ErrorCode::DuplicateId: return "duplicate-id";
    case ErrorCode::LevelOutOfRange: return "level-out-of-range";
    case ErrorCode::LengthMismatch: return "length-mismatch";
    case ErrorCode::EmptySet: return "empty-set";
    case ErrorCode::MissingState: return "missing-state";
    case ErrorCode::TickOutOfRange: return "tick-out-of-range";
    case ErrorCode::BadSpec: return "bad-spec";
    case ErrorCode::GraphTooLarge: return "graph-too-large";
    case ErrorCode::BadDistribution: return "bad-distribution";
    case ErrorCode::LevelMismatch: return "level-mismatch";
    case ErrorCode::Infeasible: return "infeasible";
    }
    return "unknown";
}

} // namespace cliquetrack
