#pragma once

#include <stdexcept>
#include <string>

namespace gaingraph {

// Failure categories surfaced by the library. The CLI maps them onto
// exit codes: input errors -> 2, internal inconsistencies -> 3,
// resource caps -> 4.
enum class ErrorCode {
    NonUnitGain,
    DuplicateEdge,
    SelfLoop,
    IndexOutOfRange,
    DimensionMismatch,
    NotAPermutation,
    NotACycle,
    NotConnected,
    NotTwoConnected,
    Bipartite,
    BudgetExceeded,
    TooLarge,
    NotHermitian,
    NonUnitEntry,
    ConvergenceFailure,
    ParseError,
    InternalInconsistency,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

    // 2 = bad input, 3 = internal inconsistency, 4 = resource cap.
    int exit_code() const {
        switch (code_) {
            case ErrorCode::BudgetExceeded:
            case ErrorCode::TooLarge:
                return 4;
            case ErrorCode::ConvergenceFailure:
            case ErrorCode::InternalInconsistency:
                return 3;
            default:
                return 2;
        }
    }

private:
    ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

}  // namespace gaingraph
