#pragma once

#include <stdexcept>
#include <string>

namespace sl2 {

enum class ErrorCode {
    IllegalInterval,
    InvalidInput,
    NotFullyTriangulated,
    VertexNotInFragment,
    NotCrossing,
    NoClosingArc,
    NonPositiveEntry,
    NotAFundamentalDomain,
    NonIntegral,
    NonPositive,
    WindowTooSmall,
    ShapeViolation,
    MinIsOne,
    NotLocalMax,
    CrossingDetected,
    OutOfScope,
    InsufficientMargin,
    InconsistentCertificate,
    AgreementFailure,
    NotCoprime,
    OutOfRange,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace sl2
