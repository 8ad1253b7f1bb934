#include "sl2/error.hpp"

namespace sl2 {

const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::IllegalInterval: return "IllegalInterval";
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::NotFullyTriangulated: return "NotFullyTriangulated";
        case ErrorCode::VertexNotInFragment: return "VertexNotInFragment";
        case ErrorCode::NotCrossing: return "NotCrossing";
        case ErrorCode::NoClosingArc: return "NoClosingArc";
        case ErrorCode::NonPositiveEntry: return "NonPositiveEntry";
        case ErrorCode::NotAFundamentalDomain: return "NotAFundamentalDomain";
        case ErrorCode::NonIntegral: return "NonIntegral";
        case ErrorCode::NonPositive: return "NonPositive";
        case ErrorCode::WindowTooSmall: return "WindowTooSmall";
        case ErrorCode::ShapeViolation: return "ShapeViolation";
        case ErrorCode::MinIsOne: return "MinIsOne";
        case ErrorCode::NotLocalMax: return "NotLocalMax";
        case ErrorCode::CrossingDetected: return "CrossingDetected";
        case ErrorCode::OutOfScope: return "OutOfScope";
        case ErrorCode::InsufficientMargin: return "InsufficientMargin";
        case ErrorCode::InconsistentCertificate: return "InconsistentCertificate";
        case ErrorCode::AgreementFailure: return "AgreementFailure";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::OutOfRange: return "OutOfRange";
    }
    return "Unknown";
}

}  // namespace sl2
