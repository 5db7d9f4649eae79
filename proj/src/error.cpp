#include "trinom/error.hpp"

namespace trinom {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DegenerateCoefficient: return "DegenerateCoefficient";
    case ErrorCode::AllCoefficientsZero: return "AllCoefficientsZero";
    case ErrorCode::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::ZeroSide: return "ZeroSide";
    case ErrorCode::NotATriangle: return "NotATriangle";
    case ErrorCode::ZeroV: return "ZeroV";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::NotInProjection: return "NotInProjection";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::DegenerateTrajectory: return "DegenerateTrajectory";
    case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

}  // namespace trinom
