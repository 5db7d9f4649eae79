#pragma once

#include <stdexcept>
#include <string>

namespace trinom {

enum class ErrorCode {
    InvalidArgument,
    DegenerateCoefficient,
    AllCoefficientsZero,
    ZeroCoefficient,
    ZeroArgument,
    ZeroSide,
    NotATriangle,
    ZeroV,
    PreconditionViolated,
    InvalidParameters,
    NotInProjection,
    NotConverged,
    DegenerateTrajectory,
    Io,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace trinom
