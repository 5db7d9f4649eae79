#pragma once

#include <string>

namespace trinom {

/// Numerical tie-breaking thresholds shared by every module.
///
/// Each comparison that could land on a mathematical tie (an integer boundary
/// point, a degenerate triangle, the 2w = n-1 curve) is decided with one of
/// these and reports a marginal flag when it falls inside the band.
struct Tolerances {
    double integer = 1e-9;     // boundary point of a counting interval vs. an integer
    double triangle = 1e-9;    // triangle ties, relative to the largest side
    double residual = 1e-8;    // oracle |f(root)| relative to coefficient scale
    double region = 1e-9;      // 2w vs. n-1 and |t| vs. its bound
    double rootMargin = 1e-6;  // oracle roots this close to the circle are marginal
};

/// Applies a `key=value` assignment; returns false for an unknown key.
bool set_tolerance(Tolerances& tol, const std::string& key, double value);

/// Reads a `key=value` file (`#` starts a comment). Throws Error(Io) when the
/// file cannot be opened and Error(InvalidArgument) on malformed lines.
void load_tolerances(Tolerances& tol, const std::string& path);

}  // namespace trinom
