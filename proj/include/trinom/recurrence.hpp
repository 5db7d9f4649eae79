#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "trinom/core.hpp"

namespace trinom {

/// X(t) = -b X(t-(n-m)) - c X(t-n), seeded with X(0..n-1); its
/// characteristic polynomial is z^n + b z^m + c.
struct RecurrenceSpec {
    int n = 0;
    int m = 0;
    Complex b{};
    Complex c{};
    std::vector<Complex> initial;  // exactly n values
    std::size_t horizon = 0;       // total number of samples, >= n
};

struct Trajectory {
    std::vector<Complex> values;
    bool divergent = false;  // stopped early after |X(t)| exceeded 1e300
};

Trajectory simulate(const RecurrenceSpec& spec);

/// Least-squares slope (per step) of log(window max |X|) over windows of n
/// samples, fitted on the second half of the usable windows. Throws
/// Error(DegenerateTrajectory) for short, divergent or all-zero input.
double empirical_decay_rate(const Trajectory& trajectory, int n);

/// max(50n, ceil(log(1e-6)/log(rho))) for rho < 1, otherwise 200n; capped at
/// `cap` samples.
std::size_t default_horizon(int n, std::optional<double> spectralRadius,
                            std::size_t cap = 5'000'000);

/// Writes `t,re,im,modulus` rows.
void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory);

}  // namespace trinom
