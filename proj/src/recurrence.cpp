#include "trinom/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace trinom {

namespace {

constexpr double kDivergence = 1e300;
constexpr double kUnderflow = 1e-250;  // windows below this carry no usable signal

}  // namespace

Trajectory simulate(const RecurrenceSpec& spec) {
    if (!(spec.n > spec.m && spec.m >= 1)) {
        throw Error(ErrorCode::InvalidArgument, "recurrence needs n > m >= 1");
    }
    const auto n = static_cast<std::size_t>(spec.n);
    const auto lag = static_cast<std::size_t>(spec.n - spec.m);
    if (spec.initial.size() != n) {
        throw Error(ErrorCode::InvalidArgument, "initial string must have exactly n values");
    }
    if (spec.horizon < n) throw Error(ErrorCode::InvalidArgument, "horizon must be at least n");

    Trajectory out;
    out.values.reserve(spec.horizon);
    out.values.assign(spec.initial.begin(), spec.initial.end());
    for (std::size_t t = n; t < spec.horizon; ++t) {
        const Complex x = -spec.b * out.values[t - lag] - spec.c * out.values[t - n];
        if (!(std::abs(x) <= kDivergence)) {
            out.divergent = true;
            break;
        }
        out.values.push_back(x);
    }
    return out;
}

double empirical_decay_rate(const Trajectory& trajectory, int n) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "window length must be positive");
    const auto window = static_cast<std::size_t>(n);
    const auto& xs = trajectory.values;
    if (trajectory.divergent) throw Error(ErrorCode::DegenerateTrajectory, "trajectory diverged");
    if (xs.size() < 4 * window) {
        throw Error(ErrorCode::DegenerateTrajectory, "trajectory shorter than four windows");
    }

    std::vector<double> at;
    std::vector<double> logMax;
    for (std::size_t start = 0; start + window <= xs.size(); start += window) {
        double peak = 0.0;
        for (std::size_t i = start; i < start + window; ++i) peak = std::max(peak, std::abs(xs[i]));
        if (peak > kUnderflow) {
            at.push_back(static_cast<double>(start));
            logMax.push_back(std::log(peak));
        }
    }
    if (at.empty()) throw Error(ErrorCode::DegenerateTrajectory, "trajectory is identically zero");

    // Fit the tail, where the dominant roots have taken over.
    std::size_t first = at.size() / 2;
    if (at.size() - first < 2) first = 0;
    if (at.size() - first < 2) {
        throw Error(ErrorCode::DegenerateTrajectory, "not enough nonzero windows to fit");
    }

    const double count = static_cast<double>(at.size() - first);
    double mx = 0.0, my = 0.0;
    for (std::size_t i = first; i < at.size(); ++i) {
        mx += at[i];
        my += logMax[i];
    }
    mx /= count;
    my /= count;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = first; i < at.size(); ++i) {
        sxy += (at[i] - mx) * (logMax[i] - my);
        sxx += (at[i] - mx) * (at[i] - mx);
    }
    return sxy / sxx;
}

std::size_t default_horizon(int n, std::optional<double> spectralRadius, std::size_t cap) {
    const auto nn = static_cast<std::size_t>(std::max(n, 1));
    std::size_t h = 200 * nn;
    if (spectralRadius && *spectralRadius < 1.0) {
        h = 50 * nn;
        if (*spectralRadius > 0.0) {
            const double needed = std::ceil(std::log(1e-6) / std::log(*spectralRadius));
            if (needed > static_cast<double>(h)) {
                h = needed >= static_cast<double>(cap) ? cap : static_cast<std::size_t>(needed);
            }
        }
    }
    return std::max(std::min(h, cap), 4 * nn);
}

void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory) {
    out << "t,re,im,modulus\n";
    char line[128];
    for (std::size_t t = 0; t < trajectory.values.size(); ++t) {
        const Complex x = trajectory.values[t];
        std::snprintf(line, sizeof line, "%zu,%.17g,%.17g,%.17g\n", t, x.real(), x.imag(),
                      std::abs(x));
        out << line;
    }
}

}  // namespace trinom
