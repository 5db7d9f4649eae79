#include "trinom/interval.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "trinom/error.hpp"

namespace trinom {

namespace {

bool near_integer(double x, double tol) { return std::abs(x - std::nearbyint(x)) <= tol; }

}  // namespace

IntegerCount count_integers(const BohlInterval& I, double tol) {
    if (!(I.halfWidth > 0.0)) return {};

    IntegerCount out;
    const double lo = I.lower();
    const double hi = I.upper();

    std::int64_t first = 0;
    if (near_integer(lo, tol)) {
        first = static_cast<std::int64_t>(std::nearbyint(lo)) + 1;
        out.boundaryMarginal = true;
    } else {
        first = static_cast<std::int64_t>(std::floor(lo)) + 1;
    }

    std::int64_t last = 0;
    if (near_integer(hi, tol)) {
        last = static_cast<std::int64_t>(std::nearbyint(hi)) - 1;
        out.boundaryMarginal = true;
    } else {
        last = static_cast<std::int64_t>(std::ceil(hi)) - 1;
    }

    out.count = std::max<std::int64_t>(0, last - first + 1);
    return out;
}

std::pair<bool, bool> boundary_is_integer(const BohlInterval& I, double tol) {
    return {near_integer(I.lower(), tol), near_integer(I.upper(), tol)};
}

double admissible_pivot_shift(const BohlInterval& I, std::int64_t k, double tol) {
    if (!near_integer(2.0 * I.pivot, tol)) {
        throw Error(ErrorCode::PreconditionViolated,
                    "pivot must lie on the half-integer lattice");
    }
    const auto [loInt, hiInt] = boundary_is_integer(I, tol);
    if (loInt || hiInt) {
        throw Error(ErrorCode::PreconditionViolated, "interval boundary points must not be integers");
    }
    const auto counted = count_integers(I, tol);
    if (counted.count != k) {
        throw Error(ErrorCode::PreconditionViolated,
                    "interval contains " + std::to_string(counted.count) + " integers, not " +
                        std::to_string(k));
    }
    const double width = 2.0 * I.halfWidth;
    const double kd = static_cast<double>(k);
    const double nu = std::min(width - (kd - 1.0), kd + 1.0 - width);
    return nu / 2.0;
}

}  // namespace trinom
