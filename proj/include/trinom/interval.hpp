#pragma once

#include <cstdint>
#include <utility>

#include "trinom/tolerances.hpp"

namespace trinom {

/// Open interval (pivot - halfWidth, pivot + halfWidth); empty when
/// halfWidth == 0.
struct BohlInterval {
    double pivot = 0.0;
    double halfWidth = 0.0;

    double lower() const { return pivot - halfWidth; }
    double upper() const { return pivot + halfWidth; }
};

struct IntegerCount {
    std::int64_t count = 0;
    bool boundaryMarginal = false;  // a boundary point lies within tol of an integer
};

/// Number of integers strictly inside the interval. Boundary points within
/// `tol` of an integer are treated as lying on it (and therefore excluded).
IntegerCount count_integers(const BohlInterval& I, double tol = Tolerances{}.integer);

/// Whether (lower, upper) are integers up to `tol`.
std::pair<bool, bool> boundary_is_integer(const BohlInterval& I,
                                          double tol = Tolerances{}.integer);

/// Largest pivot displacement nu/2 that keeps the count at k with
/// nu = min(2w - (k-1), k+1 - 2w). Requires a pivot on the half-integer
/// lattice, #I == k and non-integer boundary points; throws
/// Error(PreconditionViolated) otherwise.
double admissible_pivot_shift(const BohlInterval& I, std::int64_t k,
                              double tol = Tolerances{}.integer);

}  // namespace trinom
