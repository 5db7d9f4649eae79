#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trinom/core.hpp"
#include "trinom/tolerances.hpp"

namespace trinom::oracle {

// Root-finding ground truth. Nothing here uses the counting theory; it only
// extracts roots and measures them.

struct RootSet {
    std::vector<Complex> roots;
    std::vector<double> residuals;  // |f(root)|
    bool converged = false;
    int iterations = 0;
};

/// Aberth-Ehrlich simultaneous iteration for a dense polynomial given by its
/// coefficients from the highest degree down. The leading coefficient must be
/// nonzero. Stops when every update is below 1e-13 (relative) or after 500
/// sweeps; `converged` reports whether the residuals pass `tol.residual`.
RootSet find_polynomial_roots(std::span<const Complex> coefficients,
                              const Tolerances& tol = {});

/// All n roots of a*z^n + b*z^m + c. Requires a != 0.
RootSet find_roots(const Trinomial& t, const Tolerances& tol = {});

struct DiscTally {
    std::int64_t count = 0;        // roots with |z| < r
    std::int64_t marginCount = 0;  // roots with ||z| - r| < tol.rootMargin
};

/// Throws Error(NotConverged) for an unconverged root set.
DiscTally count_in_disc(const RootSet& rs, double r, const Tolerances& tol = {});

struct SpectralVerdict {
    bool stable = false;
    bool marginal = false;
    double maxModulus = 0.0;
};

/// max |root| < 1. Throws Error(NotConverged).
SpectralVerdict spectral_stable(const Trinomial& t, const Tolerances& tol = {});

/// Largest root modulus, for horizon selection and decay-rate checks.
double spectral_radius(const Trinomial& t, const Tolerances& tol = {});

}  // namespace trinom::oracle
