#pragma once

#include <array>
#include <optional>

#include "trinom/bohl.hpp"
#include "trinom/core.hpp"
#include "trinom/interval.hpp"
#include "trinom/tolerances.hpp"

namespace trinom {

/// Image of [1:b:c] under the projection to real representatives:
/// x = |b|, y = (-1)^n |c|.
struct RegionPoint {
    double x = 0.0;
    double y = 0.0;
    int n = 0;
    int m = 0;
};

enum class RegionTag { Cohn, Gamma, Delta, Outside };

const char* to_string(RegionTag tag) noexcept;

struct RegionClass {
    RegionTag tag = RegionTag::Outside;
    std::optional<double> omega;  // present whenever (1, |u|, |v|) is a triangle
    bool marginal = false;
};

/// The four real parameters of the stable-region parametrization.
/// b = x e^{it} e^{-i(n-m)s}, c = y e^{-ins}.
struct Parameters {
    double x = 0.0;
    double y = 0.0;
    double s = 0.0;
    double t = 0.0;
};

enum class CertificateKind {
    DegenerateTable,
    ConstantTermBound,
    CohnMembership,
    BohlCount,
    Parametrization,
};

const char* to_string(CertificateKind kind) noexcept;

struct Certificate {
    CertificateKind kind = CertificateKind::DegenerateTable;
    RegionTag region = RegionTag::Outside;   // Cohn/Parametrization kinds
    std::optional<double> omega;
    std::optional<Parameters> parameters;
    std::optional<double> tBound;            // |t| bound of the region, if any
    std::optional<BohlInterval> interval;    // BohlCount kind
    std::int64_t count = 0;                  // BohlCount kind
};

struct StabilityVerdict {
    bool stable = false;
    bool marginal = false;
    int n = 0;           // exponents after gcd reduction (original if degenerate)
    int m = 0;
    int reduction = 1;
    Certificate certificate;
};

/// Throws Error(ZeroCoefficient) if b or c is zero.
RegionPoint project_pi(const NormalizedTrinomial& t);

/// w(u, v) from the triangle with sides (1, u, |v|). Throws Error(ZeroV) for
/// v == 0 and Error(NotATriangle) when the sides violate the triangle
/// inequality beyond the triangle tolerance.
double omega_uv(double u, double v, int n, int m, const Tolerances& tol = {});

/// Classifies an arbitrary real point (u, v) of the plane. Inside the
/// projection quadrant (u >= 0, (-1)^n v >= 0) points are Gamma, Delta or
/// Outside; a point of the Cohn domain outside that quadrant is Cohn.
RegionClass classify_region(double u, double v, int n, int m, const Tolerances& tol = {});
RegionClass classify_region(const RegionPoint& p, const Tolerances& tol = {});

/// |t| bound: pi/n on Gamma, pi(2w - n + 1)/n on Delta, none otherwise.
std::optional<double> t_bound(const RegionClass& cls, int n);

/// Canonical (x, y, s, t): s in [0, 2pi), |t| <= pi/n, the representative
/// minimizing |t| with ties broken toward t >= 0.
Parameters decompose_parameters(const NormalizedTrinomial& t);

/// Inverse of decompose_parameters. Throws Error(InvalidParameters).
NormalizedTrinomial compose_parameters(const Parameters& p, int n, int m);

/// Full Schur stability decision with certificate.
StabilityVerdict is_schur_stable(const Trinomial& t, const Tolerances& tol = {});

/// Same decision from the disc count at r = 1: stable iff all n roots are
/// counted. Certificate kind BohlCount.
StabilityVerdict is_schur_stable_by_count(const Trinomial& t, const Tolerances& tol = {});

/// Real-coefficient characterization by conditions (C1) or (C2).
bool real_stability_c1c2(double x, double y, int n, int m);

/// Same with (C2) replaced by its (C2') variant.
bool real_stability_c1c2_prime(double x, double y, int n, int m);

/// Stability of z^n + (+-x) z^m + (+-y) for the four sign choices, predicted
/// from the region class of (x, y). Index: bit 0 flips x, bit 1 flips y, so
/// [0] = (x, y), [1] = (-x, y), [2] = (x, -y), [3] = (-x, -y).
/// Throws Error(NotInProjection) unless (x, y) is a Gamma or Delta point.
std::array<bool, 4> sign_flip_table(double x, double y, int n, int m,
                                    const Tolerances& tol = {});

}  // namespace trinom
