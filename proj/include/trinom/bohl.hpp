#pragma once

#include <cstdint>

#include "trinom/core.hpp"
#include "trinom/interval.hpp"
#include "trinom/tolerances.hpp"

namespace trinom {

enum class TriangleTag {
    Triangle,
    Degenerate,
    NoTriangleCDominates,
    NoTriangleBDominates,
    NoTriangleADominates,
};

const char* to_string(TriangleTag tag) noexcept;

/// Which side equals the sum of the other two in a degenerate triangle.
enum class LongSide { None, A, B, C };

struct TriangleClass {
    TriangleTag tag = TriangleTag::Triangle;
    LongSide longSide = LongSide::None;
    bool marginal = false;  // the decision fell within the triangle tolerance
};

/// Sides (A, B, C) with angles omega1, omega2, omega3 opposite to them.
struct TriangleGeometry {
    double sideA = 0.0;
    double sideB = 0.0;
    double sideC = 0.0;
    double omega1 = 0.0;
    double omega2 = 0.0;
    double omega3 = 0.0;
    bool degenerate = false;
};

/// Throws Error(ZeroSide) unless all sides are positive.
TriangleClass classify_triangle(double sideA, double sideB, double sideC,
                                double tol = Tolerances{}.triangle);

/// Law of Cosines with clamped arccos. Degenerate triangles get exact
/// angles (pi opposite the long side). Throws Error(NotATriangle).
TriangleGeometry triangle_angles(double sideA, double sideB, double sideC,
                                 double tol = Tolerances{}.triangle);

/// Pivot of the counting interval, [n(pi + arg b - arg c) - m(pi - arg c)] / 2pi.
double pivot(const NormalizedTrinomial& t);

/// Half-width w(r) = (n w1 + m w2) / 2pi of the triangle with sides
/// (r^n, |b| r^m, |c|). Throws Error(NotATriangle).
double omega_r(const NormalizedTrinomial& t, double r, const Tolerances& tol = {});

struct DiscCount {
    std::int64_t count = 0;
    bool marginal = false;
    TriangleTag triangle = TriangleTag::Triangle;
    BohlInterval interval{};  // meaningful for Triangle / Degenerate
    bool exceptional = false; // the |b|r^m = r^n + |c| special rule fired
};

/// Number of roots in the open disc |z| < r, without computing roots.
DiscCount count_roots_in_disc(const NormalizedTrinomial& t, double r,
                              const Tolerances& tol = {});

/// General trinomial with nonzero coefficients: normalizes first and
/// multiplies the reduced count at radius r^l by l.
DiscCount count_roots_in_disc(const Trinomial& t, double r, const Tolerances& tol = {});

}  // namespace trinom
