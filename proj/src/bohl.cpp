#include "trinom/bohl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace trinom {

const char* to_string(TriangleTag tag) noexcept {
    switch (tag) {
    case TriangleTag::Triangle: return "Triangle";
    case TriangleTag::Degenerate: return "Degenerate";
    case TriangleTag::NoTriangleCDominates: return "NoTriangle-cDominates";
    case TriangleTag::NoTriangleBDominates: return "NoTriangle-bDominates";
    case TriangleTag::NoTriangleADominates: return "NoTriangle-aDominates";
    }
    return "Unknown";
}

TriangleClass classify_triangle(double sideA, double sideB, double sideC, double tol) {
    if (!(sideA > 0.0 && sideB > 0.0 && sideC > 0.0)) {
        throw Error(ErrorCode::ZeroSide, "triangle sides must be positive");
    }
    const double band = tol * std::max({sideA, sideB, sideC});
    const double excessA = sideA - (sideB + sideC);
    const double excessB = sideB - (sideA + sideC);
    const double excessC = sideC - (sideA + sideB);

    if (excessA > band) return {TriangleTag::NoTriangleADominates, LongSide::None, false};
    if (excessB > band) return {TriangleTag::NoTriangleBDominates, LongSide::None, false};
    if (excessC > band) return {TriangleTag::NoTriangleCDominates, LongSide::None, false};

    if (std::abs(excessA) <= band) return {TriangleTag::Degenerate, LongSide::A, true};
    if (std::abs(excessB) <= band) return {TriangleTag::Degenerate, LongSide::B, true};
    if (std::abs(excessC) <= band) return {TriangleTag::Degenerate, LongSide::C, true};
    return {TriangleTag::Triangle, LongSide::None, false};
}

namespace {

double clamped_acos(double x) { return std::acos(std::clamp(x, -1.0, 1.0)); }

// Sides (r^n, |b| r^m, |c|) rescaled by their maximum; computed in log space
// so that large degrees cannot overflow. A side that underflows is kept at the
// smallest normal double so it still reads as dominated rather than zero.
struct ScaledSides {
    double a, b, c;
};

ScaledSides sides_at(const NormalizedTrinomial& t, double logR) {
    const double la = t.n * logR;
    const double lb = std::log(std::abs(t.b)) + t.m * logR;
    const double lc = std::log(std::abs(t.c));
    const double top = std::max({la, lb, lc});
    constexpr double floor = std::numeric_limits<double>::min();
    return {std::max(std::exp(la - top), floor), std::max(std::exp(lb - top), floor),
            std::max(std::exp(lc - top), floor)};
}

void require_nonzero(const NormalizedTrinomial& t) {
    if (t.b == Complex{} || t.c == Complex{}) {
        throw Error(ErrorCode::ZeroCoefficient, "b and c must be nonzero");
    }
}

}  // namespace

TriangleGeometry triangle_angles(double sideA, double sideB, double sideC, double tol) {
    const TriangleClass cls = classify_triangle(sideA, sideB, sideC, tol);
    if (cls.tag != TriangleTag::Triangle && cls.tag != TriangleTag::Degenerate) {
        throw Error(ErrorCode::NotATriangle, std::string("sides do not form a triangle: ") +
                                                 to_string(cls.tag));
    }

    TriangleGeometry g{sideA, sideB, sideC, 0.0, 0.0, 0.0, cls.tag == TriangleTag::Degenerate};
    if (g.degenerate) {
        switch (cls.longSide) {
        case LongSide::A: g.omega1 = kPi; break;
        case LongSide::B: g.omega2 = kPi; break;
        case LongSide::C: g.omega3 = kPi; break;
        case LongSide::None: break;
        }
        return g;
    }

    const double top = std::max({sideA, sideB, sideC});
    const double a = sideA / top, b = sideB / top, c = sideC / top;
    g.omega1 = clamped_acos((b * b + c * c - a * a) / (2.0 * b * c));
    g.omega2 = clamped_acos((a * a + c * c - b * b) / (2.0 * a * c));
    g.omega3 = clamped_acos((a * a + b * b - c * c) / (2.0 * a * b));
    return g;
}

double pivot(const NormalizedTrinomial& t) {
    require_nonzero(t);
    const double beta = argument(t.b);
    const double gamma = argument(t.c);
    return (t.n * (kPi + beta - gamma) - t.m * (kPi - gamma)) / (2.0 * kPi);
}

double omega_r(const NormalizedTrinomial& t, double r, const Tolerances& tol) {
    require_nonzero(t);
    if (!(r > 0.0)) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
    const ScaledSides s = sides_at(t, std::log(r));
    const TriangleGeometry g = triangle_angles(s.a, s.b, s.c, tol.triangle);
    return (t.n * g.omega1 + t.m * g.omega2) / (2.0 * kPi);
}

namespace {

// The radius enters only through log r, which keeps r^reduction and r^n
// finite for tiny or huge radii.
DiscCount count_at_log_radius(const NormalizedTrinomial& t, double logR, const Tolerances& tol) {
    if (std::gcd(t.n, t.m) != 1) {
        throw Error(ErrorCode::PreconditionViolated, "exponents must be coprime; normalize first");
    }

    const ScaledSides s = sides_at(t, logR);
    const TriangleClass cls = classify_triangle(s.a, s.b, s.c, tol.triangle);

    DiscCount out;
    out.triangle = cls.tag;
    switch (cls.tag) {
    case TriangleTag::NoTriangleCDominates: out.count = 0; return out;
    case TriangleTag::NoTriangleBDominates: out.count = t.m; return out;
    case TriangleTag::NoTriangleADominates: out.count = t.n; return out;
    default: break;
    }

    const TriangleGeometry g = triangle_angles(s.a, s.b, s.c, tol.triangle);
    out.interval = BohlInterval{pivot(t), (t.n * g.omega1 + t.m * g.omega2) / (2.0 * kPi)};
    const IntegerCount counted = count_integers(out.interval, tol.integer);
    out.count = counted.count;
    out.marginal = cls.marginal || counted.boundaryMarginal;

    if (cls.tag == TriangleTag::Degenerate && cls.longSide == LongSide::B) {
        // |b| r^m = r^n + |c| with r^(n-m) > m|b|/n and an integer right end.
        const double lhs = (t.n - t.m) * logR;
        const double rhs = std::log(t.m * std::abs(t.b) / t.n);
        const double right = out.interval.upper();
        if (lhs > rhs && std::abs(right - std::nearbyint(right)) <= tol.integer) {
            out.count = t.m;
            out.exceptional = true;
        }
    }
    return out;
}

}  // namespace

DiscCount count_roots_in_disc(const NormalizedTrinomial& t, double r, const Tolerances& tol) {
    require_nonzero(t);
    if (!(r > 0.0)) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
    return count_at_log_radius(t, std::log(r), tol);
}

DiscCount count_roots_in_disc(const Trinomial& t, double r, const Tolerances& tol) {
    if (t.a == Complex{} || t.b == Complex{} || t.c == Complex{}) {
        throw Error(ErrorCode::ZeroCoefficient, "a, b and c must be nonzero");
    }
    if (!(r > 0.0)) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
    const NormalizedTrinomial reduced = normalize(t);
    DiscCount out = count_at_log_radius(reduced, reduced.reduction * std::log(r), tol);
    out.count *= reduced.reduction;
    return out;
}

}  // namespace trinom
