#include "trinom/region.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace trinom {

const char* to_string(RegionTag tag) noexcept {
    switch (tag) {
    case RegionTag::Cohn: return "Cohn";
    case RegionTag::Gamma: return "Gamma";
    case RegionTag::Delta: return "Delta";
    case RegionTag::Outside: return "Outside";
    }
    return "Unknown";
}

const char* to_string(CertificateKind kind) noexcept {
    switch (kind) {
    case CertificateKind::DegenerateTable: return "DegenerateTable";
    case CertificateKind::ConstantTermBound: return "ConstantTermBound";
    case CertificateKind::CohnMembership: return "CohnMembership";
    case CertificateKind::BohlCount: return "BohlCount";
    case CertificateKind::Parametrization: return "Parametrization";
    }
    return "Unknown";
}

namespace {

double clamped_acos(double x) { return std::acos(std::clamp(x, -1.0, 1.0)); }

int parity_sign(int n) { return n % 2 == 0 ? 1 : -1; }

bool forms_triangle(double u, double absV, double tol) {
    if (!(u > 0.0 && absV > 0.0)) return false;
    const TriangleTag tag = classify_triangle(1.0, u, absV, tol).tag;
    return tag == TriangleTag::Triangle || tag == TriangleTag::Degenerate;
}

void require_nonzero(const NormalizedTrinomial& t) {
    if (t.b == Complex{} || t.c == Complex{}) {
        throw Error(ErrorCode::ZeroCoefficient, "b and c must be nonzero");
    }
}

StabilityVerdict degenerate_verdict(const Trinomial& t, bool stable, const Tolerances& tol) {
    StabilityVerdict v;
    v.stable = stable;
    v.n = t.n;
    v.m = t.m;
    v.certificate.kind = CertificateKind::DegenerateTable;

    // The deciding ratio from the table; a tie at 1 puts a root on the circle.
    const double ratio = t.a == Complex{}
                             ? (t.b == Complex{} ? std::abs(t.c) : std::abs(t.c) / std::abs(t.b))
                             : (t.b == Complex{} ? std::abs(t.c) / std::abs(t.a)
                                                 : std::abs(t.b) / std::abs(t.a));
    v.marginal = std::abs(ratio - 1.0) <= tol.region;
    return v;
}

}  // namespace

RegionPoint project_pi(const NormalizedTrinomial& t) {
    require_nonzero(t);
    return {std::abs(t.b), parity_sign(t.n) * std::abs(t.c), t.n, t.m};
}

double omega_uv(double u, double v, int n, int m, const Tolerances& tol) {
    if (v == 0.0) throw Error(ErrorCode::ZeroV, "omega(u, v) needs v != 0");
    const double absV = std::abs(v);
    if (!forms_triangle(u, absV, tol.triangle)) {
        throw Error(ErrorCode::NotATriangle, "(1, u, |v|) is not a triangle");
    }
    // Angles opposite the sides 1 and u. Going through triangle_angles snaps
    // degenerate triangles to exact 0/pi; a clamped arccos next to +-1 is off
    // by sqrt(eps) ~ 1e-8, enough to cross 2w = n - 1 on the line u = 1 + |v|.
    const TriangleGeometry g = triangle_angles(1.0, u, absV, tol.triangle);
    return (n * g.omega1 + m * g.omega2) / (2.0 * kPi);
}

RegionClass classify_region(double u, double v, int n, int m, const Tolerances& tol) {
    const int sign = parity_sign(n);
    const double absV = std::abs(v);

    RegionClass out;
    if (v != 0.0 && forms_triangle(u, absV, tol.triangle)) out.omega = omega_uv(u, v, n, m, tol);

    const bool inQuadrant = u >= 0.0 && sign * v >= 0.0;
    // Outside the quadrant the Cohn boundary |u| + |v| = 1 carries a root on the circle.
    if (!inQuadrant && std::abs(std::abs(u) + absV - 1.0) <= tol.region) out.marginal = true;
    if (std::abs(u) + absV < 1.0) {
        out.tag = inQuadrant ? RegionTag::Gamma : RegionTag::Cohn;
        return out;
    }
    if (!(u > 0.0 && sign * v > 0.0) || !out.omega) {
        out.tag = RegionTag::Outside;
        return out;
    }

    const double gap = 2.0 * *out.omega - (n - 1);
    if (std::abs(gap) <= tol.region) {
        out.tag = RegionTag::Outside;
        out.marginal = true;
    } else {
        out.tag = gap > 0.0 ? RegionTag::Delta : RegionTag::Outside;
    }
    return out;
}

RegionClass classify_region(const RegionPoint& p, const Tolerances& tol) {
    return classify_region(p.x, p.y, p.n, p.m, tol);
}

std::optional<double> t_bound(const RegionClass& cls, int n) {
    if (cls.tag == RegionTag::Gamma) return kPi / n;
    if (cls.tag == RegionTag::Delta && cls.omega) return kPi * (2.0 * *cls.omega - n + 1) / n;
    return std::nullopt;
}

Parameters decompose_parameters(const NormalizedTrinomial& t) {
    require_nonzero(t);
    if (std::gcd(t.n, t.m) != 1) {
        throw Error(ErrorCode::PreconditionViolated, "exponents must be coprime");
    }
    const int sign = parity_sign(t.n);
    Parameters p;
    p.x = std::abs(t.b);
    p.y = sign * std::abs(t.c);

    // e^{-ins} = c / y fixes s up to multiples of 2pi/n; t follows from b.
    const double phi = argument(t.c * static_cast<double>(sign));
    const double beta = argument(t.b);
    const double base = -phi / t.n;
    const double step = 2.0 * kPi / t.n;

    bool have = false;
    for (int k = 0; k < t.n; ++k) {
        const double s = base + k * step;
        const double tk = wrap_angle(beta + (t.n - t.m) * s);
        const bool better = !have || std::abs(tk) < std::abs(p.t) - 1e-12 ||
                            (std::abs(std::abs(tk) - std::abs(p.t)) <= 1e-12 && tk >= 0.0 &&
                             p.t < 0.0);
        if (better) {
            p.s = s;
            p.t = tk;
            have = true;
        }
    }

    p.s = std::fmod(p.s, 2.0 * kPi);
    if (p.s < 0.0) p.s += 2.0 * kPi;
    if (p.s >= 2.0 * kPi) p.s = 0.0;
    return p;
}

NormalizedTrinomial compose_parameters(const Parameters& p, int n, int m) {
    const bool finite = std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.s) &&
                        std::isfinite(p.t);
    if (!finite || !(p.x > 0.0) || p.y == 0.0 || p.s < 0.0 || p.s > 2.0 * kPi) {
        throw Error(ErrorCode::InvalidParameters,
                    "need x > 0, y != 0, s in [0, 2pi] and finite t");
    }
    if (!(n > m && m >= 1) || std::gcd(n, m) != 1) {
        throw Error(ErrorCode::InvalidParameters, "need n > m >= 1 with gcd(n, m) = 1");
    }
    NormalizedTrinomial out;
    out.n = n;
    out.m = m;
    out.b = p.x * std::polar(1.0, p.t - (n - m) * p.s);
    out.c = p.y * std::polar(1.0, -n * p.s);
    return out;
}

StabilityVerdict is_schur_stable(const Trinomial& t, const Tolerances& tol) {
    if (auto degenerate = classify_degenerate(t)) return degenerate_verdict(t, *degenerate, tol);

    const NormalizedTrinomial nt = normalize(t);
    StabilityVerdict v;
    v.n = nt.n;
    v.m = nt.m;
    v.reduction = nt.reduction;

    const double absC = std::abs(nt.c);
    const bool constantTie = std::abs(absC - 1.0) <= tol.region;
    if (absC >= 1.0) {
        v.stable = false;
        v.marginal = constantTie;
        v.certificate.kind = CertificateKind::ConstantTermBound;
        return v;
    }

    const RegionClass cls = classify_region(project_pi(nt), tol);
    const Parameters params = decompose_parameters(nt);
    Certificate& cert = v.certificate;
    cert.region = cls.tag;
    cert.omega = cls.omega;
    cert.parameters = params;
    cert.tBound = t_bound(cls, nt.n);
    v.marginal = cls.marginal || constantTie;

    switch (cls.tag) {
    case RegionTag::Gamma:
    case RegionTag::Cohn: {
        cert.kind = CertificateKind::CohnMembership;
        v.stable = true;
        // On the hypotenuse x + |y| = 1 the Delta bound pi/n applies strictly;
        // |t| = pi/n there puts a root on the circle.
        const double slack = 1.0 - (std::abs(params.x) + std::abs(params.y));
        if (slack <= tol.region && std::abs(std::abs(params.t) - kPi / nt.n) <= tol.region) {
            v.marginal = true;
        }
        break;
    }
    case RegionTag::Delta: {
        cert.kind = CertificateKind::Parametrization;
        const double bound = *cert.tBound;
        v.stable = std::abs(params.t) < bound;
        if (std::abs(std::abs(params.t) - bound) <= tol.region) v.marginal = true;
        break;
    }
    case RegionTag::Outside:
        cert.kind = CertificateKind::Parametrization;
        v.stable = false;
        break;
    }
    return v;
}

StabilityVerdict is_schur_stable_by_count(const Trinomial& t, const Tolerances& tol) {
    if (auto degenerate = classify_degenerate(t)) return degenerate_verdict(t, *degenerate, tol);

    const NormalizedTrinomial nt = normalize(t);
    const DiscCount dc = count_roots_in_disc(nt, 1.0, tol);

    StabilityVerdict v;
    v.n = nt.n;
    v.m = nt.m;
    v.reduction = nt.reduction;
    v.stable = dc.count == nt.n;
    v.marginal = dc.marginal;
    v.certificate.kind = CertificateKind::BohlCount;
    v.certificate.count = dc.count;
    if (dc.triangle == TriangleTag::Triangle || dc.triangle == TriangleTag::Degenerate) {
        v.certificate.interval = dc.interval;
    }
    return v;
}

namespace {

// Sign of (-1)^m x^n y^(n-m) without forming the powers.
int sign_condition(double x, double y, int n, int m) {
    if (x == 0.0 || y == 0.0) return 0;
    int s = m % 2 == 0 ? 1 : -1;
    if (x < 0.0 && n % 2 != 0) s = -s;
    if (y < 0.0 && (n - m) % 2 != 0) s = -s;
    return s;
}

}  // namespace

bool real_stability_c1c2(double x, double y, int n, int m) {
    const double ax = std::abs(x), ay = std::abs(y);
    if (ax + ay < 1.0) return true;
    if (!(ax - 1.0 < ay && ay < 1.0) || sign_condition(x, y, n, m) >= 0) return false;
    const double lhs = n * clamped_acos((1.0 + x * x - y * y) / (2.0 * ax)) +
                       (n - m) * clamped_acos((1.0 - x * x + y * y) / (2.0 * ay));
    return lhs / kPi < 1.0;
}

bool real_stability_c1c2_prime(double x, double y, int n, int m) {
    const double ax = std::abs(x), ay = std::abs(y);
    if (ax + ay < 1.0) return true;
    if (sign_condition(x, y, n, m) >= 0) return false;
    const double lhs = n * clamped_acos((1.0 - x * x - y * y) / (2.0 * ax * ay)) -
                       m * clamped_acos((1.0 - x * x + y * y) / (2.0 * ay));
    return lhs / kPi < 1.0;
}

std::array<bool, 4> sign_flip_table(double x, double y, int n, int m, const Tolerances& tol) {
    const RegionClass cls = classify_region(x, y, n, m, tol);
    if (cls.tag == RegionTag::Gamma) return {true, true, true, true};
    if (cls.tag != RegionTag::Delta) {
        throw Error(ErrorCode::NotInProjection, "point is neither a Gamma nor a Delta point");
    }
    if (n % 2 == 0) return {true, true, false, false};
    if (m % 2 == 0) return {true, false, false, true};
    return {true, false, true, false};
}

}  // namespace trinom
