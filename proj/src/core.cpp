#include "trinom/core.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace trinom {

double argument(Complex z) {
    if (z == Complex{}) throw Error(ErrorCode::ZeroArgument, "argument of zero is undefined");
    const double theta = std::atan2(z.imag(), z.real());
    // atan2 returns -pi for a negative real with a -0.0 imaginary part.
    return theta == -kPi ? kPi : theta;
}

double wrap_angle(double theta) {
    double r = std::remainder(theta, 2.0 * kPi);  // [-pi, pi]
    if (r <= -kPi) r += 2.0 * kPi;
    return r;
}

Trinomial::Trinomial(int n_, int m_, Complex a_, Complex b_, Complex c_)
    : n(n_), m(m_), a(a_), b(b_), c(c_) {
    if (!(n > m && m >= 1)) {
        throw Error(ErrorCode::InvalidArgument,
                    "exponents must satisfy n > m >= 1 (got n=" + std::to_string(n) +
                        ", m=" + std::to_string(m) + ")");
    }
}

Complex Trinomial::evaluate(Complex z) const {
    return a * std::pow(z, n) + b * std::pow(z, m) + c;
}

NormalizedTrinomial normalize(const Trinomial& t) {
    if (t.a == Complex{} || t.b == Complex{} || t.c == Complex{}) {
        throw Error(ErrorCode::DegenerateCoefficient,
                    "normalize requires nonzero a, b and c; use classify_degenerate");
    }
    const int l = std::gcd(t.n, t.m);
    return NormalizedTrinomial{t.n / l, t.m / l, t.b / t.a, t.c / t.a, l};
}

NormalizedTrinomial make_normalized(int n, int m, Complex b, Complex c) {
    return normalize(Trinomial::monic(n, m, b, c));
}

std::optional<bool> classify_degenerate(const Trinomial& t) {
    const Complex zero{};
    const bool a0 = t.a == zero, b0 = t.b == zero, c0 = t.c == zero;
    if (a0 && b0 && c0) {
        throw Error(ErrorCode::AllCoefficientsZero, "the zero polynomial has no stability verdict");
    }
    if (!a0 && !b0 && !c0) return std::nullopt;

    if (a0 && !b0) return std::abs(t.c) / std::abs(t.b) < 1.0;
    if (a0) return std::abs(t.c) < 1.0;
    if (b0) return std::abs(t.c) / std::abs(t.a) < 1.0;
    return std::abs(t.b) / std::abs(t.a) < 1.0;
}

NormalizedTrinomial angular_flow(const NormalizedTrinomial& t, double s) {
    NormalizedTrinomial g = t;
    g.b = t.b * std::polar(1.0, -static_cast<double>(t.n - t.m) * s);
    g.c = t.c * std::polar(1.0, -static_cast<double>(t.n) * s);
    return g;
}

}  // namespace trinom
