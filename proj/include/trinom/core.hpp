#pragma once

#include <complex>
#include <optional>

#include "trinom/error.hpp"

namespace trinom {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Argument in (-pi, pi]. Throws Error(ZeroArgument) for z == 0.
double argument(Complex z);

/// Wraps an angle into (-pi, pi].
double wrap_angle(double theta);

/// a*z^n + b*z^m + c with n > m >= 1. Coefficients may be zero.
struct Trinomial {
    int n = 0;
    int m = 0;
    Complex a{1.0, 0.0};
    Complex b{};
    Complex c{};

    Trinomial() = default;
    Trinomial(int n_, int m_, Complex a_, Complex b_, Complex c_);

    /// Monic form a == 1.
    static Trinomial monic(int n, int m, Complex b, Complex c) {
        return Trinomial(n, m, Complex{1.0, 0.0}, b, c);
    }

    Complex evaluate(Complex z) const;
};

/// z^n + b*z^m + c with gcd(n, m) == 1, produced from a Trinomial by monic
/// scaling and the substitution z -> z^reduction.
struct NormalizedTrinomial {
    int n = 0;
    int m = 0;
    Complex b{};
    Complex c{};
    int reduction = 1;

    Trinomial as_trinomial() const { return Trinomial::monic(n, m, b, c); }
};

/// Throws Error(DegenerateCoefficient) if any of a, b, c is zero.
NormalizedTrinomial normalize(const Trinomial& t);

/// Normalizes an already monic gcd-1 trinomial; checks the invariants.
NormalizedTrinomial make_normalized(int n, int m, Complex b, Complex c);

/// Stability verdict for the case where some coefficient vanishes, or
/// std::nullopt when all three are nonzero. Throws
/// Error(AllCoefficientsZero) for the zero polynomial.
std::optional<bool> classify_degenerate(const Trinomial& t);

/// (b, c) -> (b e^{-i(n-m)s}, c e^{-ins}); rotates every root by e^{-is}.
NormalizedTrinomial angular_flow(const NormalizedTrinomial& t, double s);

}  // namespace trinom
