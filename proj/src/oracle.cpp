#include "trinom/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace trinom::oracle {

namespace {

constexpr int kMaxSweeps = 500;
constexpr double kUpdateTol = 1e-13;
constexpr double kStartAngle = 0.4;  // keeps the start circle off the real axis

struct Eval {
    Complex value;
    Complex derivative;
    double scale;  // sum |p_k| |z|^k, the rounding scale of the evaluation
};

Eval horner(std::span<const Complex> p, Complex z) {
    Complex value = p[0];
    Complex derivative{};
    double scale = std::abs(p[0]);
    const double az = std::abs(z);
    for (std::size_t k = 1; k < p.size(); ++k) {
        derivative = derivative * z + value;
        value = value * z + p[k];
        scale = scale * az + std::abs(p[k]);
    }
    return {value, derivative, scale};
}

}  // namespace

RootSet find_polynomial_roots(std::span<const Complex> coefficients, const Tolerances& tol) {
    if (coefficients.empty() || coefficients.front() == Complex{}) {
        throw Error(ErrorCode::InvalidArgument, "leading coefficient must be nonzero");
    }

    // Trailing zero coefficients are exact roots at the origin.
    std::size_t zeros = 0;
    std::size_t len = coefficients.size();
    while (len > 1 && coefficients[len - 1] == Complex{}) {
        --len;
        ++zeros;
    }
    std::vector<Complex> p(coefficients.begin(), coefficients.begin() + len);
    const Complex lead = p.front();
    for (Complex& coef : p) coef /= lead;
    const std::size_t degree = p.size() - 1;

    RootSet rs;
    rs.roots.reserve(degree + zeros);
    if (degree > 0) {
        const double radius = std::pow(std::abs(p.back()), 1.0 / static_cast<double>(degree));
        for (std::size_t k = 0; k < degree; ++k) {
            const double theta = 2.0 * kPi * static_cast<double>(k) / degree + kStartAngle;
            rs.roots.push_back(std::polar(radius, theta));
        }

        for (rs.iterations = 0; rs.iterations < kMaxSweeps; ++rs.iterations) {
            double worst = 0.0;
            for (std::size_t i = 0; i < degree; ++i) {
                Complex& z = rs.roots[i];
                const Eval e = horner(p, z);
                if (e.value == Complex{}) continue;

                Complex repulsion{};
                for (std::size_t j = 0; j < degree; ++j) {
                    if (j != i) repulsion += 1.0 / (z - rs.roots[j]);
                }
                Complex step;
                if (e.derivative == Complex{}) {
                    step = Complex{1e-8, 1e-8} * std::max(1.0, std::abs(z));
                } else {
                    const Complex newton = e.value / e.derivative;
                    step = newton / (1.0 - newton * repulsion);
                }
                if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
                z -= step;
                worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z)));
            }
            if (worst < kUpdateTol) {
                ++rs.iterations;
                break;
            }
        }
    }
    rs.roots.insert(rs.roots.end(), zeros, Complex{});

    rs.converged = true;
    rs.residuals.reserve(rs.roots.size());
    for (const Complex& z : rs.roots) {
        const Eval e = horner(coefficients, z);
        rs.residuals.push_back(std::abs(e.value));
        if (!(std::abs(e.value) <= tol.residual * e.scale)) rs.converged = false;
    }
    return rs;
}

RootSet find_roots(const Trinomial& t, const Tolerances& tol) {
    if (t.a == Complex{}) throw Error(ErrorCode::InvalidArgument, "leading coefficient a must be nonzero");
    std::vector<Complex> dense(static_cast<std::size_t>(t.n) + 1, Complex{});
    dense[0] = t.a;
    dense[static_cast<std::size_t>(t.n - t.m)] = t.b;
    dense[static_cast<std::size_t>(t.n)] = t.c;
    return find_polynomial_roots(dense, tol);
}

DiscTally count_in_disc(const RootSet& rs, double r, const Tolerances& tol) {
    if (!rs.converged) throw Error(ErrorCode::NotConverged, "root set did not converge");
    DiscTally out;
    for (const Complex& z : rs.roots) {
        const double mod = std::abs(z);
        if (mod < r) ++out.count;
        if (std::abs(mod - r) < tol.rootMargin) ++out.marginCount;
    }
    return out;
}

SpectralVerdict spectral_stable(const Trinomial& t, const Tolerances& tol) {
    const RootSet rs = find_roots(t, tol);
    if (!rs.converged) throw Error(ErrorCode::NotConverged, "root set did not converge");
    SpectralVerdict v;
    for (const Complex& z : rs.roots) v.maxModulus = std::max(v.maxModulus, std::abs(z));
    v.stable = v.maxModulus < 1.0;
    v.marginal = std::abs(v.maxModulus - 1.0) < tol.rootMargin;
    return v;
}

double spectral_radius(const Trinomial& t, const Tolerances& tol) {
    return spectral_stable(t, tol).maxModulus;
}

}  // namespace trinom::oracle
