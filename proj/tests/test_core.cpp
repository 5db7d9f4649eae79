#include <doctest.h>

#include <random>

#include "support/reference.hpp"
#include "trinom/core.hpp"
#include "trinom/error.hpp"

using namespace trinom;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected trinom::Error");
    return ErrorCode::InvalidArgument;
}

bool ref_stable(const Trinomial& t) {
    return ref::max_modulus(ref::companion_roots(t.n, t.m, t.a, t.b, t.c)) < 1.0;
}

}  // namespace

TEST_CASE("argument range and zero") {
    CHECK(argument({1.0, 0.0}) == 0.0);
    CHECK(argument({-1.0, 0.0}) == doctest::Approx(kPi));
    CHECK(argument({-1.0, -0.0}) == doctest::Approx(kPi));
    CHECK(argument({0.0, -2.0}) == doctest::Approx(-kPi / 2));
    CHECK(code_of([] { argument({}); }) == ErrorCode::ZeroArgument);
}

TEST_CASE("wrap_angle lands in (-pi, pi]") {
    CHECK(wrap_angle(kPi) == doctest::Approx(kPi));
    CHECK(wrap_angle(-kPi) == doctest::Approx(kPi));
    CHECK(wrap_angle(3 * kPi / 2) == doctest::Approx(-kPi / 2));
    CHECK(wrap_angle(0.25 + 8 * kPi) == doctest::Approx(0.25));
}

TEST_CASE("trinomial exponents are validated") {
    CHECK(code_of([] { Trinomial(3, 3, 1.0, 1.0, 1.0); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { Trinomial(3, 0, 1.0, 1.0, 1.0); }) == ErrorCode::InvalidArgument);
    const auto t = Trinomial::monic(3, 1, {0.0, 1.0}, 2.0);
    CHECK(std::abs(t.evaluate({0.0, 1.0}) - Complex(1.0, -1.0)) < 1e-15);
}

TEST_CASE("normalize divides by a and reduces the gcd") {
    const Complex b0{0.3, -0.7}, c0{-0.2, 0.1};
    auto nt = normalize(Trinomial::monic(6, 4, b0, c0));
    CHECK(nt.n == 3);
    CHECK(nt.m == 2);
    CHECK(nt.reduction == 2);
    CHECK(nt.b == b0);
    CHECK(nt.c == c0);

    nt = normalize(Trinomial(3, 1, 2.0, {0.0, 2.0}, -1.0));
    CHECK(nt.reduction == 1);
    CHECK(std::abs(nt.b - Complex(0.0, 1.0)) < 1e-15);
    CHECK(std::abs(nt.c - Complex(-0.5, 0.0)) < 1e-15);

    nt = normalize(Trinomial::monic(12, 9, 1.0, 0.5));
    CHECK(nt.n == 4);
    CHECK(nt.m == 3);
    CHECK(nt.reduction == 3);

    const auto again = normalize(nt.as_trinomial());
    CHECK(again.n == nt.n);
    CHECK(again.m == nt.m);
    CHECK(again.b == nt.b);
    CHECK(again.c == nt.c);
    CHECK(again.reduction == 1);

    CHECK(code_of([] { normalize(Trinomial::monic(3, 1, 0.0, 1.0)); }) ==
          ErrorCode::DegenerateCoefficient);
    CHECK(code_of([] { normalize(Trinomial(3, 1, 0.0, 1.0, 1.0)); }) ==
          ErrorCode::DegenerateCoefficient);
}

TEST_CASE("gcd reduction preserves stability") {
    std::mt19937_64 rng(21);
    int checked = 0;
    for (int i = 0; i < 400 && checked < 200; ++i) {
        const int l = std::uniform_int_distribution<int>(2, 4)(rng);
        const int n0 = std::uniform_int_distribution<int>(2, 5)(rng);
        const int m0 = std::uniform_int_distribution<int>(1, n0 - 1)(rng);
        if (ref::gcd(n0, m0) != 1) continue;
        const Complex b = ref::random_polar(rng, 0.05, 1.5), c = ref::random_polar(rng, 0.05, 1.0);
        const Trinomial t = Trinomial::monic(l * n0, l * m0, b, c);
        const auto nt = normalize(t);
        REQUIRE(nt.reduction == l);
        const double r0 = ref::max_modulus(ref::companion_roots(t.n, t.m, 1.0, b, c));
        const double r1 = ref::max_modulus(ref::companion_roots(nt.n, nt.m, 1.0, nt.b, nt.c));
        if (std::abs(r0 - 1.0) < 1e-6) continue;
        CHECK(std::pow(r0, l) == doctest::Approx(r1).epsilon(1e-8));
        CHECK((r0 < 1.0) == (r1 < 1.0));
        ++checked;
    }
    CHECK(checked >= 200);
}

TEST_CASE("degenerate table") {
    CHECK(classify_degenerate(Trinomial(3, 1, 0.0, 2.0, 1.0)) == true);
    CHECK(classify_degenerate(Trinomial(3, 1, 1.0, 0.0, 0.0)) == true);
    CHECK(classify_degenerate(Trinomial(3, 1, 1.0, 1.0, 0.0)) == false);
    CHECK(classify_degenerate(Trinomial(3, 1, 0.0, 0.0, 0.5)) == true);
    CHECK(classify_degenerate(Trinomial(3, 1, 0.0, 0.0, 1.5)) == false);
    CHECK_FALSE(classify_degenerate(Trinomial(3, 1, 1.0, 1.0, 1.0)).has_value());
    CHECK(code_of([] { classify_degenerate(Trinomial(3, 1, 0.0, 0.0, 0.0)); }) ==
          ErrorCode::AllCoefficientsZero);
}

TEST_CASE("degenerate table agrees with roots on each branch") {
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<int> degree(2, 9);
    int checks[3] = {0, 0, 0};
    for (int i = 0; i < 100; ++i) {
        const int n = degree(rng);
        const int m = std::uniform_int_distribution<int>(1, n - 1)(rng);
        const Complex a = ref::random_polar(rng, 0.1, 2.0), b = ref::random_polar(rng, 0.1, 2.0),
                      c = ref::random_polar(rng, 0.1, 2.0);
        // a = 0: b z^m + c has m roots of modulus (|c|/|b|)^(1/m)
        {
            const Trinomial t(n, m, 0.0, b, c);
            const double rho = std::pow(std::abs(c) / std::abs(b), 1.0 / m);
            if (std::abs(rho - 1.0) > 1e-9) {
                CHECK(*classify_degenerate(t) == (rho < 1.0));
                ++checks[0];
            }
        }
        for (const Trinomial& t : {Trinomial(n, m, a, 0.0, c), Trinomial(n, m, a, b, 0.0)}) {
            const bool expected = ref_stable(t);
            const double rho = ref::max_modulus(ref::companion_roots(t.n, t.m, t.a, t.b, t.c));
            if (std::abs(rho - 1.0) < 1e-6) continue;
            CHECK(*classify_degenerate(t) == expected);
            ++checks[t.b == Complex{} ? 1 : 2];
        }
    }
    CHECK(checks[0] >= 90);
    CHECK(checks[1] >= 90);
    CHECK(checks[2] >= 90);
}

TEST_CASE("angular flow rotates the roots") {
    const auto nt = make_normalized(5, 2, {0.4, -0.3}, {0.1, 0.5});
    const double s = 0.77;
    const auto g = angular_flow(nt, s);
    const auto roots = ref::companion_roots(nt.n, nt.m, 1.0, nt.b, nt.c);
    for (const auto& z : roots) {
        CHECK(std::abs(g.as_trinomial().evaluate(z * std::polar(1.0, -s))) < 1e-12);
    }
}
