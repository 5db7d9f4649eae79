#include <doctest.h>

#include <cmath>
#include <numbers>

#include "literal.hpp"

using trinom::cli::LiteralError;
using trinom::cli::parse_complex;
using trinom::cli::parse_real;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("real expressions") {
    CHECK(parse_real("0.6") == 0.6);
    CHECK(parse_real("-0.05") == -0.05);
    CHECK(parse_real("+3") == 3.0);
    CHECK(parse_real("1e-3") == 1e-3);
    CHECK(parse_real("pi") == kPi);
    CHECK(parse_real("-pi/3") == doctest::Approx(-kPi / 3));
    CHECK(parse_real("2*pi-0.1") == doctest::Approx(2 * kPi - 0.1));
    CHECK(parse_real("0.6+pi") == doctest::Approx(0.6 + kPi));
    CHECK(parse_real("3*pi/4") == doctest::Approx(3 * kPi / 4));
    CHECK(parse_real(" 1 - 2 - 3 ") == -4.0);
    CHECK(parse_real("8/2/2") == 2.0);
    CHECK(parse_real("2*(pi+1)") == doctest::Approx(2 * (kPi + 1)));
    CHECK(parse_real("--1") == 1.0);
}

TEST_CASE("malformed reals") {
    for (const char* bad : {"", " ", "pi pi", "1+", "*2", "(1", "1)", "2pi", "abc", "1/0", "inf", "nan",
                            "1e999", "0x10", "1,2"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_real(bad), LiteralError);
    }
}

TEST_CASE("cartesian complex") {
    CHECK(parse_complex("1") == std::complex<double>(1.0, 0.0));
    CHECK(parse_complex("-0.05,0") == std::complex<double>(-0.05, 0.0));
    CHECK(parse_complex("0.3,-0.4") == std::complex<double>(0.3, -0.4));
    const auto z = parse_complex("pi/2, -pi");
    CHECK(z.real() == doctest::Approx(kPi / 2));
    CHECK(z.imag() == doctest::Approx(-kPi));
    CHECK_THROWS_AS(parse_complex("1,2,3"), LiteralError);
    CHECK_THROWS_AS(parse_complex("1,"), LiteralError);
    CHECK_THROWS_AS(parse_complex(",1"), LiteralError);
}

TEST_CASE("polar complex") {
    const auto z = parse_complex("polar:1@0.6");
    CHECK(z.real() == doctest::Approx(std::cos(0.6)));
    CHECK(z.imag() == doctest::Approx(std::sin(0.6)));
    const auto w = parse_complex("polar:0.05@pi+0.6");
    CHECK(w.real() == doctest::Approx(-0.05 * std::cos(0.6)));
    CHECK(w.imag() == doctest::Approx(-0.05 * std::sin(0.6)));
    const auto u = parse_complex("2@-pi/2");
    CHECK(std::abs(u.real()) < 1e-15);
    CHECK(u.imag() == doctest::Approx(-2.0));
    CHECK(parse_complex("polar:0@1") == std::complex<double>(0.0, 0.0));
    CHECK_THROWS_AS(parse_complex("polar:3,4"), LiteralError);
    CHECK_THROWS_AS(parse_complex("polar:-1@0"), LiteralError);
    CHECK_THROWS_AS(parse_complex("polar:1@"), LiteralError);
    CHECK_THROWS_AS(parse_complex("@1"), LiteralError);
    CHECK_THROWS_AS(parse_complex("polar:1@2@3"), LiteralError);
}
