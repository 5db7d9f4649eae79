#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace trinom::cli {

struct LiteralError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Real expression: sums of products/quotients of numbers and `pi`, e.g.
/// "0.6", "-pi/3", "2*pi-0.1", "0.6+pi".
double parse_real(std::string_view text);

/// "re,im", a bare real "re", "polar:MOD@ARG" or "MOD@ARG". ARG takes the
/// same expressions as parse_real.
std::complex<double> parse_complex(std::string_view text);

}  // namespace trinom::cli
