#include "literal.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

namespace trinom::cli {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    double parse() {
        const double value = sum();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return value;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw LiteralError("bad number '" + std::string(text_) + "': " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char ch) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    double sum() {
        double value = product();
        for (;;) {
            if (eat('+')) value += product();
            else if (eat('-')) value -= product();
            else return value;
        }
    }

    double product() {
        double value = unary();
        for (;;) {
            if (eat('*')) {
                value *= unary();
            } else if (eat('/')) {
                const double d = unary();
                if (d == 0.0) fail("division by zero");
                value /= d;
            } else {
                return value;
            }
        }
    }

    double unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return atom();
    }

    double atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("missing value");
        if (text_.substr(pos_, 2) == "pi") {
            pos_ += 2;
            return std::numbers::pi;
        }
        if (eat('(')) {
            const double value = sum();
            if (!eat(')')) fail("missing ')'");
            return value;
        }
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr == first) fail("expected a number");
        pos_ += static_cast<std::size_t>(ptr - first);
        // from_chars accepts inf/nan spellings; literals must be finite
        if (!std::isfinite(value)) fail("value is not finite");
        return value;
    }
};

}  // namespace

double parse_real(std::string_view text) {
    if (text.empty()) throw LiteralError("empty number");
    return Parser(text).parse();
}

std::complex<double> parse_complex(std::string_view text) {
    const bool polarPrefix = text.substr(0, 6) == "polar:";
    if (polarPrefix) text.remove_prefix(6);
    const auto at = text.find('@');
    if (polarPrefix && at == std::string_view::npos) {
        throw LiteralError("polar literal needs MOD@ARG, got '" + std::string(text) + "'");
    }
    if (at != std::string_view::npos) {
        const double mod = parse_real(text.substr(0, at));
        const double arg = parse_real(text.substr(at + 1));
        if (mod < 0.0) throw LiteralError("negative modulus in '" + std::string(text) + "'");
        return std::polar(mod, arg);
    }
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) return {parse_real(text), 0.0};
    if (text.find(',', comma + 1) != std::string_view::npos) {
        throw LiteralError("too many components in '" + std::string(text) + "'");
    }
    return {parse_real(text.substr(0, comma)), parse_real(text.substr(comma + 1))};
}

}  // namespace trinom::cli
