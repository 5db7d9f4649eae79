#include "trinom/tolerances.hpp"

#include <cstdlib>
#include <fstream>

#include "trinom/error.hpp"

namespace trinom {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

bool set_tolerance(Tolerances& tol, const std::string& key, double value) {
    if (!(value > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "tolerance '" + key + "' must be positive");
    }
    if (key == "tau_int") tol.integer = value;
    else if (key == "tau_tri") tol.triangle = value;
    else if (key == "tau_res") tol.residual = value;
    else if (key == "tau_region") tol.region = value;
    else if (key == "root_margin") tol.rootMargin = value;
    else return false;
    return true;
}

void load_tolerances(Tolerances& tol, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open config file: " + path);

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        const std::string where = path + ":" + std::to_string(lineno);
        if (eq == std::string::npos) {
            throw Error(ErrorCode::InvalidArgument, where + ": expected key=value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string text = trim(line.substr(eq + 1));
        char* end = nullptr;
        const double value = std::strtod(text.c_str(), &end);
        if (text.empty() || end == nullptr || *end != '\0') {
            throw Error(ErrorCode::InvalidArgument, where + ": bad number '" + text + "'");
        }
        if (!set_tolerance(tol, key, value)) {
            throw Error(ErrorCode::InvalidArgument, where + ": unknown key '" + key + "'");
        }
    }
}

}  // namespace trinom
