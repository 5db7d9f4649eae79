// trinom: command-line front end over the C interface.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "literal.hpp"
#include "trinom/trinom.h"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitStable = 0;
constexpr int kExitUnstable = 1;
constexpr int kExitMarginal = 2;
constexpr int kExitUsage = 64;
constexpr int kExitSoftware = 70;
constexpr int kExitIo = 74;

// Unstable runs whose fitted rate is above -kRateSlack are taken as not decaying.
constexpr double kRateSlack = 1e-3;

struct Failure {
    int exitCode;
    std::string message;
};

[[noreturn]] void usage(const std::string& message) { throw Failure{kExitUsage, message}; }

void check(trinom_status st) {
    if (st == TRINOM_OK) return;
    const int code = st == TRINOM_E_IO ? kExitIo
                   : st == TRINOM_E_INTERNAL || st == TRINOM_E_OUT_OF_MEMORY ? kExitSoftware
                   : kExitUsage;
    throw Failure{code, std::string(trinom_status_string(st)) + ": " + trinom_last_error()};
}

struct ContextHandle {
    trinom_context* ptr = nullptr;
    ContextHandle() { check(trinom_context_create(&ptr)); }
    ~ContextHandle() { trinom_context_destroy(ptr); }
    ContextHandle(const ContextHandle&) = delete;
    ContextHandle& operator=(const ContextHandle&) = delete;
};

struct TolFlags {
    std::string config;
    std::optional<double> tauInt, tauTri, tauRes, tauRegion, rootMargin;

    void apply(trinom_context* ctx) const {
        std::string path = config;
        if (path.empty()) {
            if (const char* env = std::getenv("TRINOM_CONFIG"); env && *env) path = env;
        }
        if (!path.empty()) check(trinom_context_load(ctx, path.c_str()));
        const std::pair<const char*, const std::optional<double>*> overrides[] = {
            {"tau_int", &tauInt}, {"tau_tri", &tauTri}, {"tau_res", &tauRes},
            {"tau_region", &tauRegion}, {"root_margin", &rootMargin}};
        for (const auto& [key, value] : overrides) {
            if (*value) check(trinom_context_set(ctx, key, **value));
        }
    }
};

struct TrinomArgs {
    int n = 0;
    int m = 0;
    std::string a = "1";
    std::string b;
    std::string c;

    void add_to(CLI::App* cmd) {
        cmd->add_option("-n", n, "degree of the leading term")->required();
        cmd->add_option("-m", m, "degree of the middle term")->required();
        cmd->add_option("-a", a, "leading coefficient (default 1)");
        cmd->add_option("-b", b, "middle coefficient: re,im or polar:MOD@ARG")->required();
        cmd->add_option("-c", c, "constant coefficient: re,im or polar:MOD@ARG")->required();
    }
};

trinom_complex literal(const std::string& text, const char* name) {
    try {
        const auto z = trinom::cli::parse_complex(text);
        return {z.real(), z.imag()};
    } catch (const trinom::cli::LiteralError& e) {
        usage(std::string("-") + name + ": " + e.what());
    }
}

json complex_json(trinom_complex z) { return {{"re", z.re}, {"im", z.im}}; }

json input_json(const TrinomArgs& t, trinom_complex a, trinom_complex b, trinom_complex c) {
    return {{"n", t.n}, {"m", t.m}, {"a", complex_json(a)}, {"b", complex_json(b)},
            {"c", complex_json(c)}};
}

const char* region_name(trinom_region r) {
    switch (r) {
    case TRINOM_REGION_COHN: return "cohn";
    case TRINOM_REGION_GAMMA: return "gamma";
    case TRINOM_REGION_DELTA: return "delta";
    case TRINOM_REGION_OUTSIDE: return "outside";
    }
    return "unknown";
}

const char* certificate_name(trinom_certificate_kind k) {
    switch (k) {
    case TRINOM_CERT_DEGENERATE_TABLE: return "degenerate_table";
    case TRINOM_CERT_CONSTANT_TERM_BOUND: return "constant_term_bound";
    case TRINOM_CERT_COHN_MEMBERSHIP: return "cohn_membership";
    case TRINOM_CERT_BOHL_COUNT: return "bohl_count";
    case TRINOM_CERT_PARAMETRIZATION: return "parametrization";
    }
    return "unknown";
}

const char* triangle_name(trinom_triangle t) {
    switch (t) {
    case TRINOM_TRIANGLE: return "triangle";
    case TRINOM_TRIANGLE_DEGENERATE: return "degenerate";
    case TRINOM_TRIANGLE_NONE_C_DOMINATES: return "c_dominates";
    case TRINOM_TRIANGLE_NONE_B_DOMINATES: return "b_dominates";
    case TRINOM_TRIANGLE_NONE_A_DOMINATES: return "a_dominates";
    }
    return "unknown";
}

json verdict_json(const trinom_verdict& v) {
    json cert = {{"kind", certificate_name(v.certificate)}};
    if (v.certificate == TRINOM_CERT_COHN_MEMBERSHIP || v.certificate == TRINOM_CERT_PARAMETRIZATION) {
        cert["region"] = region_name(v.region);
    }
    if (v.has_omega) cert["omega"] = v.omega;
    if (v.has_parameters) {
        cert["parameters"] = {{"x", v.x}, {"y", v.y}, {"s", v.s}, {"t", v.t}};
    }
    if (v.has_t_bound) cert["tBound"] = v.t_bound;
    if (v.has_interval) cert["interval"] = {{"pivot", v.pivot}, {"halfWidth", v.half_width}};
    if (v.certificate == TRINOM_CERT_BOHL_COUNT) cert["count"] = v.count;
    return {{"stable", static_cast<bool>(v.stable)},
            {"marginal", static_cast<bool>(v.marginal)},
            {"n", v.n},
            {"m", v.m},
            {"reduction", v.reduction},
            {"certificate", cert}};
}

int verdict_exit(const trinom_verdict& v) {
    if (v.marginal) return kExitMarginal;
    return v.stable ? kExitStable : kExitUnstable;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int run_check(const TolFlags& flags, const TrinomArgs& t, bool viaCount) {
    ContextHandle ctx;
    flags.apply(ctx.ptr);
    const auto a = literal(t.a, "a"), b = literal(t.b, "b"), c = literal(t.c, "c");
    trinom_verdict v;
    check(viaCount ? trinom_check_by_count(ctx.ptr, t.n, t.m, a, b, c, &v)
                   : trinom_check(ctx.ptr, t.n, t.m, a, b, c, &v));
    json out = {{"input", input_json(t, a, b, c)}};
    out.update(verdict_json(v));
    emit(out);
    return verdict_exit(v);
}

int run_count(const TolFlags& flags, const TrinomArgs& t, double r, bool oracle) {
    if (!(r > 0.0) || !std::isfinite(r)) usage("-r must be a positive finite radius");
    ContextHandle ctx;
    flags.apply(ctx.ptr);
    const auto a = literal(t.a, "a"), b = literal(t.b, "b"), c = literal(t.c, "c");
    trinom_disc_count dc;
    check(trinom_count_roots(ctx.ptr, t.n, t.m, a, b, c, r, &dc));
    json out = {{"input", input_json(t, a, b, c)},
                {"r", r},
                {"count", dc.count},
                {"marginal", static_cast<bool>(dc.marginal)},
                {"triangle", triangle_name(dc.triangle)},
                {"exceptional", static_cast<bool>(dc.exceptional)}};
    if (dc.has_interval) out["interval"] = {{"pivot", dc.pivot}, {"halfWidth", dc.half_width}};
    if (oracle) {
        trinom_oracle_tally tally;
        check(trinom_oracle_count(ctx.ptr, t.n, t.m, a, b, c, r, &tally));
        out["oracle"] = {{"count", tally.count},
                         {"marginCount", tally.margin_count},
                         {"maxModulus", tally.max_modulus}};
        out["agree"] = tally.count == dc.count;
    }
    emit(out);
    return 0;
}

struct RegionArgs {
    int n = 0;
    int m = 0;
    double umin = -0.25, umax = 2.25, vmin = -1.25, vmax = 1.25;
    int width = 400;
    int height = 400;
    unsigned threads = 0;
    std::string ppm;
    std::string csv;
};

int run_region(const TolFlags& flags, const RegionArgs& r) {
    ContextHandle ctx;
    flags.apply(ctx.ptr);
    trinom_raster* raster = nullptr;
    check(trinom_region_rasterize(ctx.ptr, r.n, r.m, r.umin, r.umax, r.vmin, r.vmax, r.width,
                                  r.height, r.threads, &raster));
    std::unique_ptr<trinom_raster, void (*)(trinom_raster*)> guard(raster, trinom_raster_destroy);
    const bool ppmToStdout = r.ppm == "-" || (r.ppm.empty() && r.csv.empty());
    if (ppmToStdout) {
        check(trinom_raster_write_ppm(raster, "/dev/stdout"));
        return 0;
    }
    if (!r.ppm.empty()) check(trinom_raster_write_ppm(raster, r.ppm.c_str()));
    if (!r.csv.empty()) check(trinom_raster_write_csv(raster, r.csv.c_str()));

    json cells = json::object();
    const std::pair<const char*, trinom_cell_tag> tags[] = {
        {"cohn", TRINOM_CELL_COHN}, {"gamma", TRINOM_CELL_GAMMA}, {"delta", TRINOM_CELL_DELTA},
        {"outside", TRINOM_CELL_OUTSIDE}, {"marginal", TRINOM_CELL_MARGINAL}};
    for (const auto& [name, tag] : tags) {
        size_t count = 0;
        check(trinom_raster_count(raster, tag, &count));
        cells[name] = count;
    }
    json out = {{"n", r.n},
                {"m", r.m},
                {"bounds", {{"umin", r.umin}, {"umax", r.umax}, {"vmin", r.vmin}, {"vmax", r.vmax}}},
                {"width", r.width},
                {"height", r.height},
                {"cells", cells}};
    if (!r.ppm.empty()) out["ppm"] = r.ppm;
    if (!r.csv.empty()) out["csv"] = r.csv;
    emit(out);
    return 0;
}

int run_params(const TolFlags& flags, const TrinomArgs& t) {
    ContextHandle ctx;
    flags.apply(ctx.ptr);
    const auto a = literal(t.a, "a"), b = literal(t.b, "b"), c = literal(t.c, "c");
    trinom_parameters p;
    check(trinom_decompose(ctx.ptr, t.n, t.m, a, b, c, &p));
    json out = {{"input", input_json(t, a, b, c)},
                {"n", p.n},
                {"m", p.m},
                {"reduction", p.reduction},
                {"x", p.x},
                {"y", p.y},
                {"s", p.s},
                {"t", p.t},
                {"region", region_name(p.region)},
                {"omega", p.has_omega ? json(p.omega) : json(nullptr)},
                {"tBound", p.has_t_bound ? json(p.t_bound) : json(nullptr)},
                {"withinBound", static_cast<bool>(p.within_bound)},
                {"marginal", static_cast<bool>(p.marginal)}};
    emit(out);
    return 0;
}

struct ComposeArgs {
    int n = 0;
    int m = 0;
    double x = 0.0, y = 0.0, s = 0.0, t = 0.0;
};

int run_compose(const ComposeArgs& p) {
    trinom_complex b, c;
    check(trinom_compose(p.n, p.m, p.x, p.y, p.s, p.t, &b, &c));
    emit({{"n", p.n},
          {"m", p.m},
          {"a", complex_json({1.0, 0.0})},
          {"b", complex_json(b)},
          {"c", complex_json(c)}});
    return 0;
}

struct SimulateArgs {
    std::size_t horizon = 0;
    std::uint64_t seed = 1;
    std::string csv;
};

int run_simulate(const TolFlags& flags, const TrinomArgs& t, const SimulateArgs& s) {
    ContextHandle ctx;
    flags.apply(ctx.ptr);
    const auto a = literal(t.a, "a"), b = literal(t.b, "b"), c = literal(t.c, "c");
    if (a.re == 0.0 && a.im == 0.0) usage("simulate needs a nonzero leading coefficient");
    const std::complex<double> ac{a.re, a.im};
    const auto bm = std::complex<double>{b.re, b.im} / ac;
    const auto cm = std::complex<double>{c.re, c.im} / ac;
    const trinom_complex bn{bm.real(), bm.imag()}, cn{cm.real(), cm.imag()};

    trinom_verdict v;
    check(trinom_check(ctx.ptr, t.n, t.m, a, b, c, &v));
    int oracleStable = 0, oracleMarginal = 0;
    double rho = 0.0;
    check(trinom_oracle_stable(ctx.ptr, t.n, t.m, a, b, c, &oracleStable, &oracleMarginal, &rho));

    std::size_t horizon = s.horizon;
    if (horizon == 0) check(trinom_default_horizon(ctx.ptr, t.n, t.m, bn, cn, &horizon));

    std::mt19937_64 rng(s.seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<trinom_complex> initial(static_cast<std::size_t>(std::max(t.n, 0)));
    for (auto& z : initial) {
        z.re = unit(rng);
        z.im = unit(rng);
    }

    trinom_trajectory* traj = nullptr;
    check(trinom_simulate(t.n, t.m, bn, cn, initial.data(), initial.size(), horizon, &traj));
    std::unique_ptr<trinom_trajectory, void (*)(trinom_trajectory*)> guard(traj,
                                                                          trinom_trajectory_destroy);
    if (!s.csv.empty()) check(trinom_trajectory_write_csv(traj, s.csv.c_str()));

    int divergent = 0;
    size_t length = 0;
    check(trinom_trajectory_divergent(traj, &divergent));
    check(trinom_trajectory_length(traj, &length));
    std::optional<double> rate;
    double r = 0.0;
    if (trinom_trajectory_decay_rate(traj, t.n, &r) == TRINOM_OK) rate = r;

    json agrees = nullptr;
    if (!v.marginal) {
        if (v.stable) agrees = !divergent && rate && *rate < 0.0;
        else agrees = divergent || (rate && *rate > -kRateSlack);
    }
    json out = {{"input", input_json(t, a, b, c)},
                {"horizon", horizon},
                {"samples", length},
                {"seed", s.seed},
                {"divergent", static_cast<bool>(divergent)},
                {"decayRate", rate ? json(*rate) : json(nullptr)},
                {"spectralRadius", rho},
                {"logSpectralRadius", rho > 0.0 ? json(std::log(rho)) : json(nullptr)},
                {"stable", static_cast<bool>(v.stable)},
                {"marginal", static_cast<bool>(v.marginal)},
                {"agreesWithVerdict", agrees}};
    if (!s.csv.empty()) out["csv"] = s.csv;
    emit(out);
    return 0;
}

// CLI11 reads "-c -0.05,0" as two flags; glue values that start with '-'
// onto the option that precedes them.
std::vector<std::string> glue_negative_values(int argc, char** argv) {
    static const char* const valued[] = {"-a", "-b", "-c", "-r", "-x", "-y", "-s", "-t",
                                         "--umin", "--umax", "--vmin", "--vmax"};
    std::vector<std::string> args(argv, argv + argc);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& cur = args[i];
        bool takesValue = false;
        for (const char* v : valued) takesValue = takesValue || cur == v;
        if (takesValue && i + 1 < args.size() && args[i + 1].size() > 1 && args[i + 1][0] == '-') {
            // short options take an attached value, long ones need '='
            out.push_back(cur + (cur[1] == '-' ? "=" : "") + args[i + 1]);
            ++i;
        } else {
            out.push_back(cur);
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schur stability, disc root counts and stability regions of a z^n + b z^m + c"};
    app.require_subcommand(1);
    app.set_version_flag("--version", trinom_version());

    TolFlags flags;
    app.add_option("--config", flags.config, "tolerance file (default: $TRINOM_CONFIG)");
    app.add_option("--tau-int", flags.tauInt, "integer-boundary tolerance");
    app.add_option("--tau-tri", flags.tauTri, "triangle tie tolerance");
    app.add_option("--tau-res", flags.tauRes, "oracle residual tolerance");
    app.add_option("--tau-region", flags.tauRegion, "region boundary tolerance");
    app.add_option("--root-margin", flags.rootMargin, "oracle root margin");

    TrinomArgs checkArgs;
    bool viaCount = false;
    auto* checkCmd = app.add_subcommand("check", "Schur stability verdict (JSON)")->fallthrough();
    checkArgs.add_to(checkCmd);
    checkCmd->add_flag("--via-count", viaCount, "decide by counting roots in the unit disc");

    TrinomArgs countArgs;
    double radius = 1.0;
    bool oracle = false;
    auto* countCmd = app.add_subcommand("count", "roots in |z| < r (JSON)")->fallthrough();
    countArgs.add_to(countCmd);
    countCmd->add_option("-r", radius, "disc radius (default 1)");
    countCmd->add_flag("--oracle", oracle, "cross-check against computed roots");

    RegionArgs regionArgs;
    auto* regionCmd = app.add_subcommand("region", "rasterize the stability region (PPM/CSV)")
                          ->fallthrough();
    regionCmd->add_option("-n", regionArgs.n)->required();
    regionCmd->add_option("-m", regionArgs.m)->required();
    regionCmd->add_option("--umin", regionArgs.umin);
    regionCmd->add_option("--umax", regionArgs.umax);
    regionCmd->add_option("--vmin", regionArgs.vmin);
    regionCmd->add_option("--vmax", regionArgs.vmax);
    regionCmd->add_option("--width", regionArgs.width);
    regionCmd->add_option("--height", regionArgs.height);
    regionCmd->add_option("--threads", regionArgs.threads, "worker threads (0 = all cores)");
    regionCmd->add_option("--ppm", regionArgs.ppm, "PPM output path ('-' for stdout)");
    regionCmd->add_option("--csv", regionArgs.csv, "CSV output path");

    TrinomArgs paramsArgs;
    auto* paramsCmd = app.add_subcommand("params", "(x, y, s, t) parameters and |t| bound (JSON)")
                          ->fallthrough();
    paramsArgs.add_to(paramsCmd);

    ComposeArgs composeArgs;
    auto* composeCmd = app.add_subcommand("compose", "coefficients from (x, y, s, t) (JSON)")
                           ->fallthrough();
    composeCmd->add_option("-n", composeArgs.n)->required();
    composeCmd->add_option("-m", composeArgs.m)->required();
    composeCmd->add_option("-x", composeArgs.x)->required();
    composeCmd->add_option("-y", composeArgs.y)->required();
    composeCmd->add_option("-s", composeArgs.s)->required();
    composeCmd->add_option("-t", composeArgs.t)->required();

    TrinomArgs simArgs;
    SimulateArgs simulateArgs;
    auto* simCmd = app.add_subcommand("simulate", "simulate the associated recurrence")
                       ->fallthrough();
    simArgs.add_to(simCmd);
    simCmd->add_option("--horizon", simulateArgs.horizon, "number of samples (0 = automatic)");
    simCmd->add_option("--seed", simulateArgs.seed, "seed for the random initial string");
    simCmd->add_option("--csv", simulateArgs.csv, "trajectory CSV output path");

    std::vector<std::string> args = glue_negative_values(argc, argv);
    std::vector<const char*> cargs;
    for (const auto& a : args) cargs.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*checkCmd) return run_check(flags, checkArgs, viaCount);
        if (*countCmd) return run_count(flags, countArgs, radius, oracle);
        if (*regionCmd) return run_region(flags, regionArgs);
        if (*paramsCmd) return run_params(flags, paramsArgs);
        if (*composeCmd) return run_compose(composeArgs);
        if (*simCmd) return run_simulate(flags, simArgs, simulateArgs);
    } catch (const Failure& f) {
        std::cerr << "trinom: " << f.message << '\n';
        return f.exitCode;
    } catch (const std::exception& e) {
        std::cerr << "trinom: " << e.what() << '\n';
        return kExitSoftware;
    }
    return kExitUsage;
}
