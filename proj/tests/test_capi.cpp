#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include "trinom/trinom.h"

namespace {

namespace fs = std::filesystem;

constexpr double kPi = 3.14159265358979323846;

trinom_complex cx(double re, double im = 0.0) { return {re, im}; }

trinom_complex polar(double r, double theta) { return {r * std::cos(theta), r * std::sin(theta)}; }

fs::path temp_file(const char* name) {
    return fs::temp_directory_path() / (std::string("trinom_capi_") + name);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("version and status strings") {
    CHECK(std::strcmp(trinom_version(), "1.0.0") == 0);
    CHECK(std::strlen(trinom_status_string(TRINOM_OK)) > 0);
    CHECK(std::strlen(trinom_status_string(TRINOM_E_NOT_CONVERGED)) > 0);
    CHECK(std::strlen(trinom_status_string(static_cast<trinom_status>(999))) > 0);
}

TEST_CASE("check") {
    trinom_verdict v{};
    REQUIRE(trinom_check(nullptr, 11, 10, cx(1), cx(1), cx(-0.05), &v) == TRINOM_OK);
    CHECK(v.stable == 1);
    CHECK(v.marginal == 0);

    const trinom_complex e = polar(1.0, 0.6);
    REQUIRE(trinom_check(nullptr, 11, 10, cx(1), cx(-e.re, -e.im), cx(-0.05 * e.re, -0.05 * e.im), &v) ==
            TRINOM_OK);
    CHECK(v.stable == 0);

    // gcd reduction: z^4 + 0.3 z^2 + 0.2 reduces to z^2 + 0.3 z + 0.2.
    REQUIRE(trinom_check(nullptr, 4, 2, cx(1), cx(0.3), cx(0.2), &v) == TRINOM_OK);
    CHECK(v.stable == 1);
    CHECK(v.reduction == 2);
    CHECK(v.n == 2);
    CHECK(v.m == 1);

    // A vanishing coefficient is decided from the degenerate table.
    REQUIRE(trinom_check(nullptr, 3, 1, cx(1), cx(0), cx(0.5), &v) == TRINOM_OK);
    CHECK(v.stable == 1);
    CHECK(v.certificate == TRINOM_CERT_DEGENERATE_TABLE);

    REQUIRE(trinom_check_by_count(nullptr, 5, 2, cx(2), cx(0.4, 0.1), cx(-0.3), &v) == TRINOM_OK);
    CHECK(v.certificate == TRINOM_CERT_BOHL_COUNT);
    int stable = -1, marginal = -1;
    double rho = 0;
    REQUIRE(trinom_oracle_stable(nullptr, 5, 2, cx(2), cx(0.4, 0.1), cx(-0.3), &stable, &marginal, &rho) ==
            TRINOM_OK);
    CHECK(stable == v.stable);
    CHECK(marginal == 0);
}

TEST_CASE("errors carry a message") {
    trinom_verdict v{};
    CHECK(trinom_check(nullptr, 3, 3, cx(1), cx(1), cx(1), &v) == TRINOM_E_INVALID_ARGUMENT);
    CHECK(std::strlen(trinom_last_error()) > 0);
    CHECK(trinom_check(nullptr, 3, 1, cx(0), cx(0), cx(0), &v) == TRINOM_E_ALL_COEFFICIENTS_ZERO);
    CHECK(trinom_check(nullptr, 3, 1, cx(1), cx(1), cx(1), nullptr) == TRINOM_E_INVALID_ARGUMENT);

    trinom_disc_count dc{};
    CHECK(trinom_count_roots(nullptr, 3, 1, cx(1), cx(0), cx(1), 1.0, &dc) != TRINOM_OK);
    CHECK(trinom_count_roots(nullptr, 3, 1, cx(1), cx(1), cx(1), -1.0, &dc) == TRINOM_E_INVALID_ARGUMENT);

    trinom_parameters p{};
    CHECK(trinom_decompose(nullptr, 3, 1, cx(1), cx(0), cx(1), &p) == TRINOM_E_ZERO_COEFFICIENT);
}

TEST_CASE("root counts agree with the oracle") {
    const double radii[] = {0.3, 0.7, 1.0, 1.4, 3.0};
    for (double r : radii) {
        trinom_disc_count dc{};
        trinom_oracle_tally tally{};
        REQUIRE(trinom_count_roots(nullptr, 7, 3, cx(1), cx(-1.2, 0.4), cx(0.5), r, &dc) == TRINOM_OK);
        REQUIRE(trinom_oracle_count(nullptr, 7, 3, cx(1), cx(-1.2, 0.4), cx(0.5), r, &tally) == TRINOM_OK);
        if (!dc.marginal && tally.margin_count == 0) CHECK(dc.count == tally.count);
    }
}

TEST_CASE("context") {
    trinom_context* ctx = nullptr;
    REQUIRE(trinom_context_create(&ctx) == TRINOM_OK);
    double value = 0;
    REQUIRE(trinom_context_get(ctx, "tau_region", &value) == TRINOM_OK);
    CHECK(value == 1e-9);
    CHECK(trinom_context_set(ctx, "tau_region", 1e-6) == TRINOM_OK);
    REQUIRE(trinom_context_get(ctx, "tau_region", &value) == TRINOM_OK);
    CHECK(value == 1e-6);
    CHECK(trinom_context_set(ctx, "no_such_key", 1.0) == TRINOM_E_INVALID_ARGUMENT);
    CHECK(trinom_context_set(ctx, "tau_int", -1.0) == TRINOM_E_INVALID_ARGUMENT);
    CHECK(trinom_context_get(ctx, "no_such_key", &value) == TRINOM_E_INVALID_ARGUMENT);

    const fs::path good = temp_file("good.conf");
    {
        std::ofstream out(good);
        out << "# tolerances\ntau_int = 1e-11\n\nroot_margin=2e-7  # wider\n";
    }
    REQUIRE(trinom_context_load(ctx, good.c_str()) == TRINOM_OK);
    REQUIRE(trinom_context_get(ctx, "tau_int", &value) == TRINOM_OK);
    CHECK(value == 1e-11);
    REQUIRE(trinom_context_get(ctx, "root_margin", &value) == TRINOM_OK);
    CHECK(value == 2e-7);

    // A bad file leaves the context untouched.
    const fs::path bad = temp_file("bad.conf");
    {
        std::ofstream out(bad);
        out << "tau_int = 5e-12\ntau_tri = banana\n";
    }
    CHECK(trinom_context_load(ctx, bad.c_str()) == TRINOM_E_INVALID_ARGUMENT);
    REQUIRE(trinom_context_get(ctx, "tau_int", &value) == TRINOM_OK);
    CHECK(value == 1e-11);
    CHECK(trinom_context_load(ctx, "/nonexistent/trinom.conf") == TRINOM_E_IO);

    trinom_verdict v{};
    CHECK(trinom_check(ctx, 2, 1, cx(1), cx(0.5), cx(0.2), &v) == TRINOM_OK);
    CHECK(v.stable == 1);

    trinom_context_destroy(ctx);
    trinom_context_destroy(nullptr);
    fs::remove(good);
    fs::remove(bad);
}

TEST_CASE("compose and decompose") {
    trinom_complex b{}, c{};
    REQUIRE(trinom_compose(5, 2, 0.4, -0.3, 1.1, 0.2, &b, &c) == TRINOM_OK);
    trinom_parameters p{};
    REQUIRE(trinom_decompose(nullptr, 5, 2, cx(1), b, c, &p) == TRINOM_OK);
    CHECK(p.x == doctest::Approx(0.4));
    CHECK(p.y == doctest::Approx(-0.3));
    CHECK(p.s == doctest::Approx(1.1));
    CHECK(p.t == doctest::Approx(0.2));
    CHECK(p.region == TRINOM_REGION_GAMMA);
    CHECK(p.has_t_bound == 1);
    CHECK(p.t_bound == doctest::Approx(kPi / 5));
    CHECK(p.within_bound == 1);

    CHECK(trinom_compose(4, 2, 0.4, 0.3, 0.0, 0.0, &b, &c) == TRINOM_E_INVALID_PARAMETERS);
    CHECK(trinom_compose(5, 2, 0.4, 0.3, 0.0, 0.0, nullptr, &c) == TRINOM_E_INVALID_ARGUMENT);
}

TEST_CASE("raster handle") {
    trinom_raster* r = nullptr;
    REQUIRE(trinom_region_rasterize(nullptr, 3, 2, -0.25, 2.25, -1.25, 1.25, 40, 30, 2, &r) == TRINOM_OK);
    int w = 0, h = 0;
    REQUIRE(trinom_raster_size(r, &w, &h) == TRINOM_OK);
    CHECK(w == 40);
    CHECK(h == 30);
    size_t total = 0;
    for (auto tag : {TRINOM_CELL_COHN, TRINOM_CELL_GAMMA, TRINOM_CELL_DELTA, TRINOM_CELL_OUTSIDE,
                     TRINOM_CELL_MARGINAL}) {
        size_t k = 0;
        REQUIRE(trinom_raster_count(r, tag, &k) == TRINOM_OK);
        total += k;
    }
    CHECK(total == 1200);
    trinom_cell_tag tag{};
    double u = 0, v = 0;
    REQUIRE(trinom_raster_cell(r, 0, 0, &tag, &u, &v) == TRINOM_OK);
    CHECK(u == doctest::Approx(-0.25 + 2.5 / 80));
    CHECK(v == doctest::Approx(1.25 - 2.5 / 60));
    CHECK(trinom_raster_cell(r, 30, 0, &tag, &u, &v) == TRINOM_E_INVALID_ARGUMENT);
    CHECK(trinom_raster_cell(r, 0, -1, &tag, &u, &v) == TRINOM_E_INVALID_ARGUMENT);

    const fs::path ppm = temp_file("r.ppm"), csv = temp_file("r.csv");
    REQUIRE(trinom_raster_write_ppm(r, ppm.c_str()) == TRINOM_OK);
    REQUIRE(trinom_raster_write_csv(r, csv.c_str()) == TRINOM_OK);
    CHECK(slurp(ppm).rfind("P3\n40 30\n255\n", 0) == 0);
    CHECK(slurp(csv).rfind("u,v,tag,two_omega,t_bound\n", 0) == 0);
    CHECK(trinom_raster_write_ppm(r, "/nonexistent/dir/r.ppm") == TRINOM_E_IO);
    fs::remove(ppm);
    fs::remove(csv);

    trinom_raster_destroy(r);
    trinom_raster_destroy(nullptr);
    CHECK(trinom_region_rasterize(nullptr, 4, 2, -0.25, 2.25, -1.25, 1.25, 10, 10, 1, &r) ==
          TRINOM_E_INVALID_ARGUMENT);
    CHECK(trinom_raster_size(nullptr, &w, &h) == TRINOM_E_INVALID_ARGUMENT);
}

TEST_CASE("trajectory handle") {
    const trinom_complex init[] = {cx(1), cx(0, 1), cx(-0.5)};
    size_t horizon = 0;
    REQUIRE(trinom_default_horizon(nullptr, 3, 1, cx(0.2), cx(-0.3), &horizon) == TRINOM_OK);
    CHECK(horizon >= 150);

    trinom_trajectory* traj = nullptr;
    REQUIRE(trinom_simulate(3, 1, cx(0.2), cx(-0.3), init, 3, horizon, &traj) == TRINOM_OK);
    size_t len = 0;
    REQUIRE(trinom_trajectory_length(traj, &len) == TRINOM_OK);
    CHECK(len == horizon);
    trinom_complex x{};
    REQUIRE(trinom_trajectory_value(traj, 3, &x) == TRINOM_OK);
    // X(3) = -b X(1) - c X(0)
    CHECK(x.re == doctest::Approx(0.3));
    CHECK(x.im == doctest::Approx(-0.2));
    CHECK(trinom_trajectory_value(traj, len, &x) == TRINOM_E_INVALID_ARGUMENT);
    int divergent = -1;
    REQUIRE(trinom_trajectory_divergent(traj, &divergent) == TRINOM_OK);
    CHECK(divergent == 0);
    double rate = 0;
    REQUIRE(trinom_trajectory_decay_rate(traj, 3, &rate) == TRINOM_OK);
    CHECK(rate < 0.0);

    const fs::path csv = temp_file("t.csv");
    REQUIRE(trinom_trajectory_write_csv(traj, csv.c_str()) == TRINOM_OK);
    CHECK(slurp(csv).rfind("t,re,im,modulus\n", 0) == 0);
    fs::remove(csv);
    trinom_trajectory_destroy(traj);
    trinom_trajectory_destroy(nullptr);

    CHECK(trinom_simulate(3, 1, cx(0.2), cx(-0.3), init, 2, 100, &traj) == TRINOM_E_INVALID_ARGUMENT);
    CHECK(trinom_simulate(3, 1, cx(0.2), cx(-0.3), nullptr, 3, 100, &traj) == TRINOM_E_INVALID_ARGUMENT);

    const trinom_complex zeros[] = {cx(0), cx(0), cx(0)};
    REQUIRE(trinom_simulate(3, 1, cx(0.2), cx(-0.3), zeros, 3, 100, &traj) == TRINOM_OK);
    CHECK(trinom_trajectory_decay_rate(traj, 3, &rate) == TRINOM_E_DEGENERATE_TRAJECTORY);
    trinom_trajectory_destroy(traj);
}
