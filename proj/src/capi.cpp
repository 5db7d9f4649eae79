#include "trinom/trinom.h"

#include <fstream>
#include <new>
#include <string>

#include "trinom/bohl.hpp"
#include "trinom/oracle.hpp"
#include "trinom/raster.hpp"
#include "trinom/recurrence.hpp"
#include "trinom/region.hpp"

struct trinom_context {
    trinom::Tolerances tol;
};

struct trinom_raster {
    trinom::RegionRaster raster;
};

struct trinom_trajectory {
    trinom::Trajectory trajectory;
};

namespace {

thread_local std::string g_last_error;

trinom_status to_status(trinom::ErrorCode code) {
    using trinom::ErrorCode;
    switch (code) {
    case ErrorCode::InvalidArgument: return TRINOM_E_INVALID_ARGUMENT;
    case ErrorCode::DegenerateCoefficient: return TRINOM_E_DEGENERATE_COEFFICIENT;
    case ErrorCode::AllCoefficientsZero: return TRINOM_E_ALL_COEFFICIENTS_ZERO;
    case ErrorCode::ZeroCoefficient: return TRINOM_E_ZERO_COEFFICIENT;
    case ErrorCode::ZeroArgument: return TRINOM_E_ZERO_ARGUMENT;
    case ErrorCode::ZeroSide: return TRINOM_E_ZERO_SIDE;
    case ErrorCode::NotATriangle: return TRINOM_E_NOT_A_TRIANGLE;
    case ErrorCode::ZeroV: return TRINOM_E_ZERO_V;
    case ErrorCode::PreconditionViolated: return TRINOM_E_PRECONDITION;
    case ErrorCode::InvalidParameters: return TRINOM_E_INVALID_PARAMETERS;
    case ErrorCode::NotInProjection: return TRINOM_E_NOT_IN_PROJECTION;
    case ErrorCode::NotConverged: return TRINOM_E_NOT_CONVERGED;
    case ErrorCode::DegenerateTrajectory: return TRINOM_E_DEGENERATE_TRAJECTORY;
    case ErrorCode::Io: return TRINOM_E_IO;
    }
    return TRINOM_E_INTERNAL;
}

template <class Fn>
trinom_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return TRINOM_OK;
    } catch (const trinom::Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return TRINOM_E_OUT_OF_MEMORY;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return TRINOM_E_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return TRINOM_E_INTERNAL;
    }
}

void require(bool ok, const char* what) {
    if (!ok) throw trinom::Error(trinom::ErrorCode::InvalidArgument, what);
}

const trinom::Tolerances& tolerances(const trinom_context* ctx) {
    static const trinom::Tolerances defaults{};
    return ctx ? ctx->tol : defaults;
}

trinom::Complex to_cpp(trinom_complex z) { return {z.re, z.im}; }
trinom_complex to_c(trinom::Complex z) { return {z.real(), z.imag()}; }

trinom::Trinomial make(int n, int m, trinom_complex a, trinom_complex b, trinom_complex c) {
    return trinom::Trinomial(n, m, to_cpp(a), to_cpp(b), to_cpp(c));
}

trinom_region to_c(trinom::RegionTag tag) { return static_cast<trinom_region>(tag); }

void fill(trinom_verdict* out, const trinom::StabilityVerdict& v) {
    *out = trinom_verdict{};
    out->stable = v.stable;
    out->marginal = v.marginal;
    out->n = v.n;
    out->m = v.m;
    out->reduction = v.reduction;
    const trinom::Certificate& cert = v.certificate;
    out->certificate = static_cast<trinom_certificate_kind>(cert.kind);
    out->region = to_c(cert.region);
    if (cert.omega) {
        out->has_omega = 1;
        out->omega = *cert.omega;
    }
    if (cert.parameters) {
        out->has_parameters = 1;
        out->x = cert.parameters->x;
        out->y = cert.parameters->y;
        out->s = cert.parameters->s;
        out->t = cert.parameters->t;
    }
    if (cert.tBound) {
        out->has_t_bound = 1;
        out->t_bound = *cert.tBound;
    }
    if (cert.interval) {
        out->has_interval = 1;
        out->pivot = cert.interval->pivot;
        out->half_width = cert.interval->halfWidth;
    }
    out->count = cert.count;
}

std::ofstream open_output(const char* path) {
    require(path != nullptr, "path must not be NULL");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw trinom::Error(trinom::ErrorCode::Io, std::string("cannot open ") + path);
    return out;
}

void finish(std::ofstream& out, const char* path) {
    out.flush();
    if (!out) throw trinom::Error(trinom::ErrorCode::Io, std::string("write failed: ") + path);
}

}  // namespace

extern "C" {

const char* trinom_version(void) { return "1.0.0"; }

const char* trinom_status_string(trinom_status status) {
    switch (status) {
    case TRINOM_OK: return "ok";
    case TRINOM_E_INVALID_ARGUMENT: return "invalid argument";
    case TRINOM_E_DEGENERATE_COEFFICIENT: return "degenerate coefficient";
    case TRINOM_E_ALL_COEFFICIENTS_ZERO: return "all coefficients zero";
    case TRINOM_E_ZERO_COEFFICIENT: return "zero coefficient";
    case TRINOM_E_ZERO_ARGUMENT: return "argument of zero";
    case TRINOM_E_ZERO_SIDE: return "zero triangle side";
    case TRINOM_E_NOT_A_TRIANGLE: return "not a triangle";
    case TRINOM_E_ZERO_V: return "zero v";
    case TRINOM_E_PRECONDITION: return "precondition violated";
    case TRINOM_E_INVALID_PARAMETERS: return "invalid parameters";
    case TRINOM_E_NOT_IN_PROJECTION: return "not in projection";
    case TRINOM_E_NOT_CONVERGED: return "not converged";
    case TRINOM_E_DEGENERATE_TRAJECTORY: return "degenerate trajectory";
    case TRINOM_E_IO: return "i/o error";
    case TRINOM_E_OUT_OF_MEMORY: return "out of memory";
    case TRINOM_E_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* trinom_last_error(void) { return g_last_error.c_str(); }

trinom_status trinom_context_create(trinom_context** out) {
    return guarded([&] {
        require(out != nullptr, "out must not be NULL");
        *out = new trinom_context{};
    });
}

void trinom_context_destroy(trinom_context* ctx) { delete ctx; }

trinom_status trinom_context_set(trinom_context* ctx, const char* key, double value) {
    return guarded([&] {
        require(ctx != nullptr && key != nullptr, "context and key must not be NULL");
        if (!trinom::set_tolerance(ctx->tol, key, value)) {
            throw trinom::Error(trinom::ErrorCode::InvalidArgument,
                                std::string("unknown tolerance key: ") + key);
        }
    });
}

trinom_status trinom_context_get(const trinom_context* ctx, const char* key, double* value) {
    return guarded([&] {
        require(key != nullptr && value != nullptr, "key and value must not be NULL");
        const trinom::Tolerances& tol = tolerances(ctx);
        const std::string k = key;
        if (k == "tau_int") *value = tol.integer;
        else if (k == "tau_tri") *value = tol.triangle;
        else if (k == "tau_res") *value = tol.residual;
        else if (k == "tau_region") *value = tol.region;
        else if (k == "root_margin") *value = tol.rootMargin;
        else throw trinom::Error(trinom::ErrorCode::InvalidArgument, "unknown tolerance key: " + k);
    });
}

trinom_status trinom_context_load(trinom_context* ctx, const char* path) {
    return guarded([&] {
        require(ctx != nullptr && path != nullptr, "context and path must not be NULL");
        trinom::Tolerances staged = ctx->tol;
        trinom::load_tolerances(staged, path);
        ctx->tol = staged;
    });
}

trinom_status trinom_check(const trinom_context* ctx, int n, int m, trinom_complex a,
                           trinom_complex b, trinom_complex c, trinom_verdict* out) {
    return guarded([&] {
        require(out != nullptr, "out must not be NULL");
        fill(out, trinom::is_schur_stable(make(n, m, a, b, c), tolerances(ctx)));
    });
}

trinom_status trinom_check_by_count(const trinom_context* ctx, int n, int m, trinom_complex a,
                                    trinom_complex b, trinom_complex c, trinom_verdict* out) {
    return guarded([&] {
        require(out != nullptr, "out must not be NULL");
        fill(out, trinom::is_schur_stable_by_count(make(n, m, a, b, c), tolerances(ctx)));
    });
}

trinom_status trinom_count_roots(const trinom_context* ctx, int n, int m, trinom_complex a,
                                 trinom_complex b, trinom_complex c, double r,
                                 trinom_disc_count* out) {
    return guarded([&] {
        require(out != nullptr, "out must not be NULL");
        const trinom::DiscCount dc = trinom::count_roots_in_disc(make(n, m, a, b, c), r, tolerances(ctx));
        *out = trinom_disc_count{};
        out->count = dc.count;
        out->marginal = dc.marginal;
        out->triangle = static_cast<trinom_triangle>(dc.triangle);
        out->exceptional = dc.exceptional;
        if (dc.triangle == trinom::TriangleTag::Triangle ||
            dc.triangle == trinom::TriangleTag::Degenerate) {
            out->has_interval = 1;
            out->pivot = dc.interval.pivot;
            out->half_width = dc.interval.halfWidth;
        }
    });
}

trinom_status trinom_oracle_count(const trinom_context* ctx, int n, int m, trinom_complex a,
                                  trinom_complex b, trinom_complex c, double r,
                                  trinom_oracle_tally* out) {
    return guarded([&] {
        require(out != nullptr, "out must not be NULL");
        require(r > 0.0, "radius must be positive");
        const trinom::Tolerances& tol = tolerances(ctx);
        const auto rs = trinom::oracle::find_roots(make(n, m, a, b, c), tol);
        const auto tally = trinom::oracle::count_in_disc(rs, r, tol);
        *out = trinom_oracle_tally{};
        out->count = tally.count;
        out->margin_count = tally.marginCount;
        for (const auto& z : rs.roots) out->max_modulus = std::max(out->max_modulus, std::abs(z));
    });
}

trinom_status trinom_oracle_stable(const trinom_context* ctx, int n, int m, trinom_complex a,
                                   trinom_complex b, trinom_complex c, int* stable, int* marginal,
                                   double* max_modulus) {
    return guarded([&] {
        const auto v = trinom::oracle::spectral_stable(make(n, m, a, b, c), tolerances(ctx));
        if (stable) *stable = v.stable;
        if (marginal) *marginal = v.marginal;
        if (max_modulus) *max_modulus = v.maxModulus;
    });
}

trinom_status trinom_decompose(const trinom_context* ctx, int n, int m, trinom_complex a,
                               trinom_complex b, trinom_complex c, trinom_parameters* out) {
    return guarded([&] {
        require(out != nullptr, "out must not be NULL");
        const trinom::Tolerances& tol = tolerances(ctx);
        const trinom::Trinomial t = make(n, m, a, b, c);
        if (t.a == trinom::Complex{} || t.b == trinom::Complex{} || t.c == trinom::Complex{}) {
            throw trinom::Error(trinom::ErrorCode::ZeroCoefficient, "a, b and c must be nonzero");
        }
        const trinom::NormalizedTrinomial nt = trinom::normalize(t);
        const trinom::Parameters p = trinom::decompose_parameters(nt);
        const trinom::RegionClass cls = trinom::classify_region(p.x, p.y, nt.n, nt.m, tol);
        const auto bound = trinom::t_bound(cls, nt.n);

        *out = trinom_parameters{};
        out->n = nt.n;
        out->m = nt.m;
        out->reduction = nt.reduction;
        out->x = p.x;
        out->y = p.y;
        out->s = p.s;
        out->t = p.t;
        out->region = to_c(cls.tag);
        out->marginal = cls.marginal;
        if (cls.omega) {
            out->has_omega = 1;
            out->omega = *cls.omega;
        }
        if (bound) {
            out->has_t_bound = 1;
            out->t_bound = *bound;
            out->within_bound = cls.tag == trinom::RegionTag::Gamma ? std::abs(p.t) <= *bound
                                                                   : std::abs(p.t) < *bound;
        }
    });
}

trinom_status trinom_compose(int n, int m, double x, double y, double s, double t,
                             trinom_complex* b, trinom_complex* c) {
    return guarded([&] {
        require(b != nullptr && c != nullptr, "outputs must not be NULL");
        const auto nt = trinom::compose_parameters(trinom::Parameters{x, y, s, t}, n, m);
        *b = to_c(nt.b);
        *c = to_c(nt.c);
    });
}

trinom_status trinom_region_rasterize(const trinom_context* ctx, int n, int m, double umin,
                                      double umax, double vmin, double vmax, int width, int height,
                                      unsigned threads, trinom_raster** out) {
    return guarded([&] {
        require(out != nullptr, "out must not be NULL");
        const trinom::RasterSpec spec{n, m, umin, umax, vmin, vmax, width, height};
        *out = new trinom_raster{trinom::rasterize_region(spec, tolerances(ctx), threads)};
    });
}

void trinom_raster_destroy(trinom_raster* raster) { delete raster; }

trinom_status trinom_raster_size(const trinom_raster* raster, int* width, int* height) {
    return guarded([&] {
        require(raster != nullptr, "raster must not be NULL");
        if (width) *width = raster->raster.spec.width;
        if (height) *height = raster->raster.spec.height;
    });
}

trinom_status trinom_raster_cell(const trinom_raster* raster, int row, int col, trinom_cell_tag* tag,
                                 double* u, double* v) {
    return guarded([&] {
        require(raster != nullptr, "raster must not be NULL");
        const auto& spec = raster->raster.spec;
        require(row >= 0 && row < spec.height && col >= 0 && col < spec.width, "cell out of range");
        const trinom::RasterCell& cell = raster->raster.at(row, col);
        if (tag) *tag = static_cast<trinom_cell_tag>(cell.tag);
        if (u) *u = cell.u;
        if (v) *v = cell.v;
    });
}

trinom_status trinom_raster_count(const trinom_raster* raster, trinom_cell_tag tag, size_t* count) {
    return guarded([&] {
        require(raster != nullptr && count != nullptr, "arguments must not be NULL");
        require(tag >= TRINOM_CELL_COHN && tag <= TRINOM_CELL_MARGINAL, "unknown cell tag");
        *count = raster->raster.count(static_cast<trinom::CellTag>(tag));
    });
}

trinom_status trinom_raster_write_ppm(const trinom_raster* raster, const char* path) {
    return guarded([&] {
        require(raster != nullptr, "raster must not be NULL");
        std::ofstream out = open_output(path);
        trinom::write_ppm(out, raster->raster);
        finish(out, path);
    });
}

trinom_status trinom_raster_write_csv(const trinom_raster* raster, const char* path) {
    return guarded([&] {
        require(raster != nullptr, "raster must not be NULL");
        std::ofstream out = open_output(path);
        trinom::write_raster_csv(out, raster->raster);
        finish(out, path);
    });
}

trinom_status trinom_simulate(int n, int m, trinom_complex b, trinom_complex c,
                              const trinom_complex* initial, size_t initial_len, size_t horizon,
                              trinom_trajectory** out) {
    return guarded([&] {
        require(out != nullptr, "out must not be NULL");
        require(initial != nullptr || initial_len == 0, "initial must not be NULL");
        trinom::RecurrenceSpec spec;
        spec.n = n;
        spec.m = m;
        spec.b = to_cpp(b);
        spec.c = to_cpp(c);
        spec.horizon = horizon;
        spec.initial.reserve(initial_len);
        for (size_t i = 0; i < initial_len; ++i) spec.initial.push_back(to_cpp(initial[i]));
        *out = new trinom_trajectory{trinom::simulate(spec)};
    });
}

trinom_status trinom_default_horizon(const trinom_context* ctx, int n, int m, trinom_complex b,
                                     trinom_complex c, size_t* horizon) {
    return guarded([&] {
        require(horizon != nullptr, "horizon must not be NULL");
        const trinom::Trinomial t = trinom::Trinomial::monic(n, m, to_cpp(b), to_cpp(c));
        std::optional<double> rho;
        const auto rs = trinom::oracle::find_roots(t, tolerances(ctx));
        if (rs.converged) {
            double top = 0.0;
            for (const auto& z : rs.roots) top = std::max(top, std::abs(z));
            rho = top;
        }
        *horizon = trinom::default_horizon(n, rho);
    });
}

void trinom_trajectory_destroy(trinom_trajectory* trajectory) { delete trajectory; }

trinom_status trinom_trajectory_length(const trinom_trajectory* trajectory, size_t* length) {
    return guarded([&] {
        require(trajectory != nullptr && length != nullptr, "arguments must not be NULL");
        *length = trajectory->trajectory.values.size();
    });
}

trinom_status trinom_trajectory_value(const trinom_trajectory* trajectory, size_t index,
                                      trinom_complex* value) {
    return guarded([&] {
        require(trajectory != nullptr && value != nullptr, "arguments must not be NULL");
        require(index < trajectory->trajectory.values.size(), "index out of range");
        *value = to_c(trajectory->trajectory.values[index]);
    });
}

trinom_status trinom_trajectory_divergent(const trinom_trajectory* trajectory, int* divergent) {
    return guarded([&] {
        require(trajectory != nullptr && divergent != nullptr, "arguments must not be NULL");
        *divergent = trajectory->trajectory.divergent;
    });
}

trinom_status trinom_trajectory_decay_rate(const trinom_trajectory* trajectory, int n, double* rate) {
    return guarded([&] {
        require(trajectory != nullptr && rate != nullptr, "arguments must not be NULL");
        *rate = trinom::empirical_decay_rate(trajectory->trajectory, n);
    });
}

trinom_status trinom_trajectory_write_csv(const trinom_trajectory* trajectory, const char* path) {
    return guarded([&] {
        require(trajectory != nullptr, "trajectory must not be NULL");
        std::ofstream out = open_output(path);
        trinom::write_trajectory_csv(out, trajectory->trajectory);
        finish(out, path);
    });
}

}  // extern "C"
