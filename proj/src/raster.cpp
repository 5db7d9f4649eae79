#include "trinom/raster.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <thread>

namespace trinom {

const char* to_string(CellTag tag) noexcept {
    switch (tag) {
    case CellTag::Cohn: return "Cohn";
    case CellTag::Gamma: return "Gamma";
    case CellTag::Delta: return "Delta";
    case CellTag::Outside: return "Outside";
    case CellTag::Marginal: return "Marginal";
    }
    return "Unknown";
}

std::size_t RegionRaster::count(CellTag tag) const {
    return static_cast<std::size_t>(
        std::count_if(cells.begin(), cells.end(), [tag](const RasterCell& c) { return c.tag == tag; }));
}

double raster_u(const RasterSpec& spec, int col) {
    return spec.umin + (col + 0.5) * (spec.umax - spec.umin) / spec.width;
}

double raster_v(const RasterSpec& spec, int row) {
    return spec.vmax - (row + 0.5) * (spec.vmax - spec.vmin) / spec.height;
}

namespace {

CellTag cell_tag(const RegionClass& cls) {
    if (cls.marginal) return CellTag::Marginal;
    switch (cls.tag) {
    case RegionTag::Cohn: return CellTag::Cohn;
    case RegionTag::Gamma: return CellTag::Gamma;
    case RegionTag::Delta: return CellTag::Delta;
    case RegionTag::Outside: return CellTag::Outside;
    }
    return CellTag::Outside;
}

void classify_rows(const RasterSpec& spec, const Tolerances& tol, int rowBegin, int rowEnd,
                   std::vector<RasterCell>& cells) {
    for (int row = rowBegin; row < rowEnd; ++row) {
        for (int col = 0; col < spec.width; ++col) {
            RasterCell& cell = cells[static_cast<std::size_t>(row) * spec.width + col];
            cell.u = raster_u(spec, col);
            cell.v = raster_v(spec, row);
            const RegionClass cls = classify_region(cell.u, cell.v, spec.n, spec.m, tol);
            cell.tag = cell_tag(cls);
            if (cls.omega) cell.twoOmega = 2.0 * *cls.omega;
            cell.tBound = t_bound(cls, spec.n);
        }
    }
}

}  // namespace

RegionRaster rasterize_region(const RasterSpec& spec, const Tolerances& tol, unsigned threads) {
    if (!(spec.n > spec.m && spec.m >= 1) || std::gcd(spec.n, spec.m) != 1) {
        throw Error(ErrorCode::InvalidArgument, "raster needs n > m >= 1 with gcd(n, m) = 1");
    }
    if (spec.width < 1 || spec.height < 1 || !(spec.umin < spec.umax) || !(spec.vmin < spec.vmax)) {
        throw Error(ErrorCode::InvalidArgument, "raster needs positive size and nonempty bounds");
    }

    RegionRaster raster{spec, std::vector<RasterCell>(static_cast<std::size_t>(spec.width) * spec.height)};
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(spec.height));

    if (threads == 1) {
        classify_rows(spec, tol, 0, spec.height, raster.cells);
        return raster;
    }
    std::vector<std::thread> workers;
    workers.reserve(threads);
    const int chunk = (spec.height + static_cast<int>(threads) - 1) / static_cast<int>(threads);
    for (int begin = 0; begin < spec.height; begin += chunk) {
        const int end = std::min(spec.height, begin + chunk);
        workers.emplace_back(classify_rows, std::cref(spec), std::cref(tol), begin, end,
                             std::ref(raster.cells));
    }
    for (auto& w : workers) w.join();
    return raster;
}

namespace {

struct Rgb {
    int r, g, b;
};

Rgb color_of(CellTag tag) {
    switch (tag) {
    case CellTag::Cohn: return {200, 200, 200};
    case CellTag::Gamma: return {31, 119, 180};
    case CellTag::Delta: return {255, 127, 14};
    case CellTag::Outside: return {255, 255, 255};
    case CellTag::Marginal: return {0, 0, 0};
    }
    return {255, 255, 255};
}

}  // namespace

void write_ppm(std::ostream& out, const RegionRaster& raster) {
    out << "P3\n" << raster.spec.width << ' ' << raster.spec.height << "\n255\n";
    // Plain PPM lines stay under 70 characters.
    constexpr int kPerLine = 5;
    int onLine = 0;
    for (const RasterCell& cell : raster.cells) {
        const Rgb c = color_of(cell.tag);
        if (onLine > 0) out << ' ';
        out << c.r << ' ' << c.g << ' ' << c.b;
        if (++onLine == kPerLine) {
            out << '\n';
            onLine = 0;
        }
    }
    if (onLine > 0) out << '\n';
}

void write_raster_csv(std::ostream& out, const RegionRaster& raster) {
    out << "u,v,tag,two_omega,t_bound\n";
    char buf[64];
    auto field = [&](const std::optional<double>& x) {
        if (x) {
            std::snprintf(buf, sizeof buf, "%.17g", *x);
            out << buf;
        }
    };
    for (const RasterCell& cell : raster.cells) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,", cell.u, cell.v);
        out << buf << to_string(cell.tag) << ',';
        field(cell.twoOmega);
        out << ',';
        field(cell.tBound);
        out << '\n';
    }
}

}  // namespace trinom
