#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "trinom/region.hpp"
#include "trinom/tolerances.hpp"

namespace trinom {

enum class CellTag : std::uint8_t { Cohn, Gamma, Delta, Outside, Marginal };

const char* to_string(CellTag tag) noexcept;

struct RasterSpec {
    int n = 0;
    int m = 0;
    double umin = -0.25;
    double umax = 2.25;
    double vmin = -1.25;
    double vmax = 1.25;
    int width = 400;
    int height = 400;
};

struct RasterCell {
    double u = 0.0;
    double v = 0.0;
    CellTag tag = CellTag::Outside;
    std::optional<double> twoOmega;
    std::optional<double> tBound;
};

/// Row-major cells; row 0 is the top row (v = vmax side), cell centres are
/// sampled at half-step offsets.
struct RegionRaster {
    RasterSpec spec;
    std::vector<RasterCell> cells;

    const RasterCell& at(int row, int col) const {
        return cells[static_cast<std::size_t>(row) * spec.width + col];
    }
    std::size_t count(CellTag tag) const;
};

/// Cell-centre coordinates shared by every raster consumer.
double raster_u(const RasterSpec& spec, int col);
double raster_v(const RasterSpec& spec, int row);

/// Classifies every cell. Rows are split across `threads` workers (0 picks
/// the hardware concurrency); the result does not depend on the split.
RegionRaster rasterize_region(const RasterSpec& spec, const Tolerances& tol = {},
                              unsigned threads = 0);

/// Plain PPM (P3), one RGB triple per cell.
void write_ppm(std::ostream& out, const RegionRaster& raster);

/// `u,v,tag,two_omega,t_bound`; missing values are empty fields.
void write_raster_csv(std::ostream& out, const RegionRaster& raster);

}  // namespace trinom
