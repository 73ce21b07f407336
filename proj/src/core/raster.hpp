#ifndef EDGECURRENT_CORE_RASTER_HPP
#define EDGECURRENT_CORE_RASTER_HPP

#include "core/geometry.hpp"
#include "core/grid.hpp"

namespace edgecurrent {

/// Shared lattice for a pair of shapes. Lattice points sit at integer
/// coordinates (i, j), 1-based, i in 1..rows along the first coordinate.
struct GridSpec {
    int rows = 0;   // I
    int cols = 0;   // J
    int margin = 0; // empty border, in cells

    bool operator==(const GridSpec &) const = default;
};

inline constexpr int kDefaultMargin = 5;

/// rows = ceil(max first coordinate over both polygons) + margin, and
/// likewise for cols.
GridSpec build_grid_spec(const Polygon &p1, const Polygon &p2,
                         int margin = kDefaultMargin);

/// Same sizing rule applied to the vertices of two curve sets (either may be
/// empty, but not both).
GridSpec build_grid_spec_for_curves(const CurveSet &c1, const CurveSet &c2,
                                    int margin = kDefaultMargin);

/// Occupancy grid: cell (i, j) is 1 iff lattice point (i, j) lies inside the
/// polygon or on its boundary (boundary-inclusive even-odd rule). Errors when
/// the polygon does not fit within the grid minus its margin; a polygon that
/// covers no lattice point yields an all-zero grid with the warning flag set.
BitGrid rasterize(const Polygon &p, const GridSpec &g);

} // namespace edgecurrent

#endif
