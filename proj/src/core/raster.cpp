#include "core/raster.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace edgecurrent {

namespace {

GridSpec spec_from_extents(double max_x, double max_y, int margin) {
    if (margin < 0)
        throw error(errc::config, "margin must be nonnegative, got " +
                                      std::to_string(margin));
    GridSpec g;
    g.rows = static_cast<int>(std::ceil(max_x)) + margin;
    g.cols = static_cast<int>(std::ceil(max_y)) + margin;
    g.margin = margin;
    return g;
}

} // namespace

GridSpec build_grid_spec(const Polygon &p1, const Polygon &p2, int margin) {
    return spec_from_extents(std::max(p1.max_x(), p2.max_x()),
                             std::max(p1.max_y(), p2.max_y()), margin);
}

GridSpec build_grid_spec_for_curves(const CurveSet &c1, const CurveSet &c2,
                                    int margin) {
    if (c1.empty() && c2.empty())
        throw error(errc::invalid_argument,
                    "cannot size a grid from two empty curve sets");
    double mx = 0.0, my = 0.0;
    if (!c1.empty()) {
        mx = std::max(mx, c1.max_x());
        my = std::max(my, c1.max_y());
    }
    if (!c2.empty()) {
        mx = std::max(mx, c2.max_x());
        my = std::max(my, c2.max_y());
    }
    return spec_from_extents(mx, my, margin);
}

BitGrid rasterize(const Polygon &p, const GridSpec &g) {
    if (g.rows <= 0 || g.cols <= 0)
        throw error(errc::config, "grid has no cells");
    if (p.max_x() > static_cast<double>(g.rows - g.margin) ||
        p.max_y() > static_cast<double>(g.cols - g.margin))
        throw error(errc::bounds, "polygon extends beyond the grid margin");

    std::span<const Vec2> verts = p.vertices();

    // Only lattice points inside the vertex bounding box can be occupied.
    double min_x = verts.front().x, min_y = verts.front().y;
    double max_x = min_x, max_y = min_y;
    for (const Vec2 &v : verts) {
        min_x = std::min(min_x, v.x);
        max_x = std::max(max_x, v.x);
        min_y = std::min(min_y, v.y);
        max_y = std::max(max_y, v.y);
    }
    int i_lo = std::max(1, static_cast<int>(std::floor(min_x)));
    int i_hi = std::min(g.rows, static_cast<int>(std::ceil(max_x)));
    int j_lo = std::max(1, static_cast<int>(std::floor(min_y)));
    int j_hi = std::min(g.cols, static_cast<int>(std::ceil(max_y)));

    BitGrid m(g.rows, g.cols);
    long count = 0;
    for (int i = i_lo; i <= i_hi; ++i) {
        for (int j = j_lo; j <= j_hi; ++j) {
            if (point_in_polygon({static_cast<double>(i),
                                  static_cast<double>(j)},
                                 verts)) {
                m.at(i - 1, j - 1) = 1;
                ++count;
            }
        }
    }
    m.empty_warning = (count == 0);
    return m;
}

} // namespace edgecurrent
