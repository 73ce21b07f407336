#include "core/decompose.hpp"

#include <cmath>
#include <string>

namespace edgecurrent {

EdgeField difference_fields(const BitGrid &m) {
    const int rows = m.rows;
    const int cols = m.cols;
    EdgeField f{Grid(rows, cols), Grid(rows, cols), Grid(rows, cols),
                Grid(rows, cols)};
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            if (m.at(i, j) == 0)
                continue;
            if (i > 0 && m.at(i - 1, j) == 0)
                f.t.at(i, j) = 1.0;
            if (i < rows - 1 && m.at(i + 1, j) == 0)
                f.b.at(i, j) = 1.0;
            if (j > 0 && m.at(i, j - 1) == 0)
                f.l.at(i, j) = 1.0;
            if (j < cols - 1 && m.at(i, j + 1) == 0)
                f.r.at(i, j) = 1.0;
        }
    }
    return f;
}

namespace {

/// Cell (1-based) whose extent [c - 0.5, c + 0.5] contains coord. When coord
/// sits exactly on a cell boundary (within tolerance), prefer_low picks the
/// smaller cell; the caller passes the side on the left of travel.
int owning_cell(double coord, bool prefer_low) {
    double shifted = coord + 0.5;
    double nearest = std::round(shifted);
    if (std::abs(shifted - nearest) <= kEdgeTolerance)
        return prefer_low ? static_cast<int>(nearest) - 1
                          : static_cast<int>(nearest);
    return static_cast<int>(std::floor(shifted));
}

void deposit(Grid &field, int cell_i, int cell_j) {
    if (cell_i < 1 || cell_i > field.rows() || cell_j < 1 ||
        cell_j > field.cols())
        throw error(errc::bounds, "curve step leaves the grid at cell (" +
                                      std::to_string(cell_i) + ", " +
                                      std::to_string(cell_j) + ")");
    field.at(cell_i - 1, cell_j - 1) += 1.0;
}

void trace_segment(Vec2 a, Vec2 b, EdgeField &f) {
    // Unit steps are the full cell extents the segment covers along each
    // axis. Horizontal steps are deposited before vertical ones; the order
    // is a tie-break only, accumulation commutes.
    double lo_y = std::min(a.y, b.y);
    double hi_y = std::max(a.y, b.y);
    int c_lo = static_cast<int>(std::ceil(lo_y + 0.5 - kEdgeTolerance));
    int c_hi = static_cast<int>(std::floor(hi_y - 0.5 + kEdgeTolerance));
    if (c_lo <= c_hi) {
        bool increasing = b.y > a.y;
        Grid &target = increasing ? f.b : f.t;
        for (int c = c_lo; c <= c_hi; ++c) {
            double t = (static_cast<double>(c) - a.y) / (b.y - a.y);
            double u = a.x + t * (b.x - a.x);
            // left of travel: -axis1 for increasing axis-2, +axis1 otherwise
            deposit(target, owning_cell(u, increasing), c);
        }
    }

    double lo_x = std::min(a.x, b.x);
    double hi_x = std::max(a.x, b.x);
    int r_lo = static_cast<int>(std::ceil(lo_x + 0.5 - kEdgeTolerance));
    int r_hi = static_cast<int>(std::floor(hi_x - 0.5 + kEdgeTolerance));
    if (r_lo <= r_hi) {
        bool increasing = b.x > a.x;
        Grid &target = increasing ? f.l : f.r;
        for (int r = r_lo; r <= r_hi; ++r) {
            double t = (static_cast<double>(r) - a.x) / (b.x - a.x);
            double v = a.y + t * (b.y - a.y);
            // left of travel: +axis2 for increasing axis-1, -axis2 otherwise
            deposit(target, r, owning_cell(v, !increasing));
        }
    }
}

} // namespace

EdgeField rasterize_oriented_curves(const CurveSet &c, const GridSpec &g) {
    if (g.rows <= 0 || g.cols <= 0)
        throw error(errc::config, "grid has no cells");
    for (const Curve &curve : c.curves()) {
        for (const Vec2 &v : curve.vertices) {
            if (v.x > static_cast<double>(g.rows - g.margin) ||
                v.y > static_cast<double>(g.cols - g.margin))
                throw error(errc::bounds,
                            "curve extends beyond the grid margin");
        }
    }

    EdgeField f{Grid(g.rows, g.cols), Grid(g.rows, g.cols),
                Grid(g.rows, g.cols), Grid(g.rows, g.cols)};
    for (const Curve &curve : c.curves()) {
        const std::vector<Vec2> &v = curve.vertices;
        for (size_t i = 0; i + 1 < v.size(); ++i)
            trace_segment(v[i], v[i + 1], f);
        if (curve.closed)
            trace_segment(v.back(), v.front(), f);
    }
    return f;
}

VarifoldField to_varifold(const EdgeField &e) {
    VarifoldField out{Grid(e.rows(), e.cols()), Grid(e.rows(), e.cols())};
    for (int i = 0; i < e.rows(); ++i) {
        for (int j = 0; j < e.cols(); ++j) {
            out.h.at(i, j) = e.t.at(i, j) + e.b.at(i, j);
            out.v.at(i, j) = e.l.at(i, j) + e.r.at(i, j);
        }
    }
    return out;
}

} // namespace edgecurrent
