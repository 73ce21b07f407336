#ifndef EDGECURRENT_CORE_DECOMPOSE_HPP
#define EDGECURRENT_CORE_DECOMPOSE_HPP

#include "core/geometry.hpp"
#include "core/grid.hpp"
#include "core/raster.hpp"

namespace edgecurrent {

/// The four directional boundary current components. From an occupancy grid
/// the values are 0/1; curve rasterization accumulates real multiplicities.
struct EdgeField {
    Grid t; // upper edges: occupied cell with an empty (i-1, j) neighbour
    Grid b; // lower edges: empty (i+1, j) neighbour
    Grid l; // left edges:  empty (i, j-1) neighbour
    Grid r; // right edges: empty (i, j+1) neighbour

    int rows() const { return t.rows(); }
    int cols() const { return t.cols(); }
};

/// Unoriented two-field decomposition: h collects horizontal components
/// (t + b), v vertical ones (l + r).
struct VarifoldField {
    Grid v;
    Grid h;

    int rows() const { return v.rows(); }
    int cols() const { return v.cols(); }
};

/// Directional difference fields, marked on the inside pixel:
/// t(i,j) = 1 iff m(i,j) = 1 and m(i-1,j) = 0, with t(1,j) = 0, and the
/// three rotations of that rule for b, l, r.
EdgeField difference_fields(const BitGrid &m);

/// Traces each polyline into unit axis steps and accumulates them into the
/// four fields. A step spans one full cell extent along its axis; steps in
/// decreasing axis-2 add to t, increasing axis-2 to b, increasing axis-1 to
/// l, decreasing axis-1 to r, each at the cell on the left of travel.
/// With that convention the boundary of an axis-aligned rectangle, traversed
/// with the region on the left, reproduces difference_fields of its filled
/// rasterization exactly.
EdgeField rasterize_oriented_curves(const CurveSet &c, const GridSpec &g);

/// Drops orientation: h = t + b, v = l + r.
VarifoldField to_varifold(const EdgeField &e);

} // namespace edgecurrent

#endif
