#ifndef EDGECURRENT_CORE_GEOMETRY_HPP
#define EDGECURRENT_CORE_GEOMETRY_HPP

#include <span>
#include <vector>

#include "core/error.hpp"

namespace edgecurrent {

/// Planar point. x is the first polygon coordinate (grid axis-1 / rows),
/// y the second (axis-2 / columns).
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

/// Tolerance of the on-edge cross-product test.
inline constexpr double kEdgeTolerance = 1e-9;

/// Simple closed polygon; the last vertex connects back to the first.
/// Construction validates: >= 3 vertices, all coordinates strictly positive,
/// no zero-length edges, no self-intersection (O(n^2) segment-pair test).
/// An exactly repeated closing vertex is dropped before validation.
class Polygon {
public:
    static Polygon from_vertices(std::vector<Vec2> vertices);

    const std::vector<Vec2> &vertices() const { return vertices_; }
    size_t size() const { return vertices_.size(); }

    double max_x() const;
    double max_y() const;

    Polygon translated(double dx, double dy) const;

private:
    explicit Polygon(std::vector<Vec2> vertices)
        : vertices_(std::move(vertices)) {}

    std::vector<Vec2> vertices_;
};

/// True when p lies within kEdgeTolerance of the polygon boundary, measured
/// by the cross-product test with bounding-box slack.
bool point_on_boundary(Vec2 p, std::span<const Vec2> polygon);

/// Boundary-inclusive even-odd test at p.
bool point_in_polygon(Vec2 p, std::span<const Vec2> polygon);

/// Open or closed polyline with traversal orientation.
struct Curve {
    std::vector<Vec2> vertices;
    bool closed = false;
};

/// Union of oriented curves (may include open arcs, graphs, trees).
/// Validation: every polyline has >= 2 vertices, coordinates > 0.
class CurveSet {
public:
    CurveSet() = default;

    void add(Curve curve);

    const std::vector<Curve> &curves() const { return curves_; }
    size_t size() const { return curves_.size(); }
    bool empty() const { return curves_.empty(); }

    /// Largest coordinate over all vertices; errors when the set is empty.
    double max_x() const;
    double max_y() const;

private:
    std::vector<Curve> curves_;
};

} // namespace edgecurrent

#endif
