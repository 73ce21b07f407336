#include "core/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace edgecurrent {

namespace {

double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

bool on_segment(Vec2 p, Vec2 a, Vec2 b) {
    double c = cross(b - a, p - a);
    if (std::abs(c) > kEdgeTolerance)
        return false;
    return p.x >= std::min(a.x, b.x) - kEdgeTolerance &&
           p.x <= std::max(a.x, b.x) + kEdgeTolerance &&
           p.y >= std::min(a.y, b.y) - kEdgeTolerance &&
           p.y <= std::max(a.y, b.y) + kEdgeTolerance;
}

int orientation_sign(Vec2 a, Vec2 b, Vec2 c) {
    double v = cross(b - a, c - a);
    if (v > kEdgeTolerance)
        return 1;
    if (v < -kEdgeTolerance)
        return -1;
    return 0;
}

/// Any contact between closed segments [a,b] and [c,d].
bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    int o1 = orientation_sign(a, b, c);
    int o2 = orientation_sign(a, b, d);
    int o3 = orientation_sign(c, d, a);
    int o4 = orientation_sign(c, d, b);
    if (o1 != o2 && o3 != o4)
        return true;
    if (o1 == 0 && on_segment(c, a, b))
        return true;
    if (o2 == 0 && on_segment(d, a, b))
        return true;
    if (o3 == 0 && on_segment(a, c, d))
        return true;
    if (o4 == 0 && on_segment(b, c, d))
        return true;
    return false;
}

} // namespace

Polygon Polygon::from_vertices(std::vector<Vec2> vertices) {
    if (vertices.size() >= 2 && vertices.front() == vertices.back())
        vertices.pop_back(); // explicit closure in the input

    if (vertices.size() < 3)
        throw error(errc::geometry, "polygon needs at least 3 vertices, got " +
                                        std::to_string(vertices.size()));

    for (size_t i = 0; i < vertices.size(); ++i) {
        const Vec2 &v = vertices[i];
        if (!(v.x > 0.0) || !(v.y > 0.0) || !std::isfinite(v.x) ||
            !std::isfinite(v.y))
            throw error(errc::geometry,
                        "vertex " + std::to_string(i + 1) +
                            " has a nonpositive or non-finite coordinate");
    }

    const size_t n = vertices.size();
    for (size_t i = 0; i < n; ++i) {
        Vec2 a = vertices[i];
        Vec2 b = vertices[(i + 1) % n];
        if (a == b)
            throw error(errc::geometry, "zero-length edge at vertex " +
                                            std::to_string(i + 1));
    }

    // Self-intersection: non-adjacent edge pairs must not touch at all;
    // adjacent ones may only share their common endpoint.
    for (size_t i = 0; i < n; ++i) {
        Vec2 a = vertices[i];
        Vec2 b = vertices[(i + 1) % n];
        for (size_t j = i + 1; j < n; ++j) {
            Vec2 c = vertices[j];
            Vec2 d = vertices[(j + 1) % n];
            bool share_b = (j == i + 1);
            bool share_a = (i == 0 && j == n - 1);
            if (share_b || share_a) {
                Vec2 shared = share_b ? b : a;
                Vec2 tip1 = share_b ? a : b;
                Vec2 tip2 = share_b ? d : c;
                // Collinear backtrack folds one edge onto its neighbour.
                if (orientation_sign(shared, tip1, tip2) == 0 &&
                    (on_segment(tip1, shared, tip2) ||
                     on_segment(tip2, shared, tip1)))
                    throw error(errc::geometry,
                                "edges at vertex " + std::to_string(i + 1) +
                                    " overlap (degenerate fold)");
                continue;
            }
            if (segments_intersect(a, b, c, d))
                throw error(errc::geometry,
                            "self-intersection between edges at vertices " +
                                std::to_string(i + 1) + " and " +
                                std::to_string(j + 1));
        }
    }

    return Polygon(std::move(vertices));
}

double Polygon::max_x() const {
    double m = vertices_.front().x;
    for (const Vec2 &v : vertices_)
        m = std::max(m, v.x);
    return m;
}

double Polygon::max_y() const {
    double m = vertices_.front().y;
    for (const Vec2 &v : vertices_)
        m = std::max(m, v.y);
    return m;
}

Polygon Polygon::translated(double dx, double dy) const {
    std::vector<Vec2> moved = vertices_;
    for (Vec2 &v : moved) {
        v.x += dx;
        v.y += dy;
    }
    return Polygon(std::move(moved));
}

bool point_on_boundary(Vec2 p, std::span<const Vec2> polygon) {
    const size_t n = polygon.size();
    for (size_t i = 0; i < n; ++i) {
        if (on_segment(p, polygon[i], polygon[(i + 1) % n]))
            return true;
    }
    return false;
}

bool point_in_polygon(Vec2 p, std::span<const Vec2> polygon) {
    if (point_on_boundary(p, polygon))
        return true;

    // Even-odd crossing count along the +y ray, half-open in x so that
    // vertices on the ray are counted once.
    const size_t n = polygon.size();
    bool inside = false;
    for (size_t i = 0; i < n; ++i) {
        Vec2 a = polygon[i];
        Vec2 b = polygon[(i + 1) % n];
        if ((a.x > p.x) == (b.x > p.x))
            continue;
        double t = (p.x - a.x) / (b.x - a.x);
        double yi = a.y + t * (b.y - a.y);
        if (yi > p.y)
            inside = !inside;
    }
    return inside;
}

void CurveSet::add(Curve curve) {
    if (curve.vertices.size() < 2)
        throw error(errc::geometry, "curve " + std::to_string(size() + 1) +
                                        " needs at least 2 vertices");
    for (size_t i = 0; i < curve.vertices.size(); ++i) {
        const Vec2 &v = curve.vertices[i];
        if (!(v.x > 0.0) || !(v.y > 0.0) || !std::isfinite(v.x) ||
            !std::isfinite(v.y))
            throw error(errc::geometry,
                        "curve " + std::to_string(size() + 1) + " vertex " +
                            std::to_string(i + 1) +
                            " has a nonpositive or non-finite coordinate");
    }
    curves_.push_back(std::move(curve));
}

double CurveSet::max_x() const {
    if (curves_.empty())
        throw error(errc::invalid_argument, "empty curve set has no extent");
    double m = curves_.front().vertices.front().x;
    for (const Curve &c : curves_)
        for (const Vec2 &v : c.vertices)
            m = std::max(m, v.x);
    return m;
}

double CurveSet::max_y() const {
    if (curves_.empty())
        throw error(errc::invalid_argument, "empty curve set has no extent");
    double m = curves_.front().vertices.front().y;
    for (const Curve &c : curves_)
        for (const Vec2 &v : c.vertices)
            m = std::max(m, v.y);
    return m;
}

} // namespace edgecurrent
