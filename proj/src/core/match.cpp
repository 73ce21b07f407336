#include "core/match.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace edgecurrent {

void MatchConfig::validate() const {
    if (kernel_size < 1 || kernel_size % 2 == 0)
        throw error(errc::config, "kernel size must be odd and positive, got " +
                                      std::to_string(kernel_size));
    if (!(sigma > 0.0))
        throw error(errc::config, "sigma must be positive");
    if (!(peak_divisor > 0.0))
        throw error(errc::config, "peak divisor must be positive");
    if (margin < kernel_radius() + 1)
        throw error(errc::config,
                    "margin " + std::to_string(margin) +
                        " is insufficient for kernel size " +
                        std::to_string(kernel_size) + " (need at least " +
                        std::to_string(kernel_radius() + 1) + ")");
}

Kernel MatchConfig::make_kernel() const {
    validate();
    double divisor = exact_peak ? kernel_center_weight(kernel_size, sigma)
                                : peak_divisor;
    return gaussian_kernel(kernel_size, sigma, divisor);
}

MatchResult match_fields(const SmoothedField &s1, const SmoothedField &s2) {
    if (s1.components.size() != s2.components.size() ||
        s1.components.empty())
        throw error(errc::invalid_argument,
                    "smoothed fields have different arity");
    for (size_t c = 0; c < s1.components.size(); ++c)
        if (!s1.components[c].same_shape(s2.components[c]))
            throw error(errc::invalid_argument,
                        "smoothed fields have different extents");

    const int rows = s1.rows();
    const int cols = s1.cols();
    const bool oriented = s1.components.size() == 4;

    MatchResult res;
    res.component_names =
        oriented ? std::vector<std::string>{"EMT", "EMB", "EML", "EMR"}
                 : std::vector<std::string>{"EMV", "EMH"};
    res.components.reserve(s1.components.size());
    for (size_t c = 0; c < s1.components.size(); ++c) {
        Grid prod(rows, cols);
        const Grid &a = s1.components[c];
        const Grid &b = s2.components[c];
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                prod.at(i, j) = a.at(i, j) * b.at(i, j);
        res.components.push_back(std::move(prod));
    }

    // Euclidean metric on the net horizontal and net vertical components:
    // oriented runs pair (EMT + EMB) with (EML + EMR), unoriented ones EMV
    // with EMH.
    res.em = Grid(rows, cols);
    const Grid &first = res.components[0];
    const Grid *first_partner = oriented ? &res.components[1] : nullptr;
    const Grid &second = oriented ? res.components[2] : res.components[1];
    const Grid *second_partner = oriented ? &res.components[3] : nullptr;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            double a =
                first.at(i, j) + (first_partner ? first_partner->at(i, j) : 0.0);
            double b = second.at(i, j) +
                       (second_partner ? second_partner->at(i, j) : 0.0);
            res.em.at(i, j) = std::sqrt(a * a + b * b);
        }
    }
    res.score = res.em.sum();
    return res;
}

namespace {

struct Prepared {
    std::vector<Grid> fields;
    std::vector<std::string> names;
    SmoothedField smoothed;
};

Prepared prepare(const EdgeField &edges, const MatchConfig &cfg,
                 const Kernel &kern) {
    Prepared p;
    if (cfg.variant == Variant::oriented) {
        p.fields = {edges.t, edges.b, edges.l, edges.r};
        p.names = {"T", "B", "L", "R"};
        p.smoothed = smooth_edge_field(edges, kern);
    } else {
        VarifoldField vf = to_varifold(edges);
        p.smoothed = smooth_varifold_field(vf, kern);
        p.fields = {std::move(vf.v), std::move(vf.h)};
        p.names = {"V", "H"};
    }
    return p;
}

void adopt(RunResult &run, Prepared &&p1, Prepared &&p2) {
    run.fields1 = std::move(p1.fields);
    run.fields2 = std::move(p2.fields);
    run.field_names = std::move(p1.names);
    run.smoothed1 = std::move(p1.smoothed);
    run.smoothed2 = std::move(p2.smoothed);
}

void note_empty_masks(RunResult &run) {
    if (run.mask1 && run.mask1->empty_warning)
        run.warnings.push_back("first polygon rasterizes to an empty grid");
    if (run.mask2 && run.mask2->empty_warning)
        run.warnings.push_back("second polygon rasterizes to an empty grid");
}

} // namespace

RunResult edge_match(const Polygon &p1, const Polygon &p2,
                     const MatchConfig &cfg) {
    Kernel kern = cfg.make_kernel();

    RunResult run;
    run.config = cfg;
    run.spec = build_grid_spec(p1, p2, cfg.margin);
    run.mask1 = rasterize(p1, run.spec);
    run.mask2 = rasterize(p2, run.spec);
    note_empty_masks(run);

    Prepared a = prepare(difference_fields(*run.mask1), cfg, kern);
    Prepared b = prepare(difference_fields(*run.mask2), cfg, kern);
    run.match = match_fields(a.smoothed, b.smoothed);
    adopt(run, std::move(a), std::move(b));
    return run;
}

RunResult curve_match(const CurveSet &c1, const CurveSet &c2,
                      const MatchConfig &cfg) {
    Kernel kern = cfg.make_kernel();

    RunResult run;
    run.config = cfg;
    run.spec = build_grid_spec_for_curves(c1, c2, cfg.margin);

    Prepared a = prepare(rasterize_oriented_curves(c1, run.spec), cfg, kern);
    Prepared b = prepare(rasterize_oriented_curves(c2, run.spec), cfg, kern);
    run.match = match_fields(a.smoothed, b.smoothed);
    adopt(run, std::move(a), std::move(b));
    return run;
}

RunResult self_match(const Polygon &p, const MatchConfig &cfg) {
    return edge_match(p, p, cfg);
}

RunResult distance(const Polygon &p1, const Polygon &p2,
                   const MatchConfig &cfg) {
    Kernel kern = cfg.make_kernel();

    RunResult run;
    run.config = cfg;
    // One shared grid for all three scores; the polarization identity
    // d(P, P) = 0 only holds when the lattices coincide.
    run.spec = build_grid_spec(p1, p2, cfg.margin);
    run.mask1 = rasterize(p1, run.spec);
    run.mask2 = rasterize(p2, run.spec);
    note_empty_masks(run);

    Prepared a = prepare(difference_fields(*run.mask1), cfg, kern);
    Prepared b = prepare(difference_fields(*run.mask2), cfg, kern);

    run.match = match_fields(a.smoothed, b.smoothed);
    DistanceResult dist;
    dist.e12 = run.match.score;
    dist.e11 = match_fields(a.smoothed, a.smoothed).score;
    dist.e22 = match_fields(b.smoothed, b.smoothed).score;
    dist.d = dist.e11 + dist.e22 - 2.0 * dist.e12;
    if (dist.d < 0.0)
        run.warnings.push_back("distance is negative (the score combination "
                               "is not bilinear)");
    run.distance = dist;
    adopt(run, std::move(a), std::move(b));
    return run;
}

} // namespace edgecurrent
