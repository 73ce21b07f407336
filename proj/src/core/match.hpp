#ifndef EDGECURRENT_CORE_MATCH_HPP
#define EDGECURRENT_CORE_MATCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "core/decompose.hpp"
#include "core/geometry.hpp"
#include "core/grid.hpp"
#include "core/raster.hpp"
#include "core/smooth.hpp"

namespace edgecurrent {

enum class Variant { oriented, unoriented };

/// Pipeline configuration; the defaults reproduce the reference pipeline
/// (5x5 Gaussian, sigma 1, peak divisor 0.1621, margin 5, oriented).
struct MatchConfig {
    int kernel_size = kDefaultKernelSize;
    double sigma = kDefaultSigma;
    double peak_divisor = kDefaultPeakDivisor;
    /// Replace peak_divisor with the kernel's exact center weight.
    bool exact_peak = false;
    int margin = kDefaultMargin;
    Variant variant = Variant::oriented;

    int kernel_radius() const { return (kernel_size - 1) / 2; }

    /// Throws errc::config for an even kernel size, nonpositive sigma or
    /// divisor, or a margin below kernel radius + 1.
    void validate() const;

    /// Kernel with exact_peak resolved.
    Kernel make_kernel() const;
};

/// Edge-match density and score. components holds the pointwise products
/// (EMT, EMB, EML, EMR — or EMV, EMH for unoriented runs); em combines them
/// as sqrt((EMT+EMB)^2 + (EML+EMR)^2) pointwise and score sums em over the
/// whole padded grid in row-major order.
struct MatchResult {
    double score = 0.0;
    Grid em;
    std::vector<Grid> components;
    std::vector<std::string> component_names;
};

struct DistanceResult {
    double d = 0.0;
    double e11 = 0.0;
    double e22 = 0.0;
    double e12 = 0.0;
};

/// Pointwise products and their euclidean combination on two smoothed
/// fields of identical shape and arity.
MatchResult match_fields(const SmoothedField &s1, const SmoothedField &s2);

/// Everything one run produces, kept for reports and renderings.
struct RunResult {
    GridSpec spec;
    MatchConfig config;
    MatchResult match;
    std::optional<DistanceResult> distance;

    // Intermediates, present when the corresponding stage ran.
    std::optional<BitGrid> mask1, mask2;
    std::vector<Grid> fields1, fields2; // T,B,L,R or V,H
    std::vector<std::string> field_names;
    SmoothedField smoothed1, smoothed2;

    std::vector<std::string> warnings;
};

/// Full polygon pipeline: shared grid, rasterize both, difference fields,
/// smoothing, products. The unoriented variant folds the fields through
/// to_varifold before smoothing.
RunResult edge_match(const Polygon &p1, const Polygon &p2,
                     const MatchConfig &cfg = {});

/// Same pipeline with oriented-curve rasterization replacing Steps 1-2.
RunResult curve_match(const CurveSet &c1, const CurveSet &c2,
                      const MatchConfig &cfg = {});

/// Self score E(P, P).
RunResult self_match(const Polygon &p, const MatchConfig &cfg = {});

/// d = E(P1,P1) + E(P2,P2) - 2 E(P1,P2), all three scores on one shared
/// grid. The embedded match is the cross term. d is reported as computed
/// and may be negative; a warning is recorded when it is.
RunResult distance(const Polygon &p1, const Polygon &p2,
                   const MatchConfig &cfg = {});

} // namespace edgecurrent

#endif
