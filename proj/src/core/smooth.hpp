#ifndef EDGECURRENT_CORE_SMOOTH_HPP
#define EDGECURRENT_CORE_SMOOTH_HPP

#include <string>
#include <vector>

#include "core/decompose.hpp"
#include "core/grid.hpp"

namespace edgecurrent {

/// Truncated, peak-normalized Gaussian. weights holds the k x k taps; the
/// separable path uses the raw 1-D profile plus the shared scale so that its
/// impulse response reproduces weights bit for bit.
struct Kernel {
    int size = 0;             // k, odd
    double sigma = 0.0;
    double peak_divisor = 1.0;
    Grid weights;             // weights(u,v) = profile[u] * profile[v] * scale
    std::vector<double> profile; // exp(-d^2 / (2 sigma^2)), d = -h..h
    double scale = 1.0;          // 1 / (sum of raw 2-D taps * peak_divisor)

    int radius() const { return (size - 1) / 2; }
    /// Sum of the final taps, fixed row-major order.
    double sum() const { return weights.sum(); }
};

inline constexpr int kDefaultKernelSize = 5;
inline constexpr double kDefaultSigma = 1.0;
inline constexpr double kDefaultPeakDivisor = 0.1621;

/// raw(u,v) = exp(-(u^2+v^2) / (2 sigma^2)) for u,v in -h..h, normalized to
/// unit sum, then divided by peak_divisor. With the defaults (5, 1, 0.1621)
/// the center weight is ~1 and the taps sum to 1/0.1621.
Kernel gaussian_kernel(int size = kDefaultKernelSize,
                       double sigma = kDefaultSigma,
                       double peak_divisor = kDefaultPeakDivisor);

/// Center weight of the unit-sum kernel, i.e. the divisor that makes the
/// peak exactly 1.
double kernel_center_weight(int size, double sigma);

/// Full 2-D convolution with zero padding: output extent
/// (rows+k-1) x (cols+k-1). Runs as two separable 1-D passes; the direct
/// quadruple-loop form lives in the test oracle.
Grid convolve_full(const Grid &field, const Kernel &kern);

/// Smoothed field components plus their display names ("CT","CB","CL","CR"
/// for oriented runs, "CV","CH" for unoriented ones).
struct SmoothedField {
    std::vector<Grid> components;
    std::vector<std::string> names;

    int rows() const { return components.front().rows(); }
    int cols() const { return components.front().cols(); }
};

/// Convolves each of t, b, l, r independently; the four convolutions run as
/// one task per field, which keeps every output cell's summation order fixed.
SmoothedField smooth_edge_field(const EdgeField &e, const Kernel &kern);

/// Convolves v and h independently.
SmoothedField smooth_varifold_field(const VarifoldField &f, const Kernel &kern);

} // namespace edgecurrent

#endif
