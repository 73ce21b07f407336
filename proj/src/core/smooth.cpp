#include "core/smooth.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <string>
#include <utility>

namespace edgecurrent {

namespace {

std::vector<double> gaussian_profile(int size, double sigma) {
    int h = (size - 1) / 2;
    std::vector<double> profile(static_cast<size_t>(size));
    for (int d = -h; d <= h; ++d)
        profile[static_cast<size_t>(d + h)] =
            std::exp(-(static_cast<double>(d) * d) / (2.0 * sigma * sigma));
    return profile;
}

void validate_kernel_params(int size, double sigma) {
    if (size < 1 || size % 2 == 0)
        throw error(errc::config, "kernel size must be odd and positive, got " +
                                      std::to_string(size));
    if (!(sigma > 0.0))
        throw error(errc::config, "sigma must be positive");
}

} // namespace

double kernel_center_weight(int size, double sigma) {
    validate_kernel_params(size, sigma);
    std::vector<double> profile = gaussian_profile(size, sigma);
    double total = 0.0;
    for (int u = 0; u < size; ++u)
        for (int v = 0; v < size; ++v)
            total += profile[u] * profile[v];
    int h = (size - 1) / 2;
    return profile[h] * profile[h] / total;
}

Kernel gaussian_kernel(int size, double sigma, double peak_divisor) {
    validate_kernel_params(size, sigma);
    if (!(peak_divisor > 0.0))
        throw error(errc::config, "peak divisor must be positive");

    Kernel k;
    k.size = size;
    k.sigma = sigma;
    k.peak_divisor = peak_divisor;
    k.profile = gaussian_profile(size, sigma);

    double total = 0.0;
    for (int u = 0; u < size; ++u)
        for (int v = 0; v < size; ++v)
            total += k.profile[u] * k.profile[v];
    k.scale = 1.0 / (total * peak_divisor);

    k.weights = Grid(size, size);
    for (int u = 0; u < size; ++u)
        for (int v = 0; v < size; ++v)
            k.weights.at(u, v) = k.profile[u] * k.profile[v] * k.scale;
    return k;
}

Grid convolve_full(const Grid &field, const Kernel &kern) {
    const int k = kern.size;
    const int rows = field.rows();
    const int cols = field.cols();
    const int out_rows = rows + k - 1;
    const int out_cols = cols + k - 1;

    // Pass 1 along axis-1. mid(a, j) = sum_u profile[u] * field(a-u, j).
    Grid mid(out_rows, cols);
    for (int a = 0; a < out_rows; ++a) {
        int u_lo = std::max(0, a - rows + 1);
        int u_hi = std::min(k - 1, a);
        for (int j = 0; j < cols; ++j) {
            double acc = 0.0;
            for (int u = u_lo; u <= u_hi; ++u)
                acc += kern.profile[static_cast<size_t>(u)] *
                       field.at(a - u, j);
            mid.at(a, j) = acc;
        }
    }

    // Pass 2 along axis-2, then the shared scale. The scale applied last
    // keeps the impulse response identical to the stored weights.
    Grid out(out_rows, out_cols);
    for (int a = 0; a < out_rows; ++a) {
        for (int b = 0; b < out_cols; ++b) {
            int v_lo = std::max(0, b - cols + 1);
            int v_hi = std::min(k - 1, b);
            double acc = 0.0;
            for (int v = v_lo; v <= v_hi; ++v)
                acc += kern.profile[static_cast<size_t>(v)] * mid.at(a, b - v);
            out.at(a, b) = acc * kern.scale;
        }
    }
    return out;
}

namespace {

SmoothedField smooth_components(std::vector<const Grid *> fields,
                                std::vector<std::string> names,
                                const Kernel &kern) {
    std::vector<std::future<Grid>> tasks;
    tasks.reserve(fields.size());
    for (const Grid *f : fields)
        tasks.push_back(std::async(std::launch::async, [f, &kern] {
            return convolve_full(*f, kern);
        }));

    SmoothedField out;
    out.names = std::move(names);
    out.components.reserve(tasks.size());
    for (std::future<Grid> &t : tasks)
        out.components.push_back(t.get());
    return out;
}

} // namespace

SmoothedField smooth_edge_field(const EdgeField &e, const Kernel &kern) {
    return smooth_components({&e.t, &e.b, &e.l, &e.r},
                             {"CT", "CB", "CL", "CR"}, kern);
}

SmoothedField smooth_varifold_field(const VarifoldField &f,
                                    const Kernel &kern) {
    return smooth_components({&f.v, &f.h}, {"CV", "CH"}, kern);
}

} // namespace edgecurrent
