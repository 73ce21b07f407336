#include "core/render.hpp"

#include <cmath>
#include <fstream>

namespace edgecurrent {

namespace {

Grid crop_to_grid(const Grid &padded, int radius) {
    Grid out(padded.rows() - 2 * radius, padded.cols() - 2 * radius);
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < out.cols(); ++j)
            out.at(i, j) = padded.at(i + radius, j + radius);
    return out;
}

Grid mask_grid(const RunResult &run, int which) {
    const auto &mask = which == 1 ? run.mask1 : run.mask2;
    Grid out(run.spec.rows, run.spec.cols);
    if (mask)
        for (int i = 0; i < out.rows(); ++i)
            for (int j = 0; j < out.cols(); ++j)
                out.at(i, j) = static_cast<double>(mask->at(i, j));
    return out;
}

Grid plus(const Grid &a, const Grid &b, double b_weight = 1.0) {
    Grid out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.at(i, j) = a.at(i, j) + b_weight * b.at(i, j);
    return out;
}

} // namespace

PanelLayout build_panels(const RunResult &run, PanelSheet sheet) {
    const int radius = run.config.kernel_radius();
    PanelLayout layout;

    switch (sheet) {
    case PanelSheet::fields: {
        layout.columns = static_cast<int>(run.field_names.size());
        for (int which = 1; which <= 2; ++which) {
            Grid mask = mask_grid(run, which);
            const auto &fields = which == 1 ? run.fields1 : run.fields2;
            for (size_t c = 0; c < fields.size(); ++c)
                layout.panels.push_back(
                    {"P" + std::to_string(which) + "." + run.field_names[c],
                     plus(mask, fields[c], 2.0)});
        }
        break;
    }
    case PanelSheet::smoothed: {
        layout.columns = static_cast<int>(run.smoothed1.names.size());
        for (int which = 1; which <= 2; ++which) {
            Grid mask = mask_grid(run, which);
            const auto &sm = which == 1 ? run.smoothed1 : run.smoothed2;
            for (size_t c = 0; c < sm.components.size(); ++c)
                layout.panels.push_back(
                    {"P" + std::to_string(which) + "." + sm.names[c],
                     plus(mask, crop_to_grid(sm.components[c], radius))});
        }
        break;
    }
    case PanelSheet::match: {
        layout.columns = 5;
        Grid m1 = mask_grid(run, 1);
        Grid m2 = mask_grid(run, 2);
        Grid both = plus(m1, m2);
        Grid em = crop_to_grid(run.match.em, radius);
        layout.panels.push_back({"M1", m1});
        layout.panels.push_back({"M2", m2});
        layout.panels.push_back({"M1+M2", both});
        layout.panels.push_back({"M1+M2+EM", plus(both, em)});
        layout.panels.push_back({"EM", std::move(em)});
        break;
    }
    }
    return layout;
}

std::vector<std::pair<std::string, double>> panel_scales(const RunResult &run,
                                                         PanelSheet sheet) {
    PanelLayout layout = build_panels(run, sheet);
    std::vector<std::pair<std::string, double>> scales;
    scales.reserve(layout.panels.size());
    for (const Panel &p : layout.panels) {
        double maxv = p.values.max_value();
        scales.emplace_back(p.name, maxv > 0.0 ? 255.0 / maxv : 0.0);
    }
    return scales;
}

void write_pgm(const std::string &path, int width, int height,
               const std::vector<uint8_t> &data) {
    if (static_cast<size_t>(width) * static_cast<size_t>(height) != data.size())
        throw error(errc::invalid_argument, "pgm data size mismatch");
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw error(errc::io, "cannot open " + path + " for writing");
    out << "P5\n" << width << " " << height << "\n255\n";
    out.write(reinterpret_cast<const char *>(data.data()),
              static_cast<std::streamsize>(data.size()));
    if (!out)
        throw error(errc::io, "failed writing " + path);
}

void render_panels(const RunResult &run, PanelSheet sheet,
                   const std::string &path) {
    PanelLayout layout = build_panels(run, sheet);
    constexpr int gutter = 2;
    constexpr uint8_t gutter_value = 255;

    const int panel_rows = layout.panels.front().values.rows();
    const int panel_cols = layout.panels.front().values.cols();
    const int columns = layout.columns;
    const int rows =
        (static_cast<int>(layout.panels.size()) + columns - 1) / columns;

    const int height = rows * panel_rows + (rows - 1) * gutter;
    const int width = columns * panel_cols + (columns - 1) * gutter;
    std::vector<uint8_t> image(static_cast<size_t>(width) * height,
                               gutter_value);

    for (size_t p = 0; p < layout.panels.size(); ++p) {
        const Grid &values = layout.panels[p].values;
        double maxv = values.max_value();
        double scale = maxv > 0.0 ? 255.0 / maxv : 0.0;
        int row0 = static_cast<int>(p) / columns * (panel_rows + gutter);
        int col0 = static_cast<int>(p) % columns * (panel_cols + gutter);
        for (int i = 0; i < panel_rows; ++i) {
            for (int j = 0; j < panel_cols; ++j) {
                double v = std::floor(values.at(i, j) * scale + 0.5);
                if (v < 0.0)
                    v = 0.0;
                if (v > 255.0)
                    v = 255.0;
                image[static_cast<size_t>(row0 + i) * width + (col0 + j)] =
                    static_cast<uint8_t>(v);
            }
        }
    }
    write_pgm(path, width, height, image);
}

} // namespace edgecurrent
