#ifndef EDGECURRENT_CORE_RENDER_HPP
#define EDGECURRENT_CORE_RENDER_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "core/grid.hpp"
#include "core/match.hpp"

namespace edgecurrent {

enum class PanelSheet { fields, smoothed, match };

/// One display panel before scaling.
struct Panel {
    std::string name;
    Grid values;
};

/// Sheet layout: panels are drawn in rows-major order, `columns` per row,
/// separated by 2-pixel white gutters. Smoothed and match panels are cropped
/// by the kernel radius on every side so they align with the occupancy grid.
struct PanelLayout {
    std::vector<Panel> panels;
    int columns = 0;
};

PanelLayout build_panels(const RunResult &run, PanelSheet sheet);

/// Per-panel display scale factor (255 / panel max; 0 for all-zero panels),
/// in layout order. Recorded in the report so renderings are reproducible.
std::vector<std::pair<std::string, double>> panel_scales(const RunResult &run,
                                                         PanelSheet sheet);

/// Binary 8-bit PGM (P5). data is row-major, size width * height.
void write_pgm(const std::string &path, int width, int height,
               const std::vector<uint8_t> &data);

/// Renders one sheet to a PGM file. Byte-identical output for identical
/// runs.
void render_panels(const RunResult &run, PanelSheet sheet,
                   const std::string &path);

} // namespace edgecurrent

#endif
