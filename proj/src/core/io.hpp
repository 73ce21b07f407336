#ifndef EDGECURRENT_CORE_IO_HPP
#define EDGECURRENT_CORE_IO_HPP

#include <iosfwd>
#include <string>

#include "core/geometry.hpp"
#include "core/match.hpp"

namespace edgecurrent {

/// Loads a polygon from CSV ("x,y" per line, traversal order, no header) or
/// JSON ({"vertices": [[x,y], ...]}). The format is detected from the first
/// non-whitespace character. Parse diagnostics name the offending line.
Polygon load_polygon(const std::string &path);
Polygon parse_polygon_csv(std::istream &in, const std::string &name);
Polygon parse_polygon_json(std::istream &in, const std::string &name);

/// Loads {"curves": [{"vertices": [[x,y],...], "closed": bool}, ...]};
/// "closed" defaults to false.
CurveSet load_curveset(const std::string &path);
CurveSet parse_curveset_json(std::istream &in, const std::string &name);

/// Versioned JSON report: score, grid extents, config echo, optional
/// distance block, warnings, per-panel display scales.
std::string report_json(const RunResult &run);
void write_report(const RunResult &run, const std::string &path);

/// Full EM grid, row-major, 17 significant digits per entry.
void write_em_csv(const RunResult &run, const std::string &path);

} // namespace edgecurrent

#endif
