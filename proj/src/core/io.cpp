#include "core/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "core/render.hpp"

namespace edgecurrent {

namespace {

using nlohmann::json;

std::ifstream open_input(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw error(errc::parse, path + ": cannot open file");
    return in;
}

bool looks_like_json(std::istream &in) {
    int c;
    while ((c = in.peek()) != EOF && std::isspace(c))
        in.get();
    return c == '{';
}

Vec2 vertex_from_json(const json &v, const std::string &where) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
        !v[1].is_number())
        throw error(errc::parse, where + ": vertex must be a [x, y] pair");
    return {v[0].get<double>(), v[1].get<double>()};
}

json parse_json_document(std::istream &in, const std::string &name) {
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw error(errc::parse, name + ": " + e.what());
    }
}

} // namespace

Polygon parse_polygon_csv(std::istream &in, const std::string &name) {
    std::vector<Vec2> vertices;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string trimmed = line;
        size_t first = trimmed.find_first_not_of(" \t\r");
        if (first == std::string::npos)
            continue; // blank line
        const std::string where = name + ":" + std::to_string(line_no);
        double x = 0.0, y = 0.0;
        char extra = 0;
        int got = std::sscanf(line.c_str(), " %lf , %lf %c", &x, &y, &extra);
        if (got != 2 || !std::isfinite(x) || !std::isfinite(y))
            throw error(errc::parse,
                        where + ": expected `x,y`, got \"" + line + "\"");
        vertices.push_back({x, y});
    }
    try {
        return Polygon::from_vertices(std::move(vertices));
    } catch (const error &e) {
        throw error(e.code(), name + ": " + e.what());
    }
}

Polygon parse_polygon_json(std::istream &in, const std::string &name) {
    json doc = parse_json_document(in, name);
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        throw error(errc::parse, name + ": missing \"vertices\" array");
    std::vector<Vec2> vertices;
    size_t index = 0;
    for (const json &v : doc["vertices"]) {
        ++index;
        vertices.push_back(vertex_from_json(
            v, name + ": vertex " + std::to_string(index)));
    }
    try {
        return Polygon::from_vertices(std::move(vertices));
    } catch (const error &e) {
        throw error(e.code(), name + ": " + e.what());
    }
}

Polygon load_polygon(const std::string &path) {
    std::ifstream in = open_input(path);
    if (looks_like_json(in))
        return parse_polygon_json(in, path);
    return parse_polygon_csv(in, path);
}

CurveSet parse_curveset_json(std::istream &in, const std::string &name) {
    json doc = parse_json_document(in, name);
    if (!doc.contains("curves") || !doc["curves"].is_array())
        throw error(errc::parse, name + ": missing \"curves\" array");
    CurveSet set;
    size_t index = 0;
    for (const json &c : doc["curves"]) {
        ++index;
        const std::string where = name + ": curve " + std::to_string(index);
        if (!c.is_object() || !c.contains("vertices") ||
            !c["vertices"].is_array())
            throw error(errc::parse, where + ": missing \"vertices\" array");
        Curve curve;
        size_t vi = 0;
        for (const json &v : c["vertices"]) {
            ++vi;
            curve.vertices.push_back(vertex_from_json(
                v, where + " vertex " + std::to_string(vi)));
        }
        if (c.contains("closed")) {
            if (!c["closed"].is_boolean())
                throw error(errc::parse, where + ": \"closed\" must be a bool");
            curve.closed = c["closed"].get<bool>();
        }
        try {
            set.add(std::move(curve));
        } catch (const error &e) {
            throw error(e.code(), name + ": " + e.what());
        }
    }
    return set;
}

CurveSet load_curveset(const std::string &path) {
    std::ifstream in = open_input(path);
    return parse_curveset_json(in, path);
}

namespace {

json scales_to_json(const RunResult &run, PanelSheet sheet) {
    json out = json::object();
    for (const auto &[name, scale] : panel_scales(run, sheet))
        out[name] = scale;
    return out;
}

} // namespace

std::string report_json(const RunResult &run) {
    json doc;
    doc["schema"] = 1;
    doc["score"] = run.match.score;
    doc["grid"] = {{"rows", run.spec.rows},
                   {"cols", run.spec.cols},
                   {"margin", run.spec.margin}};
    doc["padded"] = {{"rows", run.match.em.rows()},
                     {"cols", run.match.em.cols()}};
    doc["config"] = {
        {"kernel_size", run.config.kernel_size},
        {"sigma", run.config.sigma},
        {"peak_divisor", run.config.peak_divisor},
        {"exact_peak", run.config.exact_peak},
        {"margin", run.config.margin},
        {"variant",
         run.config.variant == Variant::oriented ? "oriented" : "unoriented"},
    };
    if (run.distance) {
        doc["distance"] = {{"d", run.distance->d},
                           {"e11", run.distance->e11},
                           {"e22", run.distance->e22},
                           {"e12", run.distance->e12}};
    }
    doc["warnings"] = run.warnings;
    doc["panel_scales"] = {
        {"fields", scales_to_json(run, PanelSheet::fields)},
        {"smoothed", scales_to_json(run, PanelSheet::smoothed)},
        {"match", scales_to_json(run, PanelSheet::match)},
    };
    return doc.dump(2) + "\n";
}

void write_report(const RunResult &run, const std::string &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw error(errc::io, "cannot open " + path + " for writing");
    out << report_json(run);
    if (!out)
        throw error(errc::io, "failed writing " + path);
}

void write_em_csv(const RunResult &run, const std::string &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw error(errc::io, "cannot open " + path + " for writing");
    const Grid &em = run.match.em;
    char buf[64];
    for (int i = 0; i < em.rows(); ++i) {
        for (int j = 0; j < em.cols(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", em.at(i, j));
            if (j)
                out << ',';
            out << buf;
        }
        out << '\n';
    }
    if (!out)
        throw error(errc::io, "failed writing " + path);
}

} // namespace edgecurrent
