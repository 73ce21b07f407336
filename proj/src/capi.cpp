#include "edgecurrent/edgecurrent.h"

#include <cstring>
#include <exception>
#include <memory>
#include <string>

#include "core/geometry.hpp"
#include "core/io.hpp"
#include "core/match.hpp"
#include "core/render.hpp"

using namespace edgecurrent;

struct ec_polygon {
    Polygon value;
};

struct ec_curveset {
    CurveSet value;
};

struct ec_config {
    MatchConfig value;
};

struct ec_result {
    RunResult value;
};

namespace {

thread_local std::string t_last_error;

ec_status status_from(errc code) {
    switch (code) {
    case errc::invalid_argument: return EC_ERROR_INVALID_ARGUMENT;
    case errc::parse:            return EC_ERROR_PARSE;
    case errc::geometry:         return EC_ERROR_GEOMETRY;
    case errc::config:           return EC_ERROR_CONFIG;
    case errc::bounds:           return EC_ERROR_BOUNDS;
    case errc::io:               return EC_ERROR_IO;
    case errc::internal:         return EC_ERROR_INTERNAL;
    }
    return EC_ERROR_INTERNAL;
}

ec_status fail(ec_status status, const std::string &message) {
    t_last_error = message;
    return status;
}

/// Runs fn, translating exceptions into status codes and clearing the
/// thread-local diagnostic on success.
template <typename Fn> ec_status guarded(Fn &&fn) {
    try {
        fn();
        t_last_error.clear();
        return EC_OK;
    } catch (const error &e) {
        return fail(status_from(e.code()), e.what());
    } catch (const std::exception &e) {
        return fail(EC_ERROR_INTERNAL, e.what());
    } catch (...) {
        return fail(EC_ERROR_INTERNAL, "unknown error");
    }
}

MatchConfig config_or_default(const ec_config *config) {
    return config ? config->value : MatchConfig{};
}

ec_status copy_grid(const Grid &grid, double *buffer, size_t count) {
    if (!buffer)
        return fail(EC_ERROR_INVALID_ARGUMENT, "null buffer");
    if (count < grid.size())
        return fail(EC_ERROR_INVALID_ARGUMENT,
                    "buffer holds " + std::to_string(count) +
                        " elements, need " + std::to_string(grid.size()));
    std::memcpy(buffer, grid.data().data(), grid.size() * sizeof(double));
    t_last_error.clear();
    return EC_OK;
}

/// Maps an ec_field selector onto a component index for this run's variant,
/// or -1 when the selector does not apply.
int component_index(const ec_result *result, ec_field field) {
    bool oriented = result->value.config.variant == Variant::oriented;
    if (oriented) {
        switch (field) {
        case EC_FIELD_TOP:    return 0;
        case EC_FIELD_BOTTOM: return 1;
        case EC_FIELD_LEFT:   return 2;
        case EC_FIELD_RIGHT:  return 3;
        default:              return -1;
        }
    }
    switch (field) {
    case EC_FIELD_VERTICAL:   return 0;
    case EC_FIELD_HORIZONTAL: return 1;
    default:                  return -1;
    }
}

} // namespace

extern "C" {

const char *ec_version(void) { return "1.0.0"; }

const char *ec_status_name(ec_status status) {
    switch (status) {
    case EC_OK:                     return "ok";
    case EC_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case EC_ERROR_PARSE:            return "parse error";
    case EC_ERROR_GEOMETRY:         return "invalid geometry";
    case EC_ERROR_CONFIG:           return "invalid configuration";
    case EC_ERROR_BOUNDS:           return "out of bounds";
    case EC_ERROR_IO:               return "i/o error";
    case EC_ERROR_INTERNAL:         return "internal error";
    }
    return "unknown";
}

const char *ec_last_error(void) { return t_last_error.c_str(); }

/* ---- polygons ---------------------------------------------------------- */

ec_status ec_polygon_create(const double *xy, size_t vertex_count,
                            ec_polygon **out) {
    if (!out)
        return fail(EC_ERROR_INVALID_ARGUMENT, "null output handle");
    *out = nullptr;
    if (!xy && vertex_count > 0)
        return fail(EC_ERROR_INVALID_ARGUMENT, "null vertex data");
    return guarded([&] {
        std::vector<Vec2> vertices;
        vertices.reserve(vertex_count);
        for (size_t i = 0; i < vertex_count; ++i)
            vertices.push_back({xy[2 * i], xy[2 * i + 1]});
        *out = new ec_polygon{Polygon::from_vertices(std::move(vertices))};
    });
}

ec_status ec_polygon_load(const char *path, ec_polygon **out) {
    if (!out)
        return fail(EC_ERROR_INVALID_ARGUMENT, "null output handle");
    *out = nullptr;
    if (!path)
        return fail(EC_ERROR_INVALID_ARGUMENT, "null path");
    return guarded([&] { *out = new ec_polygon{load_polygon(path)}; });
}

void ec_polygon_free(ec_polygon *polygon) { delete polygon; }

size_t ec_polygon_vertex_count(const ec_polygon *polygon) {
    return polygon ? polygon->value.size() : 0;
}

/* ---- curve sets --------------------------------------------------------- */

ec_status ec_curveset_create(ec_curveset **out) {
    if (!out)
        return fail(EC_ERROR_INVALID_ARGUMENT, "null output handle");
    *out = new ec_curveset{};
    t_last_error.clear();
    return EC_OK;
}

ec_status ec_curveset_add(ec_curveset *set, const double *xy,
                          size_t vertex_count, int closed) {
    if (!set)
        return fail(EC_ERROR_INVALID_ARGUMENT, "null curve set");
    if (!xy && vertex_count > 0)
        return fail(EC_ERROR_INVALID_ARGUMENT, "null vertex data");
    return guarded([&] {
        Curve curve;
        curve.closed = closed != 0;
        curve.vertices.reserve(vertex_count);
        for (size_t i = 0; i < vertex_count; ++i)
            curve.vertices.push_back({xy[2 * i], xy[2 * i + 1]});
        set->value.add(std::move(curve));
    });
}

ec_status ec_curveset_load(const char *path, ec_curveset **out) {
    if (!out)
        return fail(EC_ERROR_INVALID_ARGUMENT, "null output handle");
    *out = nullptr;
    if (!path)
        return fail(EC_ERROR_INVALID_ARGUMENT, "null path");
    return guarded([&] { *out = new ec_curveset{load_curveset(path)}; });
}

void ec_curveset_free(ec_curveset *set) { delete set; }

size_t ec_curveset_count(const ec_curveset *set) {
    return set ? set->value.size() : 0;
}

/* ---- configuration ------------------------------------------------------ */

ec_status ec_config_create(ec_config **out) {
    if (!out)
        return fail(EC_ERROR_INVALID_ARGUMENT, "null output handle");
    *out = new ec_config{};
    t_last_error.clear();
    return EC_OK;
}

void ec_config_free(ec_config *config) { delete config; }

#define EC_CONFIG_SETTER(check, assign)                                        \
    do {                                                                       \
        if (!config)                                                           \
            return fail(EC_ERROR_INVALID_ARGUMENT, "null config");             \
        if (!(check))                                                          \
            return fail(EC_ERROR_CONFIG, "rejected configuration value");      \
        assign;                                                                \
        t_last_error.clear();                                                  \
        return EC_OK;                                                          \
    } while (0)

ec_status ec_config_set_kernel_size(ec_config *config, int size) {
    EC_CONFIG_SETTER(size >= 1 && size % 2 == 1,
                     config->value.kernel_size = size);
}

ec_status ec_config_set_sigma(ec_config *config, double sigma) {
    EC_CONFIG_SETTER(sigma > 0.0, config->value.sigma = sigma);
}

ec_status ec_config_set_peak_divisor(ec_config *config, double divisor) {
    EC_CONFIG_SETTER(divisor > 0.0, config->value.peak_divisor = divisor);
}

ec_status ec_config_set_exact_peak_normalization(ec_config *config,
                                                 int enabled) {
    EC_CONFIG_SETTER(true, config->value.exact_peak = enabled != 0);
}

ec_status ec_config_set_margin(ec_config *config, int margin) {
    EC_CONFIG_SETTER(margin >= 0, config->value.margin = margin);
}

ec_status ec_config_set_variant(ec_config *config, ec_variant variant) {
    EC_CONFIG_SETTER(variant == EC_VARIANT_ORIENTED ||
                         variant == EC_VARIANT_UNORIENTED,
                     config->value.variant = variant == EC_VARIANT_ORIENTED
                                                 ? Variant::oriented
                                                 : Variant::unoriented);
}

#undef EC_CONFIG_SETTER

/* ---- runs --------------------------------------------------------------- */

ec_status ec_match_polygons(const ec_polygon *p1, const ec_polygon *p2,
                            const ec_config *config, ec_result **out) {
    if (!out)
        return fail(EC_ERROR_INVALID_ARGUMENT, "null output handle");
    *out = nullptr;
    if (!p1 || !p2)
        return fail(EC_ERROR_INVALID_ARGUMENT, "null polygon");
    return guarded([&] {
        *out = new ec_result{
            edge_match(p1->value, p2->value, config_or_default(config))};
    });
}

ec_status ec_match_curves(const ec_curveset *c1, const ec_curveset *c2,
                          const ec_config *config, ec_result **out) {
    if (!out)
        return fail(EC_ERROR_INVALID_ARGUMENT, "null output handle");
    *out = nullptr;
    if (!c1 || !c2)
        return fail(EC_ERROR_INVALID_ARGUMENT, "null curve set");
    return guarded([&] {
        *out = new ec_result{
            curve_match(c1->value, c2->value, config_or_default(config))};
    });
}

ec_status ec_match_self(const ec_polygon *p, const ec_config *config,
                        ec_result **out) {
    if (!out)
        return fail(EC_ERROR_INVALID_ARGUMENT, "null output handle");
    *out = nullptr;
    if (!p)
        return fail(EC_ERROR_INVALID_ARGUMENT, "null polygon");
    return guarded([&] {
        *out = new ec_result{self_match(p->value, config_or_default(config))};
    });
}

ec_status ec_distance_polygons(const ec_polygon *p1, const ec_polygon *p2,
                               const ec_config *config, ec_result **out) {
    if (!out)
        return fail(EC_ERROR_INVALID_ARGUMENT, "null output handle");
    *out = nullptr;
    if (!p1 || !p2)
        return fail(EC_ERROR_INVALID_ARGUMENT, "null polygon");
    return guarded([&] {
        *out = new ec_result{
            distance(p1->value, p2->value, config_or_default(config))};
    });
}

/* ---- results ------------------------------------------------------------ */

void ec_result_free(ec_result *result) { delete result; }

double ec_result_score(const ec_result *result) {
    return result ? result->value.match.score : 0.0;
}

int ec_result_has_distance(const ec_result *result) {
    return result && result->value.distance ? 1 : 0;
}

ec_status ec_result_distance(const ec_result *result, double *d, double *e11,
                             double *e22, double *e12) {
    if (!result)
        return fail(EC_ERROR_INVALID_ARGUMENT, "null result");
    if (!result->value.distance)
        return fail(EC_ERROR_INVALID_ARGUMENT,
                    "result carries no distance (use ec_distance_polygons)");
    const DistanceResult &dist = *result->value.distance;
    if (d)
        *d = dist.d;
    if (e11)
        *e11 = dist.e11;
    if (e22)
        *e22 = dist.e22;
    if (e12)
        *e12 = dist.e12;
    t_last_error.clear();
    return EC_OK;
}

void ec_result_grid_size(const ec_result *result, int *rows, int *cols) {
    if (rows)
        *rows = result ? result->value.spec.rows : 0;
    if (cols)
        *cols = result ? result->value.spec.cols : 0;
}

void ec_result_padded_size(const ec_result *result, int *rows, int *cols) {
    if (rows)
        *rows = result ? result->value.match.em.rows() : 0;
    if (cols)
        *cols = result ? result->value.match.em.cols() : 0;
}

int ec_result_component_count(const ec_result *result) {
    return result ? static_cast<int>(result->value.match.components.size())
                  : 0;
}

ec_status ec_result_copy_em(const ec_result *result, double *buffer,
                            size_t count) {
    if (!result)
        return fail(EC_ERROR_INVALID_ARGUMENT, "null result");
    return copy_grid(result->value.match.em, buffer, count);
}

ec_status ec_result_copy_match_component(const ec_result *result,
                                         ec_field field, double *buffer,
                                         size_t count) {
    if (!result)
        return fail(EC_ERROR_INVALID_ARGUMENT, "null result");
    int index = component_index(result, field);
    if (index < 0)
        return fail(EC_ERROR_INVALID_ARGUMENT,
                    "field selector does not apply to this run's variant");
    return copy_grid(result->value.match.components[static_cast<size_t>(index)],
                     buffer, count);
}

ec_status ec_result_copy_mask(const ec_result *result, int which,
                              uint8_t *buffer, size_t count) {
    if (!result)
        return fail(EC_ERROR_INVALID_ARGUMENT, "null result");
    if (which != 1 && which != 2)
        return fail(EC_ERROR_INVALID_ARGUMENT, "which must be 1 or 2");
    const auto &mask = which == 1 ? result->value.mask1 : result->value.mask2;
    if (!mask)
        return fail(EC_ERROR_INVALID_ARGUMENT,
                    "this run has no occupancy masks (curve input)");
    if (!buffer)
        return fail(EC_ERROR_INVALID_ARGUMENT, "null buffer");
    if (count < mask->cells.size())
        return fail(EC_ERROR_INVALID_ARGUMENT, "buffer too small");
    std::memcpy(buffer, mask->cells.data(), mask->cells.size());
    t_last_error.clear();
    return EC_OK;
}

ec_status ec_result_copy_difference_field(const ec_result *result, int which,
                                          ec_field field, double *buffer,
                                          size_t count) {
    if (!result)
        return fail(EC_ERROR_INVALID_ARGUMENT, "null result");
    if (which != 1 && which != 2)
        return fail(EC_ERROR_INVALID_ARGUMENT, "which must be 1 or 2");
    int index = component_index(result, field);
    if (index < 0)
        return fail(EC_ERROR_INVALID_ARGUMENT,
                    "field selector does not apply to this run's variant");
    const auto &fields =
        which == 1 ? result->value.fields1 : result->value.fields2;
    return copy_grid(fields[static_cast<size_t>(index)], buffer, count);
}

ec_status ec_result_copy_smoothed_field(const ec_result *result, int which,
                                        ec_field field, double *buffer,
                                        size_t count) {
    if (!result)
        return fail(EC_ERROR_INVALID_ARGUMENT, "null result");
    if (which != 1 && which != 2)
        return fail(EC_ERROR_INVALID_ARGUMENT, "which must be 1 or 2");
    int index = component_index(result, field);
    if (index < 0)
        return fail(EC_ERROR_INVALID_ARGUMENT,
                    "field selector does not apply to this run's variant");
    const auto &smoothed =
        which == 1 ? result->value.smoothed1 : result->value.smoothed2;
    return copy_grid(smoothed.components[static_cast<size_t>(index)], buffer,
                     count);
}

int ec_result_warning_count(const ec_result *result) {
    return result ? static_cast<int>(result->value.warnings.size()) : 0;
}

const char *ec_result_warning(const ec_result *result, int index) {
    if (!result || index < 0 ||
        index >= static_cast<int>(result->value.warnings.size()))
        return nullptr;
    return result->value.warnings[static_cast<size_t>(index)].c_str();
}

/* ---- reports and images ------------------------------------------------- */

ec_status ec_result_write_report(const ec_result *result, const char *path) {
    if (!result || !path)
        return fail(EC_ERROR_INVALID_ARGUMENT, "null result or path");
    return guarded([&] { write_report(result->value, path); });
}

ec_status ec_result_write_em_csv(const ec_result *result, const char *path) {
    if (!result || !path)
        return fail(EC_ERROR_INVALID_ARGUMENT, "null result or path");
    return guarded([&] { write_em_csv(result->value, path); });
}

ec_status ec_result_render_panels(const ec_result *result, ec_panels which,
                                  const char *path) {
    if (!result || !path)
        return fail(EC_ERROR_INVALID_ARGUMENT, "null result or path");
    PanelSheet sheet;
    switch (which) {
    case EC_PANELS_FIELDS:   sheet = PanelSheet::fields; break;
    case EC_PANELS_SMOOTHED: sheet = PanelSheet::smoothed; break;
    case EC_PANELS_MATCH:    sheet = PanelSheet::match; break;
    default:
        return fail(EC_ERROR_INVALID_ARGUMENT, "unknown panel sheet");
    }
    return guarded([&] { render_panels(result->value, sheet, path); });
}

} // extern "C"
