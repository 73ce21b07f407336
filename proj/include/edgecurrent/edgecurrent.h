/* edgecurrent - flat-norm-motivated polygonal edge matching.
 *
 * C interface to the edgecurrent core. All objects are opaque handles;
 * every fallible call returns an ec_status and writes results through
 * out-parameters. ec_last_error() carries a human-readable diagnostic
 * for the most recent failure on the calling thread.
 */

#ifndef EDGECURRENT_H
#define EDGECURRENT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define EC_API __declspec(dllexport)
#else
#  define EC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ec_status {
    EC_OK = 0,
    EC_ERROR_INVALID_ARGUMENT = 1, /* null handle, bad buffer size, ... */
    EC_ERROR_PARSE = 2,            /* unreadable or malformed input file */
    EC_ERROR_GEOMETRY = 3,         /* invalid polygon or curve */
    EC_ERROR_CONFIG = 4,           /* even kernel size, insufficient margin, ... */
    EC_ERROR_BOUNDS = 5,           /* shape does not fit the grid */
    EC_ERROR_IO = 6,               /* output file could not be written */
    EC_ERROR_INTERNAL = 7
} ec_status;

typedef enum ec_variant {
    EC_VARIANT_ORIENTED = 0,  /* four fields: top/bottom/left/right currents */
    EC_VARIANT_UNORIENTED = 1 /* two fields: vertical/horizontal densities */
} ec_variant;

/* Field selectors. TOP..RIGHT address oriented runs, VERTICAL/HORIZONTAL
 * unoriented ones. */
typedef enum ec_field {
    EC_FIELD_TOP = 0,
    EC_FIELD_BOTTOM = 1,
    EC_FIELD_LEFT = 2,
    EC_FIELD_RIGHT = 3,
    EC_FIELD_VERTICAL = 4,
    EC_FIELD_HORIZONTAL = 5
} ec_field;

typedef enum ec_panels {
    EC_PANELS_FIELDS = 0,   /* difference fields over the masks        */
    EC_PANELS_SMOOTHED = 1, /* smoothed fields over the masks          */
    EC_PANELS_MATCH = 2     /* masks, superposition, and the EM grid   */
} ec_panels;

typedef struct ec_polygon ec_polygon;
typedef struct ec_curveset ec_curveset;
typedef struct ec_config ec_config;
typedef struct ec_result ec_result;

EC_API const char *ec_version(void);
EC_API const char *ec_status_name(ec_status status);

/* Diagnostic for the most recent failing call on this thread; empty string
 * if the last call succeeded. The pointer stays valid until the next call
 * on the same thread. */
EC_API const char *ec_last_error(void);

/* ---- polygons ---------------------------------------------------------- */

/* xy holds vertex_count (x, y) pairs, interleaved. Vertices must describe a
 * simple closed polygon with all coordinates > 0; an exactly repeated
 * closing vertex is dropped. */
EC_API ec_status ec_polygon_create(const double *xy, size_t vertex_count,
                                   ec_polygon **out);

/* Reads CSV ("x,y" per line) or JSON ({"vertices": [[x,y],...]}); the format
 * is detected from the content. */
EC_API ec_status ec_polygon_load(const char *path, ec_polygon **out);

EC_API void ec_polygon_free(ec_polygon *polygon);
EC_API size_t ec_polygon_vertex_count(const ec_polygon *polygon);

/* ---- curve sets --------------------------------------------------------- */

EC_API ec_status ec_curveset_create(ec_curveset **out);

/* Appends one polyline (>= 2 vertices, coordinates > 0). closed != 0 joins
 * the last vertex back to the first. */
EC_API ec_status ec_curveset_add(ec_curveset *set, const double *xy,
                                 size_t vertex_count, int closed);

/* Reads {"curves": [{"vertices": [[x,y],...], "closed": bool}, ...]}. */
EC_API ec_status ec_curveset_load(const char *path, ec_curveset **out);

EC_API void ec_curveset_free(ec_curveset *set);
EC_API size_t ec_curveset_count(const ec_curveset *set);

/* ---- configuration ------------------------------------------------------ */

/* Defaults: kernel size 5, sigma 1.0, peak divisor 0.1621, margin 5,
 * oriented variant. Passing a null config to a run uses the defaults. */
EC_API ec_status ec_config_create(ec_config **out);
EC_API void ec_config_free(ec_config *config);

EC_API ec_status ec_config_set_kernel_size(ec_config *config, int size);
EC_API ec_status ec_config_set_sigma(ec_config *config, double sigma);
EC_API ec_status ec_config_set_peak_divisor(ec_config *config, double divisor);

/* When enabled, the peak divisor is replaced by the kernel's exact center
 * weight, so the center of the final kernel is exactly 1. */
EC_API ec_status ec_config_set_exact_peak_normalization(ec_config *config,
                                                        int enabled);
EC_API ec_status ec_config_set_margin(ec_config *config, int margin);
EC_API ec_status ec_config_set_variant(ec_config *config, ec_variant variant);

/* ---- runs --------------------------------------------------------------- */

EC_API ec_status ec_match_polygons(const ec_polygon *p1, const ec_polygon *p2,
                                   const ec_config *config, ec_result **out);

EC_API ec_status ec_match_curves(const ec_curveset *c1, const ec_curveset *c2,
                                 const ec_config *config, ec_result **out);

/* Self score E(P, P). */
EC_API ec_status ec_match_self(const ec_polygon *p, const ec_config *config,
                               ec_result **out);

/* Computes E(P1,P1), E(P2,P2) and E(P1,P2) on one shared grid and the
 * polarization distance d = e11 + e22 - 2*e12. The result's score is the
 * cross score e12. d may be negative; a warning is recorded when it is. */
EC_API ec_status ec_distance_polygons(const ec_polygon *p1,
                                      const ec_polygon *p2,
                                      const ec_config *config,
                                      ec_result **out);

/* ---- results ------------------------------------------------------------ */

EC_API void ec_result_free(ec_result *result);

EC_API double ec_result_score(const ec_result *result);
EC_API int ec_result_has_distance(const ec_result *result);
EC_API ec_status ec_result_distance(const ec_result *result, double *d,
                                    double *e11, double *e22, double *e12);

/* Occupancy grid extent (I rows x J cols) and the padded extent of the
 * smoothed/match grids ((I+k-1) x (J+k-1)). */
EC_API void ec_result_grid_size(const ec_result *result, int *rows, int *cols);
EC_API void ec_result_padded_size(const ec_result *result, int *rows,
                                  int *cols);

/* 4 for oriented runs, 2 for unoriented ones. */
EC_API int ec_result_component_count(const ec_result *result);

/* Buffers are caller-allocated, row-major; count is the element capacity and
 * must be at least rows*cols of the corresponding extent. which selects the
 * first (1) or second (2) input. */
EC_API ec_status ec_result_copy_em(const ec_result *result, double *buffer,
                                   size_t count);
EC_API ec_status ec_result_copy_match_component(const ec_result *result,
                                                ec_field field, double *buffer,
                                                size_t count);
EC_API ec_status ec_result_copy_mask(const ec_result *result, int which,
                                     uint8_t *buffer, size_t count);
EC_API ec_status ec_result_copy_difference_field(const ec_result *result,
                                                 int which, ec_field field,
                                                 double *buffer, size_t count);
EC_API ec_status ec_result_copy_smoothed_field(const ec_result *result,
                                               int which, ec_field field,
                                               double *buffer, size_t count);

EC_API int ec_result_warning_count(const ec_result *result);
EC_API const char *ec_result_warning(const ec_result *result, int index);

/* ---- reports and images ------------------------------------------------- */

/* JSON report: schema, score, grid extents, config echo, optional distance
 * block, warnings, and the per-panel display scale factors. */
EC_API ec_status ec_result_write_report(const ec_result *result,
                                        const char *path);

/* Full EM grid, row-major CSV, 17 significant digits per entry. */
EC_API ec_status ec_result_write_em_csv(const ec_result *result,
                                        const char *path);

/* 8-bit binary PGM (P5) panel sheets; byte-identical for identical runs. */
EC_API ec_status ec_result_render_panels(const ec_result *result,
                                         ec_panels which, const char *path);

#ifdef __cplusplus
}
#endif

#endif /* EDGECURRENT_H */
