// Command-line front end. Parses arguments, drives the shared library
// through its C API, and writes the requested artifacts.

#include <cstdio>
#include <filesystem>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edgecurrent/edgecurrent.h"

namespace {

constexpr int kExitBadInput = 2; // unreadable or invalid input files
constexpr int kExitBadConfig = 3; // configuration violations

struct Options {
    std::string p1;
    std::string p2;
    bool want_distance = false;
    std::string variant = "oriented";
    int kernel_size = 5;
    double sigma = 1.0;
    double peak_divisor = 0.1621;
    bool exact_peak = false;
    int margin = 5;
    std::string out_dir = ".";
    std::vector<std::string> emit = {"report"};
};

using config_ptr = std::unique_ptr<ec_config, decltype(&ec_config_free)>;
using result_ptr = std::unique_ptr<ec_result, decltype(&ec_result_free)>;
using polygon_ptr = std::unique_ptr<ec_polygon, decltype(&ec_polygon_free)>;
using curveset_ptr = std::unique_ptr<ec_curveset, decltype(&ec_curveset_free)>;

int exit_code_for(ec_status status) {
    switch (status) {
    case EC_ERROR_PARSE:
    case EC_ERROR_GEOMETRY:
    case EC_ERROR_BOUNDS:
    case EC_ERROR_IO:
        return kExitBadInput;
    case EC_ERROR_CONFIG:
        return kExitBadConfig;
    default:
        return 1;
    }
}

[[noreturn]] void die(ec_status status) {
    std::fprintf(stderr, "edgecurrent: %s: %s\n", ec_status_name(status),
                 ec_last_error());
    std::exit(exit_code_for(status));
}

void check(ec_status status) {
    if (status != EC_OK)
        die(status);
}

config_ptr build_config(const Options &opt) {
    ec_config *raw = nullptr;
    check(ec_config_create(&raw));
    config_ptr config(raw, ec_config_free);
    check(ec_config_set_kernel_size(config.get(), opt.kernel_size));
    check(ec_config_set_sigma(config.get(), opt.sigma));
    check(ec_config_set_peak_divisor(config.get(), opt.peak_divisor));
    check(ec_config_set_exact_peak_normalization(config.get(),
                                                 opt.exact_peak ? 1 : 0));
    check(ec_config_set_margin(config.get(), opt.margin));
    check(ec_config_set_variant(config.get(), opt.variant == "unoriented"
                                                  ? EC_VARIANT_UNORIENTED
                                                  : EC_VARIANT_ORIENTED));
    return config;
}

std::set<std::string> validate_emit(const std::vector<std::string> &emit) {
    static const std::set<std::string> known = {
        "report", "fields_image", "smoothed_image", "match_image", "em_csv"};
    std::set<std::string> wanted;
    for (const std::string &item : emit) {
        if (!known.count(item)) {
            std::fprintf(stderr,
                         "edgecurrent: unknown --emit value \"%s\"\n",
                         item.c_str());
            std::exit(kExitBadConfig);
        }
        wanted.insert(item);
    }
    return wanted;
}

int write_outputs(const ec_result *result, const Options &opt) {
    std::set<std::string> emit = validate_emit(opt.emit);
    std::filesystem::path dir(opt.out_dir);
    std::error_code fs_error;
    std::filesystem::create_directories(dir, fs_error);

    // The report is the primary artifact and is always written.
    check(ec_result_write_report(result, (dir / "report.json").c_str()));
    if (emit.count("em_csv"))
        check(ec_result_write_em_csv(result, (dir / "em.csv").c_str()));
    if (emit.count("fields_image"))
        check(ec_result_render_panels(result, EC_PANELS_FIELDS,
                                      (dir / "fields.pgm").c_str()));
    if (emit.count("smoothed_image"))
        check(ec_result_render_panels(result, EC_PANELS_SMOOTHED,
                                      (dir / "smoothed.pgm").c_str()));
    if (emit.count("match_image"))
        check(ec_result_render_panels(result, EC_PANELS_MATCH,
                                      (dir / "match.pgm").c_str()));

    std::printf("score=%.12g\n", ec_result_score(result));
    return 0;
}

polygon_ptr load_polygon(const std::string &path) {
    ec_polygon *raw = nullptr;
    check(ec_polygon_load(path.c_str(), &raw));
    return polygon_ptr(raw, ec_polygon_free);
}

int run_polygon_match(const Options &opt) {
    config_ptr config = build_config(opt);
    polygon_ptr p1 = load_polygon(opt.p1);
    polygon_ptr p2 = load_polygon(opt.p2);

    ec_result *raw = nullptr;
    if (opt.want_distance)
        check(ec_distance_polygons(p1.get(), p2.get(), config.get(), &raw));
    else
        check(ec_match_polygons(p1.get(), p2.get(), config.get(), &raw));
    result_ptr result(raw, ec_result_free);
    return write_outputs(result.get(), opt);
}

int run_curve_match(const Options &opt) {
    config_ptr config = build_config(opt);
    ec_curveset *raw_set = nullptr;
    check(ec_curveset_load(opt.p1.c_str(), &raw_set));
    curveset_ptr c1(raw_set, ec_curveset_free);
    raw_set = nullptr;
    check(ec_curveset_load(opt.p2.c_str(), &raw_set));
    curveset_ptr c2(raw_set, ec_curveset_free);

    ec_result *raw = nullptr;
    check(ec_match_curves(c1.get(), c2.get(), config.get(), &raw));
    result_ptr result(raw, ec_result_free);
    return write_outputs(result.get(), opt);
}

int run_self_match(const Options &opt) {
    config_ptr config = build_config(opt);
    polygon_ptr p = load_polygon(opt.p1);

    ec_result *raw = nullptr;
    check(ec_match_self(p.get(), config.get(), &raw));
    result_ptr result(raw, ec_result_free);
    return write_outputs(result.get(), opt);
}

void add_common_options(CLI::App *cmd, Options &opt, bool two_inputs) {
    cmd->add_option("--p1", opt.p1, two_inputs ? "first input file"
                                               : "input file")
        ->required();
    if (two_inputs)
        cmd->add_option("--p2", opt.p2, "second input file")->required();
    cmd->add_option("--variant", opt.variant, "oriented | unoriented")
        ->check(CLI::IsMember({"oriented", "unoriented"}));
    cmd->add_option("--kernel-size", opt.kernel_size, "odd kernel size");
    cmd->add_option("--sigma", opt.sigma, "gaussian sigma");
    cmd->add_option("--peak-divisor", opt.peak_divisor,
                    "peak normalization divisor");
    cmd->add_flag("--exact-peak", opt.exact_peak,
                  "divide by the exact kernel center weight instead");
    cmd->add_option("--margin", opt.margin, "grid margin in cells");
    cmd->add_option("--out", opt.out_dir, "output directory");
    cmd->add_option("--emit", opt.emit,
                    "comma-separated outputs: report, fields_image, "
                    "smoothed_image, match_image, em_csv")
        ->delimiter(',');
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"flat-norm-motivated edge matching of polygons and curves"};
    app.set_version_flag("--version", ec_version());
    app.require_subcommand(1);

    Options match_opt, curve_opt, self_opt;

    CLI::App *match_cmd =
        app.add_subcommand("match", "match two polygons");
    add_common_options(match_cmd, match_opt, true);
    match_cmd->add_flag("--distance", match_opt.want_distance,
                        "also compute d = E11 + E22 - 2 E12");

    CLI::App *curve_cmd =
        app.add_subcommand("curve-match", "match two oriented curve sets");
    add_common_options(curve_cmd, curve_opt, true);

    CLI::App *self_cmd =
        app.add_subcommand("self", "self score E(P, P) of one polygon");
    add_common_options(self_cmd, self_opt, false);
    self_cmd->get_option("--p1")->description("polygon file");

    CLI11_PARSE(app, argc, argv);

    if (match_cmd->parsed())
        return run_polygon_match(match_opt);
    if (curve_cmd->parsed())
        return run_curve_match(curve_opt);
    return run_self_match(self_opt);
}
