// Behavioural tests of the command-line tool; each case shells out to the
// built binary.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunOutput {
    int exit_code = -1;
    std::string out;
    std::string err;
};

fs::path temp_dir() {
    fs::path dir = fs::temp_directory_path() / "edgecurrent_cli_tests";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunOutput run_cli(const std::string &args) {
    fs::path dir = temp_dir();
    fs::path out_file = dir / "stdout.txt";
    fs::path err_file = dir / "stderr.txt";
    std::string cmd = std::string(CLI_BIN_PATH) + " " + args + " > " +
                      out_file.string() + " 2> " + err_file.string();
    int raw = std::system(cmd.c_str());
    RunOutput result;
    result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    result.out = slurp(out_file);
    result.err = slurp(err_file);
    return result;
}

std::string fixture(const char *name) {
    return (fs::path(FIXTURES_DIR) / name).string();
}

fs::path fresh_out_dir(const char *name) {
    fs::path dir = temp_dir() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("match prints the score and writes a report") {
    fs::path out = fresh_out_dir("match_basic");
    RunOutput r = run_cli("match --p1 " + fixture("p1.csv") + " --p2 " +
                          fixture("p2.csv") + " --out " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 6) == "score=");
    // 12 significant digits
    CHECK(r.out == "score=625.813045825\n");
    CHECK(fs::exists(out / "report.json"));
    CHECK(slurp(out / "report.json").find("\"score\"") != std::string::npos);
}

TEST_CASE("self score of one polygon") {
    fs::path out = fresh_out_dir("self");
    RunOutput r = run_cli("self --p1 " + fixture("p1.csv") + " --out " +
                          out.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 6) == "score=");
    CHECK(fs::exists(out / "report.json"));
}

TEST_CASE("distance of a polygon with itself is zero") {
    fs::path out = fresh_out_dir("distance_self");
    RunOutput r = run_cli("match --p1 " + fixture("p1.csv") + " --p2 " +
                          fixture("p1.csv") + " --distance --out " +
                          out.string());
    CHECK(r.exit_code == 0);
    std::string report = slurp(out / "report.json");
    CHECK(report.find("\"d\": 0.0") != std::string::npos);
}

TEST_CASE("disjoint far-apart squares score zero") {
    fs::path dir = temp_dir();
    fs::path a = dir / "near.csv";
    fs::path b = dir / "far.csv";
    {
        std::ofstream out(a);
        out << "1,1\n2,1\n2,2\n1,2\n";
    }
    {
        std::ofstream out(b);
        out << "12,12\n13,12\n13,13\n12,13\n";
    }
    fs::path out = fresh_out_dir("far");
    RunOutput r = run_cli("match --p1 " + a.string() + " --p2 " + b.string() +
                          " --out " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out == "score=0\n");
}

TEST_CASE("requested artifacts are emitted") {
    fs::path out = fresh_out_dir("emit_all");
    RunOutput r = run_cli(
        "match --p1 " + fixture("p1.csv") + " --p2 " + fixture("p2.csv") +
        " --out " + out.string() +
        " --emit report,fields_image,smoothed_image,match_image,em_csv");
    CHECK(r.exit_code == 0);
    for (const char *name : {"report.json", "fields.pgm", "smoothed.pgm",
                             "match.pgm", "em.csv"})
        CHECK(fs::exists(out / name));
}

TEST_CASE("unreadable input exits with status 2") {
    RunOutput r = run_cli("match --p1 /no/such/file.csv --p2 " +
                          fixture("p2.csv"));
    CHECK(r.exit_code == 2);
    CHECK(!r.err.empty());
}

TEST_CASE("malformed vertex line is named in the diagnostic") {
    fs::path dir = temp_dir();
    fs::path bad = dir / "broken.csv";
    {
        std::ofstream out(bad);
        out << "1,1\nnot-a-vertex\n2,2\n";
    }
    RunOutput r = run_cli("match --p1 " + bad.string() + " --p2 " +
                          fixture("p2.csv"));
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("broken.csv:2") != std::string::npos);
}

TEST_CASE("self-intersecting polygon exits with status 2") {
    fs::path dir = temp_dir();
    fs::path bowtie = dir / "bowtie.csv";
    {
        std::ofstream out(bowtie);
        out << "1,1\n4,4\n4,1\n1,4\n";
    }
    RunOutput r = run_cli("match --p1 " + bowtie.string() + " --p2 " +
                          fixture("p2.csv"));
    CHECK(r.exit_code == 2);
}

TEST_CASE("configuration violations exit with status 3") {
    std::string base = "match --p1 " + fixture("p1.csv") + " --p2 " +
                       fixture("p2.csv");
    CHECK(run_cli(base + " --kernel-size 4").exit_code == 3);
    CHECK(run_cli(base + " --margin 2").exit_code == 3);
    CHECK(run_cli(base + " --emit report,bogus").exit_code == 3);
    CHECK(run_cli("curve-match --p1 a.json --p2 b.json --distance")
              .exit_code != 0); // unknown flag for this subcommand
}

TEST_CASE("curve match runs from json input") {
    fs::path dir = temp_dir();
    fs::path curves = dir / "segment.json";
    {
        std::ofstream out(curves);
        out << R"({"curves": [{"vertices": [[5,2],[5,9]], "closed": false}]})";
    }
    fs::path out = fresh_out_dir("curves");
    RunOutput r = run_cli("curve-match --p1 " + curves.string() + " --p2 " +
                          curves.string() + " --out " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 6) == "score=");
    CHECK(r.out != "score=0\n");
}

TEST_CASE("exact peak normalization shifts the score slightly") {
    fs::path out1 = fresh_out_dir("peak_literal");
    fs::path out2 = fresh_out_dir("peak_exact");
    std::string base = "match --p1 " + fixture("p1.csv") + " --p2 " +
                       fixture("p2.csv") + " --out ";
    RunOutput literal = run_cli(base + out1.string());
    RunOutput exact = run_cli(base + out2.string() + " --exact-peak");
    CHECK(literal.exit_code == 0);
    CHECK(exact.exit_code == 0);
    CHECK(literal.out != exact.out);
    CHECK(exact.out.substr(0, 10) == "score=625."); // ~3.5e-5 relative shift
}

TEST_CASE("unoriented variant is selectable") {
    fs::path out = fresh_out_dir("unoriented");
    RunOutput r = run_cli("match --p1 " + fixture("p1.csv") + " --p2 " +
                          fixture("p2.csv") + " --variant unoriented --out " +
                          out.string());
    CHECK(r.exit_code == 0);
    CHECK(slurp(out / "report.json").find("\"variant\": \"unoriented\"") !=
          std::string::npos);
}

TEST_CASE("match sheet reproduces the locked golden image") {
    fs::path out = fresh_out_dir("golden");
    RunOutput r = run_cli("match --p1 " + fixture("p1.csv") + " --p2 " +
                          fixture("p2.csv") + " --emit match_image --out " +
                          out.string());
    REQUIRE(r.exit_code == 0);
    std::string rendered = slurp(out / "match.pgm");
    std::string golden = slurp(fs::path(FIXTURES_DIR) / "golden/match.pgm");
    REQUIRE(!golden.empty());
    CHECK(rendered == golden);

    // the em panel shows the two dots and the matched protrusion strip while
    // the abutting opposite-type edge segment stays dark
    auto newline = rendered.find('\n');
    auto dims_end = rendered.find('\n', newline + 1);
    std::istringstream dims(rendered.substr(newline + 1, dims_end - newline));
    int width = 0, height = 0;
    dims >> width >> height;
    REQUIRE(width == 5 * 60 + 4 * 2);
    REQUIRE(height == 55);
    size_t start = rendered.find("255\n") + 4;
    auto pixel = [&](int row, int col) { // 1-based panel coordinates
        int x = 4 * 62 + (col - 1);      // fifth panel
        return static_cast<unsigned char>(
            rendered[start + static_cast<size_t>(row - 1) * width + x]);
    };
    auto window_max = [&](int r1, int r2, int c1, int c2) {
        int best = 0;
        for (int i = r1; i <= r2; ++i)
            for (int j = c1; j <= c2; ++j)
                best = std::max<int>(best, pixel(i, j));
        return best;
    };
    CHECK(window_max(26, 33, 13, 16) == 0); // shared edge does not match
    CHECK(window_max(28, 31, 8, 12) > 0);   // first dot
    CHECK(window_max(27, 31, 18, 22) > 0);  // second dot
    CHECK(window_max(25, 28, 33, 57) > 0);  // protrusion strip
}

TEST_CASE("repeated runs are byte-identical") {
    fs::path out1 = fresh_out_dir("det_a");
    fs::path out2 = fresh_out_dir("det_b");
    std::string emit =
        " --emit report,fields_image,smoothed_image,match_image,em_csv";
    std::string base = "match --p1 " + fixture("p1.csv") + " --p2 " +
                       fixture("p2.csv") + emit + " --out ";
    REQUIRE(run_cli(base + out1.string()).exit_code == 0);
    REQUIRE(run_cli(base + out2.string()).exit_code == 0);
    for (const char *name : {"report.json", "fields.pgm", "smoothed.pgm",
                             "match.pgm", "em.csv"})
        CHECK(slurp(out1 / name) == slurp(out2 / name));
}
