// Serialization round trips and format spot checks: CSV, raw velocity
// storage with its JSON sidecar, the two VTK writers, and the SVG plotter.

#include <bit>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "euler/io.h"
#include "euler/rng.h"
#include "harness.h"

using namespace euler;

namespace {

testing::Recorder rec;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double big_endian_double(const char* p) {
    std::uint64_t v = 0;
    for (int b = 0; b < 8; ++b)
        v = (v << 8) | static_cast<unsigned char>(p[b]);
    return std::bit_cast<double>(v);
}

void test_csv() {
    CsvTable t;
    t.columns = {"iter", "residual", "norm"};
    t.rows = {{0.0, 1.25e-3, 7.0}, {1.0, -3.7e-11, 0.1}};
    write_csv("io_out/series.csv", t);
    CsvTable r = read_csv("io_out/series.csv");
    bool ok = r.columns == t.columns && r.rows.size() == 2;
    for (std::size_t i = 0; ok && i < 2; ++i)
        for (std::size_t c = 0; c < 3; ++c) ok = ok && r.rows[i][c] == t.rows[i][c];
    rec.record("csv round trip is exact", ok);

    write_csv("io_out/series.csv", t);
    std::string a = slurp("io_out/series.csv");
    write_csv("io_out/series2.csv", t);
    rec.record("csv output is deterministic", a == slurp("io_out/series2.csv"));
}

void test_raw_round_trip() {
    Grid3 g(8, 4, 9, 2.0, 1.0);
    TimeGrid tg(0.5, 3);
    SpaceTimeField u(g, tg);
    Rng rng(17);
    for (auto& s : u.slice)
        for (int c = 0; c < 3; ++c)
            for (double& v : s.comp(c)) v = rng.uniform(-10.0, 10.0);

    write_raw_velocity("io_out/run", u);
    SpaceTimeField r = read_raw_velocity("io_out/run");

    bool meta_ok = r.grid.same_as(g) && r.time.nt == 3 && r.time.T == 0.5;
    rec.record("raw sidecar restores grid and time axis", meta_ok);

    bool bits_ok = true;
    for (std::size_t m = 0; m < u.slice.size(); ++m)
        for (int c = 0; c < 3; ++c)
            bits_ok = bits_ok && u.slice[m].comp(c) == r.slice[m].comp(c);
    rec.record("raw velocity round trip is bit-exact", bits_ok);

    bool threw = false;
    try {
        read_raw_velocity("io_out/does_not_exist");
    } catch (const InputError&) {
        threw = true;
    }
    rec.record("missing sidecar rejected", threw);
}

void test_vtk_ascii() {
    Grid3 g(4, 4, 9, 1.0, 1.0);
    ScalarField3 f(g);
    for (std::size_t q = 0; q < g.size(); ++q) f.v[q] = 0.25 * q;
    write_vtk_scalar("io_out/field.vtk", f, "temp", false);

    std::string body = slurp("io_out/field.vtk");
    bool has = body.find("DATASET STRUCTURED_GRID") != std::string::npos &&
               body.find("DIMENSIONS 4 4 9") != std::string::npos &&
               body.find("POINTS 144 double") != std::string::npos &&
               body.find("SCALARS temp double 1") != std::string::npos;
    rec.record("ascii vtk scalar header", has);

    // Count data tokens after the lookup table line.
    std::size_t at = body.find("LOOKUP_TABLE default\n");
    std::stringstream ss(body.substr(at + 21));
    double v = 0.0, last = -1.0;
    std::size_t count = 0;
    while (ss >> v) {
        last = v;
        ++count;
    }
    rec.record("ascii vtk scalar data block",
               count == g.size() && last == 0.25 * (g.size() - 1));

    std::vector<Vec3> pts = {{0, 0, 0}, {0.5, 0.25, 1.0}};
    write_vtk_points("io_out/cloud.vtk", pts, false);
    std::string cloud = slurp("io_out/cloud.vtk");
    rec.record("ascii vtk point cloud",
               cloud.find("DATASET POLYDATA") != std::string::npos &&
                   cloud.find("POINTS 2 double") != std::string::npos &&
                   cloud.find("VERTICES 2 4") != std::string::npos);
}

void test_vtk_binary() {
    Grid3 g(4, 4, 9, 1.0, 1.0);
    VectorField3 v(g);
    Rng rng(4);
    for (int c = 0; c < 3; ++c)
        for (double& x : v.comp(c)) x = rng.uniform(-1.0, 1.0);
    write_vtk_vector("io_out/vel.vtk", v, "vel", true);

    std::string body = slurp("io_out/vel.vtk");
    rec.record("binary vtk declares BINARY",
               body.find("\nBINARY\n") != std::string::npos);

    std::size_t pts = body.find("POINTS 144 double\n");
    rec.record("binary vtk point block starts at the origin",
               pts != std::string::npos &&
                   big_endian_double(body.data() + pts + 18) == 0.0);

    std::size_t vec = body.find("VECTORS vel double\n");
    bool ok = vec != std::string::npos;
    if (ok) {
        const char* p = body.data() + vec + 19;
        ok = big_endian_double(p) == v.x[0] &&
             big_endian_double(p + 8) == v.y[0] &&
             big_endian_double(p + 16) == v.z[0];
    }
    rec.record("binary vtk vector block is big-endian exact", ok);

    std::size_t expect = vec + 19 + 3 * 8 * g.size();
    rec.record("binary vtk vector block has full extent", body.size() > expect);
}

void test_svg() {
    SvgPlot p;
    p.title = "convergence";
    p.xlabel = "h";
    p.ylabel = "error";
    p.logx = p.logy = true;
    p.series.push_back({"L2", {0.1, 0.05, 0.025}, {1e-2, 2.5e-3, 6.2e-4}});
    p.series.push_back({"max", {0.1, 0.05, 0.025}, {0.0, 5e-3, 1.3e-3}});
    write_svg_plot("io_out/plot.svg", p);
    std::string svg = slurp("io_out/plot.svg");
    rec.record("svg plot structure",
               svg.rfind("<svg", 0) == 0 &&
                   svg.find("polyline") != std::string::npos &&
                   svg.find("</svg>") != std::string::npos &&
                   svg.find("convergence") != std::string::npos);
    // The zero value under a log axis is dropped, not NaN-ed.
    rec.record("svg log axis skips nonpositive points",
               svg.find("nan") == std::string::npos);
}

} // namespace

int main() {
    std::filesystem::create_directories("io_out");
    test_csv();
    test_raw_round_trip();
    test_vtk_ascii();
    test_vtk_binary();
    test_svg();
    return rec.finish("test_io");
}
