#include "euler/io.h"

#include <bit>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#elif __has_include("json.hpp")
#include "json.hpp"
#else
#error "Cannot find nlohmann/json.hpp header."
#endif

#include "euler/error.h"

namespace euler {

namespace {

using nlohmann::json;

std::ofstream open_out(const std::string& path, bool binary) {
    std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
    if (!out) throw InputError("cannot open for writing: " + path);
    return out;
}

std::uint64_t byteswap64(std::uint64_t v) {
    std::uint64_t r = 0;
    for (int b = 0; b < 8; ++b) r = (r << 8) | ((v >> (8 * b)) & 0xffu);
    return r;
}

// VTK legacy binary blocks are big-endian.
void put_big_endian(std::ostream& out, const double* vals, std::size_t n) {
    std::vector<std::uint64_t> buf(n);
    for (std::size_t q = 0; q < n; ++q) {
        std::uint64_t bits = std::bit_cast<std::uint64_t>(vals[q]);
        buf[q] = std::endian::native == std::endian::big ? bits : byteswap64(bits);
    }
    out.write(reinterpret_cast<const char*>(buf.data()),
              static_cast<std::streamsize>(n * sizeof(std::uint64_t)));
}

void put_ascii(std::ostream& out, const double* vals, std::size_t n,
               int per_line) {
    char tmp[32];
    for (std::size_t q = 0; q < n; ++q) {
        std::snprintf(tmp, sizeof tmp, "%.17g", vals[q]);
        out << tmp << ((q % per_line == per_line - 1 || q + 1 == n) ? '\n' : ' ');
    }
}

void vtk_header(std::ostream& out, const std::string& title, bool binary) {
    out << "# vtk DataFile Version 3.0\n"
        << title << '\n'
        << (binary ? "BINARY" : "ASCII") << '\n';
}

void vtk_structured_points(std::ostream& out, const Grid3& g, bool binary) {
    out << "DATASET STRUCTURED_GRID\n"
        << "DIMENSIONS " << g.n1 << ' ' << g.n2 << ' ' << g.n3 << '\n'
        << "POINTS " << g.size() << " double\n";
    std::vector<double> pts;
    pts.reserve(3 * g.plane_size());
    for (int k = 0; k < g.n3; ++k) {
        pts.clear();
        for (int j = 0; j < g.n2; ++j)
            for (int i = 0; i < g.n1; ++i) {
                pts.push_back(g.x(i));
                pts.push_back(g.y(j));
                pts.push_back(g.z(k));
            }
        if (binary)
            put_big_endian(out, pts.data(), pts.size());
        else
            put_ascii(out, pts.data(), pts.size(), 3);
    }
    if (binary) out << '\n';
    out << "POINT_DATA " << g.size() << '\n';
}

} // namespace

void write_vtk_scalar(const std::string& path, const ScalarField3& f,
                      const std::string& name, bool binary) {
    std::ofstream out = open_out(path, true);
    vtk_header(out, name, binary);
    vtk_structured_points(out, f.grid, binary);
    out << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
    if (binary) {
        put_big_endian(out, f.v.data(), f.v.size());
        out << '\n';
    } else {
        put_ascii(out, f.v.data(), f.v.size(), 6);
    }
    if (!out) throw InputError("write failed: " + path);
}

void write_vtk_vector(const std::string& path, const VectorField3& v,
                      const std::string& name, bool binary) {
    std::ofstream out = open_out(path, true);
    vtk_header(out, name, binary);
    vtk_structured_points(out, v.grid, binary);
    out << "VECTORS " << name << " double\n";
    std::vector<double> row(3 * v.grid.plane_size());
    std::size_t pl = v.grid.plane_size();
    for (int k = 0; k < v.grid.n3; ++k) {
        for (std::size_t q = 0; q < pl; ++q) {
            std::size_t g = k * pl + q;
            row[3 * q + 0] = v.x[g];
            row[3 * q + 1] = v.y[g];
            row[3 * q + 2] = v.z[g];
        }
        if (binary)
            put_big_endian(out, row.data(), row.size());
        else
            put_ascii(out, row.data(), row.size(), 3);
    }
    if (binary) out << '\n';
    if (!out) throw InputError("write failed: " + path);
}

void write_vtk_points(const std::string& path, const std::vector<Vec3>& pts,
                      bool binary) {
    std::ofstream out = open_out(path, true);
    vtk_header(out, "points", binary);
    out << "DATASET POLYDATA\nPOINTS " << pts.size() << " double\n";
    std::vector<double> flat(3 * pts.size());
    for (std::size_t q = 0; q < pts.size(); ++q) {
        flat[3 * q + 0] = pts[q].x;
        flat[3 * q + 1] = pts[q].y;
        flat[3 * q + 2] = pts[q].z;
    }
    if (binary) {
        put_big_endian(out, flat.data(), flat.size());
        out << '\n';
    } else {
        put_ascii(out, flat.data(), flat.size(), 3);
    }
    out << "VERTICES " << pts.size() << ' ' << 2 * pts.size() << '\n';
    for (std::size_t q = 0; q < pts.size(); ++q) {
        if (binary) {
            std::int32_t rec[2] = {1, static_cast<std::int32_t>(q)};
            for (std::int32_t w : rec) {
                std::uint32_t bits = std::bit_cast<std::uint32_t>(w);
                if (std::endian::native != std::endian::big)
                    bits = ((bits & 0xff) << 24) | ((bits & 0xff00) << 8) |
                           ((bits >> 8) & 0xff00) | (bits >> 24);
                out.write(reinterpret_cast<const char*>(&bits), 4);
            }
        } else {
            out << "1 " << q << '\n';
        }
    }
    if (!out) throw InputError("write failed: " + path);
}

void write_raw_velocity(const std::string& path_prefix, const SpaceTimeField& u) {
    const Grid3& g = u.grid;
    {
        std::ofstream bin = open_out(path_prefix + ".bin", true);
        for (const VectorField3& s : u.slice)
            for (int c = 0; c < 3; ++c) {
                const std::vector<double>& comp = s.comp(c);
                if (std::endian::native == std::endian::little) {
                    bin.write(reinterpret_cast<const char*>(comp.data()),
                              static_cast<std::streamsize>(comp.size() *
                                                           sizeof(double)));
                } else {
                    std::vector<std::uint64_t> buf(comp.size());
                    for (std::size_t q = 0; q < comp.size(); ++q)
                        buf[q] = byteswap64(std::bit_cast<std::uint64_t>(comp[q]));
                    bin.write(reinterpret_cast<const char*>(buf.data()),
                              static_cast<std::streamsize>(buf.size() * 8));
                }
            }
        if (!bin) throw InputError("write failed: " + path_prefix + ".bin");
    }
    json meta;
    meta["format"] = "euler-raw-velocity";
    meta["version"] = 1;
    meta["endianness"] = "little";
    meta["n1"] = g.n1;
    meta["n2"] = g.n2;
    meta["n3"] = g.n3;
    meta["L1"] = g.L1;
    meta["L2"] = g.L2;
    meta["T"] = u.time.T;
    meta["nt"] = u.time.nt;
    meta["layout"] = "slices 0..nt, per slice the x, y, z component blocks, "
                     "each indexed i + n1*(j + n2*k)";
    std::ofstream side = open_out(path_prefix + ".json", false);
    side << meta.dump(2) << '\n';
    if (!side) throw InputError("write failed: " + path_prefix + ".json");
}

SpaceTimeField read_raw_velocity(const std::string& path_prefix) {
    std::ifstream side(path_prefix + ".json");
    if (!side) throw InputError("cannot open sidecar: " + path_prefix + ".json");
    json meta;
    try {
        side >> meta;
    } catch (const json::exception& e) {
        throw InputError("bad sidecar " + path_prefix + ".json: " + e.what());
    }
    if (meta.value("format", "") != "euler-raw-velocity" ||
        meta.value("version", 0) != 1 || meta.value("endianness", "") != "little")
        throw InputError("unsupported raw velocity sidecar: " + path_prefix);

    SpaceTimeField u;
    try {
        Grid3 g(meta.at("n1").get<int>(), meta.at("n2").get<int>(),
                meta.at("n3").get<int>(), meta.at("L1").get<double>(),
                meta.at("L2").get<double>());
        TimeGrid tg(meta.at("T").get<double>(), meta.at("nt").get<int>());
        u = SpaceTimeField(g, tg);
    } catch (const std::exception& e) {
        throw InputError("bad sidecar " + path_prefix + ".json: " + e.what());
    }

    std::ifstream bin(path_prefix + ".bin", std::ios::binary);
    if (!bin) throw InputError("cannot open data: " + path_prefix + ".bin");
    for (VectorField3& s : u.slice)
        for (int c = 0; c < 3; ++c) {
            std::vector<double>& comp = s.comp(c);
            bin.read(reinterpret_cast<char*>(comp.data()),
                     static_cast<std::streamsize>(comp.size() * sizeof(double)));
            if (bin.gcount() !=
                static_cast<std::streamsize>(comp.size() * sizeof(double)))
                throw InputError("raw data truncated: " + path_prefix + ".bin");
            if (std::endian::native != std::endian::little)
                for (double& d : comp)
                    d = std::bit_cast<double>(
                        byteswap64(std::bit_cast<std::uint64_t>(d)));
        }
    return u;
}

void write_csv(const std::string& path, const CsvTable& table) {
    std::ofstream out = open_out(path, false);
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        out << table.columns[c] << (c + 1 < table.columns.size() ? ',' : '\n');
    char tmp[32];
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size())
            throw InputError("csv row width mismatch: " + path);
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::snprintf(tmp, sizeof tmp, "%.17g", row[c]);
            out << tmp << (c + 1 < row.size() ? ',' : '\n');
        }
    }
    if (!out) throw InputError("write failed: " + path);
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open csv: " + path);
    CsvTable t;
    std::string line;
    if (!std::getline(in, line)) throw InputError("empty csv: " + path);
    std::stringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) t.columns.push_back(cell);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ls(line);
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        if (row.size() != t.columns.size())
            throw InputError("csv row width mismatch: " + path);
        t.rows.push_back(std::move(row));
    }
    return t;
}

namespace {

struct PlotFrame {
    double x0, x1, y0, y1;            // data range (after log transform)
    double px0, px1, py0, py1;        // pixel box
    double sx(double x) const { return px0 + (x - x0) / (x1 - x0) * (px1 - px0); }
    double sy(double y) const { return py1 - (y - y0) / (y1 - y0) * (py1 - py0); }
};

const char* kPalette[] = {"#1f6fb2", "#c23b22", "#2e8b57", "#8a2be2",
                          "#b8860b", "#444444"};

} // namespace

void write_svg_plot(const std::string& path, const SvgPlot& plot) {
    auto tx = [&](double v) { return plot.logx ? std::log10(v) : v; };
    auto ty = [&](double v) { return plot.logy ? std::log10(v) : v; };
    auto usable = [&](double x, double y) {
        return (!plot.logx || x > 0.0) && (!plot.logy || y > 0.0);
    };

    PlotFrame fr{1e300, -1e300, 1e300, -1e300, 70.0, 690.0, 40.0, 420.0};
    for (const SvgSeries& s : plot.series)
        for (std::size_t q = 0; q < s.x.size() && q < s.y.size(); ++q)
            if (usable(s.x[q], s.y[q])) {
                fr.x0 = std::min(fr.x0, tx(s.x[q]));
                fr.x1 = std::max(fr.x1, tx(s.x[q]));
                fr.y0 = std::min(fr.y0, ty(s.y[q]));
                fr.y1 = std::max(fr.y1, ty(s.y[q]));
            }
    if (fr.x0 > fr.x1) {
        fr.x0 = 0.0;
        fr.x1 = 1.0;
    }
    if (fr.y0 > fr.y1) {
        fr.y0 = 0.0;
        fr.y1 = 1.0;
    }
    if (fr.x1 - fr.x0 < 1e-12) {
        fr.x0 -= 0.5;
        fr.x1 += 0.5;
    }
    if (fr.y1 - fr.y0 < 1e-12) {
        fr.y0 -= 0.5;
        fr.y1 += 0.5;
    }

    std::ofstream out = open_out(path, false);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 720 480\" "
           "font-family=\"sans-serif\" font-size=\"12\">\n"
        << "<rect width=\"720\" height=\"480\" fill=\"white\"/>\n"
        << "<text x=\"360\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
        << plot.title << "</text>\n";

    // Axes with five ticks per side.
    out << "<rect x=\"70\" y=\"40\" width=\"620\" height=\"380\" fill=\"none\" "
           "stroke=\"#999\"/>\n";
    char buf[160];
    for (int t = 0; t <= 5; ++t) {
        double fx = fr.x0 + (fr.x1 - fr.x0) * t / 5.0;
        double fy = fr.y0 + (fr.y1 - fr.y0) * t / 5.0;
        double vx = plot.logx ? std::pow(10.0, fx) : fx;
        double vy = plot.logy ? std::pow(10.0, fy) : fy;
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%.1f\" y=\"436\" text-anchor=\"middle\">%.3g"
                      "</text>\n",
                      fr.sx(fx), vx);
        out << buf;
        std::snprintf(buf, sizeof buf,
                      "<text x=\"64\" y=\"%.1f\" text-anchor=\"end\">%.3g"
                      "</text>\n",
                      fr.sy(fy) + 4.0, vy);
        out << buf;
    }
    out << "<text x=\"380\" y=\"464\" text-anchor=\"middle\">" << plot.xlabel
        << "</text>\n"
        << "<text x=\"16\" y=\"230\" text-anchor=\"middle\" "
           "transform=\"rotate(-90 16 230)\">"
        << plot.ylabel << "</text>\n";

    int color = 0;
    for (const SvgSeries& s : plot.series) {
        const char* stroke = kPalette[color % 6];
        out << "<polyline fill=\"none\" stroke=\"" << stroke
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t q = 0; q < s.x.size() && q < s.y.size(); ++q) {
            if (!usable(s.x[q], s.y[q])) continue;
            std::snprintf(buf, sizeof buf, "%.1f,%.1f ", fr.sx(tx(s.x[q])),
                          fr.sy(ty(s.y[q])));
            out << buf;
        }
        out << "\"/>\n";
        std::snprintf(buf, sizeof buf,
                      "<text x=\"676\" y=\"%d\" text-anchor=\"end\" "
                      "fill=\"%s\">%s</text>\n",
                      58 + 16 * color, stroke, s.label.c_str());
        out << buf;
        ++color;
    }
    out << "</svg>\n";
    if (!out) throw InputError("write failed: " + path);
}

} // namespace euler
