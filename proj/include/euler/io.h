#ifndef EULER_IO_H
#define EULER_IO_H

#include <string>
#include <vector>

#include "euler/grid.h"
#include "euler/vec3.h"

namespace euler {

// VTK legacy structured-grid writers (ASCII or big-endian binary), one field
// per file.
void write_vtk_scalar(const std::string& path, const ScalarField3& f,
                      const std::string& name, bool binary = false);
void write_vtk_vector(const std::string& path, const VectorField3& v,
                      const std::string& name, bool binary = false);
// Point cloud (polydata with vertices); used for hypersurface dumps.
void write_vtk_points(const std::string& path, const std::vector<Vec3>& pts,
                      bool binary = false);

// Raw storage: little-endian f64 component blocks plus a JSON sidecar
// (<path>.json next to <path>.bin) describing grid, time axis and layout.
// This is the format the verify command reloads.
void write_raw_velocity(const std::string& path_prefix, const SpaceTimeField& u);
SpaceTimeField read_raw_velocity(const std::string& path_prefix);

struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

void write_csv(const std::string& path, const CsvTable& table);
CsvTable read_csv(const std::string& path);

// Minimal SVG line plots for the convergence and diagnostic commands.
struct SvgSeries {
    std::string label;
    std::vector<double> x, y;
};

struct SvgPlot {
    std::string title, xlabel, ylabel;
    bool logx = false, logy = false;
    std::vector<SvgSeries> series;
};

void write_svg_plot(const std::string& path, const SvgPlot& plot);

} // namespace euler

#endif
