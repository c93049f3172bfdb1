#ifndef EULER_FIELDS_H
#define EULER_FIELDS_H

#include <array>

#include "euler/fft.h"
#include "euler/grid.h"
#include "euler/vec3.h"

namespace euler {

// 3x3 tensor field, comp[3*i + j] = (i,j) entry, convention
// (grad u)_{ij} = d u_i / d x_j.
struct TensorField3 {
    Grid3 grid;
    std::array<std::vector<double>, 9> comp;

    TensorField3() = default;
    explicit TensorField3(const Grid3& g) : grid(g) {
        for (auto& c : comp) c.assign(g.size(), 0.0);
    }
    Mat3 at(std::size_t q) const {
        Mat3 m;
        for (int e = 0; e < 9; ++e) m.a[e] = comp[e][q];
        return m;
    }
};

// z-derivative: centered second order inside, one-sided second order at the
// walls (node-centered grid includes both walls).
ScalarField3 ddz_fd(const ScalarField3& f);

// Volume operators: spectral in the periodic plane, ddz_fd in z.
ScalarField3 divergence(const VectorField3& v);
VectorField3 curl3(const VectorField3& v);
VectorField3 grad_scalar(const ScalarField3& f);
TensorField3 grad_tensor(const VectorField3& v);

// Trapezoid in z, rectangle in the periodic plane.
double volume_integral(const ScalarField3& f);
double volume_mean(const ScalarField3& f);
double max_abs(const ScalarField3& f);
double max_abs(const VectorField3& f);

// Largest max-row-sum of grad v over the grid (discrete sup of |grad v|).
double grad_sup_norm(const VectorField3& v);

// --- interpolation ---------------------------------------------------------

// Cubic Lagrange stencil along one axis: 4 node weights (and weights of the
// interpolant's derivative), plus the first node index. Periodic axes wrap;
// the z stencil shifts one-sided near the walls and the query is clamped to
// [0,1].
struct CubicAxis {
    int base = 0;
    std::array<double, 4> w{}, dw{};
};

CubicAxis cubic_axis_periodic(double coord, int n, double h);
CubicAxis cubic_axis_bounded(double z, int n3, double h);

double sample(const ScalarField3& f, const Vec3& p);
Vec3 sample(const VectorField3& f, const Vec3& p);
// Fused value + interpolant gradient (one 64-node gather per component).
void sample_with_gradient(const VectorField3& f, const Vec3& p, Vec3* value,
                          Mat3* grad);

// Cubic-Hermite-in-time view of a space-time field. Slopes come from the
// derivative of the cubic fit through the four nearest slices, so the
// interpolant reproduces cubics in t exactly and is C^1 across slices.
// Queries clamp t to [0, T]; the range-checked entry point is interpolate().
class TimeInterpolant {
public:
    explicit TimeInterpolant(const SpaceTimeField& f);

    // Collapse to one spatial field at time t (Hermite combination of the
    // bracketing slices and slopes).
    VectorField3 at_time(double t) const;
    Vec3 sample(double t, const Vec3& p) const;
    // Value and spatial gradient of the interpolant at (t, p).
    void sample_with_gradient(double t, const Vec3& p, Vec3* value,
                              Mat3* grad) const;

    const SpaceTimeField& field() const { return *f_; }

private:
    const SpaceTimeField* f_;
    SpaceTimeField slopes_;

    void weights(double t, int* m, double* w) const; // w[4]: fm, dm, fm1, dm1
};

// Range-checked space-time interpolation (throws std::out_of_range for t
// outside [0, T]). Builds a TimeInterpolant per call; hot paths should hold
// their own.
Vec3 interpolate(const SpaceTimeField& f, double t, const Vec3& x);

// --- slice time derivatives ------------------------------------------------

// d/dt at slice m by centered differences (one-sided second order at the
// first and last slice).
VectorField3 time_derivative_slice(const SpaceTimeField& f, int m);
std::vector<double> time_derivative_series(const std::vector<double>& samples,
                                           double dt);

} // namespace euler

#endif
