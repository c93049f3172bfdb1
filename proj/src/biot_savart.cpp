#include "euler/biot_savart.h"

#include <algorithm>
#include <cmath>

#include "euler/channel.h"
#include "euler/error.h"
#include "euler/poisson.h"

namespace euler {

namespace {

// z-derivative of a one-mode profile with the same stencil as ddz_fd, so
// the algebraic construction below cancels against the volume divergence
// operator exactly.
void dz_profile(const std::vector<cplx>& f, double h, std::vector<cplx>& out) {
    const int n = static_cast<int>(f.size());
    out.resize(n);
    const double ih = 1.0 / (2.0 * h);
    out[0] = ih * (-3.0 * f[0] + 4.0 * f[1] - f[2]);
    for (int k = 1; k < n - 1; ++k) out[k] = ih * (f[k + 1] - f[k - 1]);
    out[n - 1] = ih * (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]);
}

// Cumulative trapezoid from z = 0, then the trapezoid mean is removed so
// the profile carries no harmonic content.
void cumtrapz_meanfree(const std::vector<cplx>& f, double h,
                       std::vector<cplx>& out) {
    const int n = static_cast<int>(f.size());
    out.resize(n);
    out[0] = 0.0;
    for (int k = 1; k < n; ++k)
        out[k] = out[k - 1] + 0.5 * h * (f[k - 1] + f[k]);
    cplx mean = 0.5 * (out[0] + out[n - 1]);
    for (int k = 1; k < n - 1; ++k) mean += out[k];
    mean *= h; // z extent is 1
    for (int k = 0; k < n; ++k) out[k] -= mean;
}

ScalarField3 component_field(const Grid3& g, const std::vector<double>& v) {
    ScalarField3 f(g);
    f.v = v;
    return f;
}

double wall_flux(const VectorField3& w, Wall side) {
    const Grid3& g = w.grid;
    const std::size_t pl = g.plane_size();
    const double* plane =
        w.z.data() + static_cast<std::size_t>(wall_k(g, side)) * pl;
    double s = 0.0;
    for (std::size_t q = 0; q < pl; ++q) s += plane[q];
    s *= g.h1() * g.h2();
    return side == Wall::Plus ? s : -s; // outward normal is -e_z below
}

} // namespace

double CurlRangeDefect::worst() const {
    return std::max({div_inf, std::fabs(flux_plus), std::fabs(flux_minus)});
}

CurlRangeDefect curl_range_defect(const VectorField3& omega) {
    CurlRangeDefect d;
    d.div_inf = max_abs(divergence(omega));
    d.flux_plus = wall_flux(omega, Wall::Plus);
    d.flux_minus = wall_flux(omega, Wall::Minus);
    return d;
}

VectorField3 biot_savart(const VectorField3& omega, double range_tol) {
    const Grid3& g = omega.grid;
    if (curl_range_defect(omega).worst() > range_tol)
        throw InputError("vorticity is outside the discrete range of the curl");

    const int n1 = g.n1, n2 = g.n2, n3 = g.n3;
    const double h = g.h3();
    const std::size_t pl = g.plane_size();

    std::vector<cplx> m1 = fft_planes_forward(component_field(g, omega.x));
    std::vector<cplx> m2 = fft_planes_forward(component_field(g, omega.y));
    std::vector<cplx> m3 = fft_planes_forward(component_field(g, omega.z));
    PlaneFFT fft(n1, n2, g.L1, g.L2);

    std::vector<cplx> o1(n3), o2(n3), o3(n3), v1(n3), v2(n3), v3(n3), rhs(n3),
        dv3(n3);
    for (int q2 = 0; q2 < n2; ++q2) {
        for (int q1 = 0; q1 < n1; ++q1) {
            const std::size_t qp = static_cast<std::size_t>(q2) * n1 + q1;
            const double k1 = fft.k1_deriv(q1), k2 = fft.k2_deriv(q2);
            const double kap2 = k1 * k1 + k2 * k2;
            for (int k = 0; k < n3; ++k) {
                const std::size_t at = static_cast<std::size_t>(k) * pl + qp;
                o1[k] = m1[at];
                o2[k] = m2[at];
                o3[k] = m3[at];
            }

            if (q1 == 0 && q2 == 0) {
                // Horizontal means: dz v1 = o2, dz v2 = -o1, v3 = 0.
                cumtrapz_meanfree(o2, h, v1);
                cumtrapz_meanfree(o1, h, v2);
                for (int k = 0; k < n3; ++k) {
                    v2[k] = -v2[k];
                    v3[k] = 0.0;
                }
            } else if (kap2 == 0.0) {
                // Nyquist lines sit outside the range of the derivative
                // multipliers; their content cannot influence any resolved
                // derivative, so the mode is dropped.
                std::fill(v1.begin(), v1.end(), cplx(0.0));
                std::fill(v2.begin(), v2.end(), cplx(0.0));
                std::fill(v3.begin(), v3.end(), cplx(0.0));
            } else {
                // curl curl v = -lap v for solenoidal v, so the vertical
                // component solves (D^2 - kap^2) v3 = -(curl w)_3.
                const cplx i(0.0, 1.0);
                for (int k = 0; k < n3; ++k)
                    rhs[k] = i * k2 * o1[k] - i * k1 * o2[k];
                helmholtz_dirichlet_mode(n3, h, kap2, rhs.data(), cplx(0.0),
                                         cplx(0.0), v3.data());
                dz_profile(v3, h, dv3);
                for (int k = 0; k < n3; ++k) {
                    v1[k] = (i * k1 * dv3[k] + i * k2 * o3[k]) / kap2;
                    v2[k] = (i * k2 * dv3[k] - i * k1 * o3[k]) / kap2;
                }
            }

            for (int k = 0; k < n3; ++k) {
                const std::size_t at = static_cast<std::size_t>(k) * pl + qp;
                m1[at] = v1[k];
                m2[at] = v2[k];
                m3[at] = v3[k];
            }
        }
    }

    VectorField3 out(g);
    out.x = fft_planes_inverse(g, m1).v;
    out.y = fft_planes_inverse(g, m2).v;
    out.z = fft_planes_inverse(g, m3).v;
    return out;
}

VectorField3 recover_velocity(const VectorField3& omega, const Background& bg,
                              double t, const HarmonicComponent& hc,
                              double range_tol) {
    VectorField3 u = biot_savart(omega, range_tol);
    const Vec3 U = bg.value(t);
    for (std::size_t q = 0; q < u.grid.size(); ++q) {
        u.x[q] += U.x + hc.c1;
        u.y[q] += U.y + hc.c2;
        u.z[q] += U.z;
    }
    return u;
}

VectorField3 project_h(const VectorField3& w) {
    const Grid3& g = w.grid;
    ScalarField3 src = divergence(w);
    WallData data = zero_wall_data(g);
    const std::size_t pl = g.plane_size();
    for (std::size_t q = 0; q < pl; ++q) {
        data.bottom[q] = -w.z[q];
        data.top[q] = w.z[static_cast<std::size_t>(g.n3 - 1) * pl + q];
    }
    ScalarField3 phi = solve_neumann_poisson(src, data);
    VectorField3 grad = grad_scalar(phi);
    VectorField3 out(g);
    for (std::size_t q = 0; q < g.size(); ++q) {
        out.x[q] = w.x[q] - grad.x[q];
        out.y[q] = w.y[q] - grad.y[q];
        out.z[q] = w.z[q] - grad.z[q];
    }
    return out;
}

HarmonicComponent horizontal_mean(const VectorField3& w) {
    return {volume_mean(component_field(w.grid, w.x)),
            volume_mean(component_field(w.grid, w.y))};
}

namespace {

// P_{H_c} f - P_{H_c} P_H(Omega u) for one slice.
HarmonicComponent slice_rate(const VectorField3& f, const VectorField3& omega,
                             const VectorField3& u, double range_tol) {
    const Grid3& g = f.grid;
    VectorField3 v0 = biot_savart(omega, range_tol);
    TensorField3 T = grad_tensor(v0);
    VectorField3 Ou(g);
    for (std::size_t q = 0; q < g.size(); ++q) {
        Mat3 G = T.at(q);
        Mat3 Om = G - transpose(G);
        Vec3 r = Om * Vec3{u.x[q], u.y[q], u.z[q]};
        Ou.x[q] = r.x;
        Ou.y[q] = r.y;
        Ou.z[q] = r.z;
    }
    HarmonicComponent pf = horizontal_mean(f);
    HarmonicComponent po = horizontal_mean(project_h(Ou));
    return {pf.c1 - po.c1, pf.c2 - po.c2};
}

} // namespace

std::vector<HarmonicComponent> harmonic_evolve(const VectorField3& u0,
                                               const SpaceTimeField& f,
                                               const SpaceTimeField& omega,
                                               const SpaceTimeField& u,
                                               double range_tol) {
    const Grid3& g = u0.grid;
    if (!f.grid.same_as(g) || !omega.grid.same_as(g) || !u.grid.same_as(g) ||
        f.time.slices() != omega.time.slices() ||
        u.time.slices() != omega.time.slices())
        throw InputError("harmonic evolution: slice layouts do not match");

    const int nt = omega.time.nt;
    const double dt = omega.time.dt();
    std::vector<HarmonicComponent> c(nt + 1);
    c[0] = horizontal_mean(u0);

    HarmonicComponent prev =
        slice_rate(f.slice[0], omega.slice[0], u.slice[0], range_tol);
    for (int m = 1; m <= nt; ++m) {
        HarmonicComponent cur =
            slice_rate(f.slice[m], omega.slice[m], u.slice[m], range_tol);
        c[m].c1 = c[m - 1].c1 + 0.5 * dt * (prev.c1 + cur.c1);
        c[m].c2 = c[m - 1].c2 + 0.5 * dt * (prev.c2 + cur.c2);
        prev = cur;
    }
    return c;
}

} // namespace euler
