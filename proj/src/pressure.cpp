#include "euler/pressure.h"

#include <cmath>
#include <cstdio>

#include "euler/error.h"

namespace euler {

namespace {

double dot_tau(const PatchVector& a, const PatchVector& b, std::size_t q) {
    return a.c1[q] * b.c1[q] + a.c2[q] * b.c2[q];
}

// Relative scale for the Gauss-defect warning.
double defect_scale(const ScalarField3& src, const WallData& datum) {
    double m = 0.0;
    for (double v : datum.bottom) m = std::max(m, std::fabs(v));
    for (double v : datum.top) m = std::max(m, std::fabs(v));
    return 1.0 + std::fabs(volume_integral(src)) +
           src.grid.L1 * src.grid.L2 * m;
}

PressureResult solve_with_datum(const ScalarField3& src,
                                const WallData& datum) {
    PressureResult out;
    out.q = solve_neumann_poisson(src, datum, &out.gauss_defect);
    if (std::fabs(out.gauss_defect) > 1e-6 * defect_scale(src, datum))
        std::fprintf(stderr,
                     "pressure: compatibility defect %.3e distributed "
                     "uniformly over the walls\n",
                     out.gauss_defect);
    return out;
}

} // namespace

PatchScalar ugradu_normal(const SurfacePatch& P, const PatchVector& u_tau,
                          const PatchScalar& u_n) {
    if (u_n.size() != P.size() || u_tau.c1.size() != P.size())
        throw InputError("trace identity: field sizes do not match the patch");
    PatchVector gn = grad_gamma(P, u_n);
    PatchScalar dv = div_gamma(P, u_tau);
    PatchVector Au = shape_apply(P, u_tau);
    PatchScalar out(P.size());
    for (std::size_t q = 0; q < P.size(); ++q)
        out[q] = dot_tau(u_tau, gn, q) - u_n[q] * dv[q] -
                 (P.kap1[q] + P.kap2[q]) * u_n[q] * u_n[q] -
                 dot_tau(u_tau, Au, q);
    return out;
}

PatchScalar inflow_neumann_form(const SurfacePatch& P, const PatchVector& u_tau,
                                const PatchScalar& U_n,
                                const PatchVector& U_tau) {
    if (U_n.size() != P.size() || u_tau.c1.size() != P.size() ||
        U_tau.c1.size() != P.size())
        throw InputError("inflow datum: field sizes do not match the patch");
    PatchVector gU = grad_gamma(P, U_n);
    PatchVector UnU(P.size());
    for (std::size_t q = 0; q < P.size(); ++q) {
        UnU.c1[q] = U_n[q] * U_tau.c1[q];
        UnU.c2[q] = U_n[q] * U_tau.c2[q];
    }
    PatchScalar dv = div_gamma(P, UnU);
    PatchVector Au = shape_apply(P, u_tau);
    PatchScalar out(P.size());
    for (std::size_t q = 0; q < P.size(); ++q)
        out[q] = 2.0 * dot_tau(u_tau, gU, q) - dv[q] -
                 (P.kap1[q] + P.kap2[q]) * U_n[q] * U_n[q] -
                 dot_tau(u_tau, Au, q);
    return out;
}

WallData nonlinear_neumann(const VectorField3& u, const Background& bg,
                           double t) {
    const Grid3& g = u.grid;
    WallData out = zero_wall_data(g);
    for (Wall w : {Wall::Minus, Wall::Plus}) {
        SurfacePatch P = wall_patch(g, w);
        PatchVector ut = wall_tangential(u, w);
        PatchScalar N;
        if (w == Wall::Plus && !bg.zero_flux()) {
            PatchScalar Un(g.plane_size(), bg.normal_trace(w, t));
            N = inflow_neumann_form(P, ut, Un, bg.tangential_trace(g, w, t));
        } else {
            N = ugradu_normal(P, ut, wall_normal_component(u, w));
        }
        (w == Wall::Plus ? out.top : out.bottom) = patch_to_plane(g, w, N);
    }
    return out;
}

WallData ugradu_normal_walls(const VectorField3& u) {
    const Grid3& g = u.grid;
    WallData out = zero_wall_data(g);
    for (Wall w : {Wall::Minus, Wall::Plus}) {
        SurfacePatch P = wall_patch(g, w);
        PatchScalar N =
            ugradu_normal(P, wall_tangential(u, w), wall_normal_component(u, w));
        (w == Wall::Plus ? out.top : out.bottom) = patch_to_plane(g, w, N);
    }
    return out;
}

ScalarField3 pressure_source(const VectorField3& u) {
    TensorField3 T = grad_tensor(u);
    ScalarField3 s(u.grid);
    for (std::size_t q = 0; q < u.grid.size(); ++q) {
        double acc = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                acc += T.comp[3 * i + j][q] * T.comp[3 * j + i][q];
        s.v[q] = -acc;
    }
    return s;
}

PressureResult solve_q(const VectorField3& u, const Background& bg, double t) {
    const Grid3& g = u.grid;
    WallData N = nonlinear_neumann(u, bg, t);
    WallData datum = zero_wall_data(g);
    double db = bg.normal_trace_dt(Wall::Minus, t);
    double dt_top = bg.normal_trace_dt(Wall::Plus, t);
    for (std::size_t q = 0; q < g.plane_size(); ++q) {
        datum.bottom[q] = -db - N.bottom[q];
        datum.top[q] = -dt_top - N.top[q];
    }
    return solve_with_datum(pressure_source(u), datum);
}

PressureResult solve_true_pressure(const VectorField3& u,
                                   const WallData& dtun) {
    const Grid3& g = u.grid;
    WallData N = ugradu_normal_walls(u);
    WallData datum = zero_wall_data(g);
    for (std::size_t q = 0; q < g.plane_size(); ++q) {
        datum.bottom[q] = -dtun.bottom[q] - N.bottom[q];
        datum.top[q] = -dtun.top[q] - N.top[q];
    }
    return solve_with_datum(pressure_source(u), datum);
}

PressureResult solve_pU(const VectorField3& u0, const Background& bg) {
    WallData dtun = zero_wall_data(u0.grid);
    double db = bg.normal_trace_dt(Wall::Minus, 0.0);
    double dtp = bg.normal_trace_dt(Wall::Plus, 0.0);
    for (std::size_t q = 0; q < u0.grid.plane_size(); ++q) {
        dtun.bottom[q] = db;
        dtun.top[q] = dtp;
    }
    return solve_true_pressure(u0, dtun);
}

} // namespace euler
