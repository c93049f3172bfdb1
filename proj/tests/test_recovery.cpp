// Velocity reconstruction from vorticity. The per-mode solver is pinned by
// manufactured fields: a completed single-mode vorticity whose velocity the
// solver must reproduce through the curl, a full round trip through curl of
// a potential field, and the algebraic invariants the construction makes
// exact (discrete divergence, wall traces, zero horizontal mean, linearity).
// The harmonic recurrence is checked against closed forms: constant data,
// steady integrands, and quadrature of a known forcing.

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "euler/biot_savart.h"
#include "euler/error.h"
#include "euler/fields.h"
#include "harness.h"

using namespace euler;

namespace {

constexpr double pi = std::numbers::pi;

testing::Recorder rec;

double max_vec_diff(const VectorField3& a, const VectorField3& b) {
    double m = 0.0;
    for (std::size_t q = 0; q < a.grid.size(); ++q) {
        m = std::max(m, std::fabs(a.x[q] - b.x[q]));
        m = std::max(m, std::fabs(a.y[q] - b.y[q]));
        m = std::max(m, std::fabs(a.z[q] - b.z[q]));
    }
    return m;
}

// Single-mode vorticity with omega_3 = sin(2 pi x) sin(pi z), completed by
// the x component that makes it solenoidal; wall fluxes vanish with rho.
VectorField3 mode_vorticity(const Grid3& g) {
    VectorField3 w(g);
    for (int k = 0; k < g.n3; ++k)
        for (int j = 0; j < g.n2; ++j)
            for (int i = 0; i < g.n1; ++i) {
                double x = g.x(i), z = g.z(k);
                w.x[g.idx(i, j, k)] =
                    0.5 * std::cos(2.0 * pi * x) * std::cos(pi * z);
                w.z[g.idx(i, j, k)] =
                    std::sin(2.0 * pi * x) * std::sin(pi * z);
            }
    return w;
}

// Velocity in H0 built as curl of a potential that is tangent-compatible:
// horizontal potential components vanish at the walls.
VectorField3 potential_velocity(const Grid3& g) {
    VectorField3 u(g);
    for (int k = 0; k < g.n3; ++k)
        for (int j = 0; j < g.n2; ++j)
            for (int i = 0; i < g.n1; ++i) {
                double x = g.x(i), y = g.y(j), z = g.z(k);
                double sz = std::sin(pi * z), cz = pi * std::cos(pi * z);
                // psi = (sz sin(2 pi y), sz sin(2 pi x + 0.7),
                //        cos(2 pi x) cos(2 pi y))
                double u1 = -2.0 * pi * std::cos(2.0 * pi * x) *
                                std::sin(2.0 * pi * y) -
                            cz * std::sin(2.0 * pi * x + 0.7);
                double u2 = cz * std::sin(2.0 * pi * y) +
                            2.0 * pi * std::sin(2.0 * pi * x) *
                                std::cos(2.0 * pi * y);
                double u3 = 2.0 * pi * sz * std::cos(2.0 * pi * x + 0.7) -
                            2.0 * pi * sz * std::cos(2.0 * pi * y);
                u.set(i, j, k, {u1, u2, u3});
            }
    return u;
}

// --- range-of-curl bookkeeping ------------------------------------------------

void test_curl_range() {
    Grid3 g(16, 16, 17, 1.0, 1.0);

    VectorField3 bad(g);
    for (int k = 0; k < g.n3; ++k)
        for (int j = 0; j < g.n2; ++j)
            for (int i = 0; i < g.n1; ++i)
                bad.z[g.idx(i, j, k)] = g.z(k);
    CurlRangeDefect d = curl_range_defect(bad);
    rec.check_near("curl range: unit divergence is measured exactly",
                   d.div_inf, 1.0, 1e-12);
    rec.check_near("curl range: inflow wall flux of z", d.flux_plus, 1.0,
                   1e-12);
    rec.check_near("curl range: outflow wall flux of z", d.flux_minus, 0.0,
                   1e-12);
    bool threw = false;
    try {
        biot_savart(bad);
    } catch (const InputError&) {
        threw = true;
    }
    rec.record("curl range: divergent vorticity is rejected", threw);

    VectorField3 good = curl3(potential_velocity(g));
    rec.check_le("curl range: a discrete curl passes",
                 curl_range_defect(good).worst(), 1e-11);
}

// --- Biot-Savart construction ---------------------------------------------------

void test_biot_savart_invariants() {
    Grid3 g(16, 16, 17, 1.0, 1.0);

    VectorField3 zero(g);
    rec.check_le("biot-savart: zero vorticity gives zero velocity",
                 max_abs(biot_savart(zero)), 1e-15);

    // Analytically solenoidal, but the z stencil leaves an O(h^2) discrete
    // divergence; the range tolerance is passed explicitly at that scale.
    VectorField3 w = mode_vorticity(g);
    rec.check_le("biot-savart: analytic mode field defect is O(h^2)",
                 curl_range_defect(w).worst(), 5e-2);
    VectorField3 v = biot_savart(w, 0.1);
    rec.check_le("biot-savart: discrete divergence vanishes identically",
                 max_abs(divergence(v)), 1e-12);

    double trace = 0.0;
    const std::size_t pl = g.plane_size();
    for (std::size_t q = 0; q < pl; ++q) {
        trace = std::max(trace, std::fabs(v.z[q]));
        trace = std::max(trace,
                         std::fabs(v.z[(g.n3 - 1) * pl + q]));
    }
    rec.check_le("biot-savart: walls are impermeable", trace, 1e-14);

    HarmonicComponent hm = horizontal_mean(v);
    rec.check_le("biot-savart: no harmonic component",
                 std::max(std::fabs(hm.c1), std::fabs(hm.c2)), 1e-14);

    // Linearity at roundoff: the whole pipeline is linear in omega.
    VectorField3 w2 = curl3(potential_velocity(g));
    VectorField3 lhs_in(g);
    for (std::size_t q = 0; q < g.size(); ++q) {
        lhs_in.x[q] = 2.0 * w.x[q] - 3.0 * w2.x[q];
        lhs_in.y[q] = 2.0 * w.y[q] - 3.0 * w2.y[q];
        lhs_in.z[q] = 2.0 * w.z[q] - 3.0 * w2.z[q];
    }
    VectorField3 lhs = biot_savart(lhs_in, 0.5);
    VectorField3 a = biot_savart(w, 0.1), b = biot_savart(w2);
    double lin = 0.0;
    for (std::size_t q = 0; q < g.size(); ++q) {
        lin = std::max(lin, std::fabs(lhs.x[q] - 2.0 * a.x[q] + 3.0 * b.x[q]));
        lin = std::max(lin, std::fabs(lhs.y[q] - 2.0 * a.y[q] + 3.0 * b.y[q]));
        lin = std::max(lin, std::fabs(lhs.z[q] - 2.0 * a.z[q] + 3.0 * b.z[q]));
    }
    rec.check_le("biot-savart: linearity", lin, 1e-12);
}

double curl_reproduction_error(int n3) {
    Grid3 g(16, 16, n3, 1.0, 1.0);
    VectorField3 w = mode_vorticity(g);
    return max_vec_diff(curl3(biot_savart(w, 0.1)), w);
}

double round_trip_error(int n3) {
    Grid3 g(16, 16, n3, 1.0, 1.0);
    VectorField3 u = potential_velocity(g);
    return max_vec_diff(biot_savart(curl3(u)), u);
}

void test_biot_savart_accuracy() {
    double c1 = curl_reproduction_error(17), c2 = curl_reproduction_error(33);
    rec.check_le("biot-savart: curl of output reproduces a single mode", c1,
                 5e-2);
    rec.check_ge("biot-savart: curl reproduction refines at second order",
                 c1 / c2, 3.4);

    double r1 = round_trip_error(17), r2 = round_trip_error(33);
    rec.check_le("biot-savart: round trip through the curl", r1, 2e-1);
    rec.check_ge("biot-savart: round trip refines at second order", r1 / r2,
                 3.4);
}

// --- full velocity recovery -----------------------------------------------------

void test_recover_velocity() {
    Grid3 g(16, 16, 17, 1.0, 1.0);
    Background bg = Background::tw_constant(1.0);

    VectorField3 zero(g);
    VectorField3 u = recover_velocity(zero, bg, 0.0, {0.0, 0.0});
    double err = 0.0;
    for (std::size_t q = 0; q < g.size(); ++q)
        err = std::max({err, std::fabs(u.x[q]), std::fabs(u.y[q]),
                        std::fabs(u.z[q] + 1.0)});
    rec.check_le("recovery: no vorticity returns the background", err, 1e-15);

    u = recover_velocity(zero, bg, 0.0, {1.0, 0.0});
    err = 0.0;
    for (std::size_t q = 0; q < g.size(); ++q)
        err = std::max({err, std::fabs(u.x[q] - 1.0), std::fabs(u.y[q]),
                        std::fabs(u.z[q] + 1.0)});
    rec.check_le("recovery: harmonic shift adds a constant", err, 1e-15);

    VectorField3 w = mode_vorticity(g);
    u = recover_velocity(w, bg, 0.0, {0.2, -0.1}, 0.1);
    const std::size_t pl = g.plane_size();
    double trace = 0.0;
    for (std::size_t q = 0; q < pl; ++q) {
        trace = std::max(trace, std::fabs(u.z[q] + 1.0));
        trace = std::max(trace, std::fabs(u.z[(g.n3 - 1) * pl + q] + 1.0));
    }
    rec.check_le("recovery: wall traces equal the background flux", trace,
                 1e-13);
    rec.check_le("recovery: output stays divergence-free",
                 max_abs(divergence(u)), 1e-12);
    HarmonicComponent hm = horizontal_mean(u);
    rec.check_le("recovery: harmonic component is the requested one",
                 std::max(std::fabs(hm.c1 - 0.2), std::fabs(hm.c2 + 0.1)),
                 1e-13);
}

// --- projections -----------------------------------------------------------------

VectorField3 leaky_field(const Grid3& g) {
    VectorField3 w(g);
    for (int k = 0; k < g.n3; ++k)
        for (int j = 0; j < g.n2; ++j)
            for (int i = 0; i < g.n1; ++i) {
                double x = g.x(i), y = g.y(j), z = g.z(k);
                w.set(i, j, k,
                      {std::sin(2.0 * pi * y) * std::exp(z),
                       std::cos(2.0 * pi * x) + 0.3 * z,
                       std::sin(pi * z) + z * z + 0.4 * std::cos(2.0 * pi * x)});
            }
    return w;
}

void test_projection() {
    Grid3 g(16, 16, 17, 1.0, 1.0);
    VectorField3 w = leaky_field(g);

    VectorField3 p = project_h(w);
    HarmonicComponent before = horizontal_mean(w);
    HarmonicComponent after = horizontal_mean(p);
    rec.check_le("projection: horizontal means pass through",
                 std::max(std::fabs(after.c1 - before.c1),
                          std::fabs(after.c2 - before.c2)),
                 1e-13);

    // The residual divergence is not spectral: the potential is
    // differentiated with the one-sided z stencils at the walls, and their
    // composition with the interior stencil is first order in the two wall
    // rows.  The wall data of this field excites kappa^2-sized curvature
    // there, so the shrink factor at this resolution is moderate and the
    // residual halves with the spacing.
    double shrink = max_abs(divergence(w)) / max_abs(divergence(p));
    rec.check_ge("projection: divergence shrinks", shrink, 4.0);
    Grid3 g2(16, 16, 33, 1.0, 1.0);
    VectorField3 p2 = project_h(leaky_field(g2));
    rec.check_ge("projection: residual divergence refines",
                 max_abs(divergence(p)) / max_abs(divergence(p2)), 1.7);

    const std::size_t pl = g.plane_size();
    double trace = 0.0;
    for (std::size_t q = 0; q < pl; ++q) {
        trace = std::max(trace, std::fabs(p.z[q]));
        trace = std::max(trace, std::fabs(p.z[(g.n3 - 1) * pl + q]));
    }
    rec.check_le("projection: wall leakage is removed to stencil accuracy",
                 trace, 5e-2);
    // Idempotence at the same order.
    VectorField3 pp = project_h(p);
    rec.check_le("projection: near idempotence", max_vec_diff(pp, p), 5e-2);
}

// --- harmonic evolution -----------------------------------------------------------

void test_harmonic_constant() {
    Grid3 g(8, 8, 9, 1.0, 1.0);
    TimeGrid tg(1.0, 8);
    Background bg = Background::tw_constant(1.0);

    VectorField3 u0(g);
    for (std::size_t q = 0; q < g.size(); ++q) {
        u0.x[q] = 0.3;
        u0.y[q] = -0.2;
        u0.z[q] = -1.0;
    }
    SpaceTimeField f(g, tg), omega(g, tg), u(g, tg);
    for (int m = 0; m <= tg.nt; ++m) u.slice[m] = bg.slice(g, tg.t(m));

    auto c = harmonic_evolve(u0, f, omega, u);
    double drift = 0.0;
    for (const auto& cm : c)
        drift = std::max({drift, std::fabs(cm.c1 - 0.3),
                          std::fabs(cm.c2 + 0.2)});
    rec.check_le("harmonic evolution: no data, no motion", drift, 1e-15);
}

void test_harmonic_steady_slope() {
    Grid3 g(16, 16, 17, 1.0, 1.0);
    TimeGrid tg(0.8, 8);
    Background bg = Background::tw_constant(1.0);

    VectorField3 w = mode_vorticity(g);
    VectorField3 us = recover_velocity(w, bg, 0.0, {0.0, 0.0}, 0.1);
    SpaceTimeField f(g, tg), omega(g, tg), u(g, tg);
    for (int m = 0; m <= tg.nt; ++m) {
        omega.slice[m] = w;
        u.slice[m] = us;
    }

    auto c = harmonic_evolve(us, f, omega, u, 0.1);

    // Steady integrand: the trapezoid sum is exactly linear in t, and the
    // slope is one slice evaluation, assembled here from the public pieces.
    VectorField3 v0 = biot_savart(w, 0.1);
    TensorField3 T = grad_tensor(v0);
    VectorField3 Ou(g);
    for (std::size_t q = 0; q < g.size(); ++q) {
        Mat3 G = T.at(q);
        Vec3 r = (G - transpose(G)) * Vec3{us.x[q], us.y[q], us.z[q]};
        Ou.x[q] = r.x;
        Ou.y[q] = r.y;
        Ou.z[q] = r.z;
    }
    HarmonicComponent rate = horizontal_mean(project_h(Ou));
    HarmonicComponent c0 = horizontal_mean(us);
    double err = 0.0;
    for (int m = 0; m <= tg.nt; ++m) {
        err = std::max(err, std::fabs(c[m].c1 - (c0.c1 - tg.t(m) * rate.c1)));
        err = std::max(err, std::fabs(c[m].c2 - (c0.c2 - tg.t(m) * rate.c2)));
    }
    rec.check_le("harmonic evolution: steady integrand gives a linear drift",
                 err, 1e-14);

    // The leakage projection cannot move horizontal means, so the slope is
    // also the raw mean of Omega u.
    HarmonicComponent raw = horizontal_mean(Ou);
    rec.check_le("harmonic evolution: projection does not bend the slope",
                 std::max(std::fabs(rate.c1 - raw.c1),
                          std::fabs(rate.c2 - raw.c2)),
                 1e-13);

    // Omega u is the vorticity cross velocity up to discretization error.
    VectorField3 cross(g);
    VectorField3 wk = curl3(v0);
    for (std::size_t q = 0; q < g.size(); ++q) {
        Vec3 a{wk.x[q], wk.y[q], wk.z[q]};
        Vec3 b{us.x[q], us.y[q], us.z[q]};
        cross.x[q] = a.y * b.z - a.z * b.y;
        cross.y[q] = a.z * b.x - a.x * b.z;
        cross.z[q] = a.x * b.y - a.y * b.x;
    }
    rec.check_le("harmonic evolution: matrix action is vorticity cross flow",
                 max_vec_diff(Ou, cross), 1e-12);
}

void test_harmonic_forcing_quadrature() {
    Grid3 g(8, 8, 9, 1.0, 1.0);
    Background bg = Background::tw_constant(1.0);

    // f(t) = (alpha + beta t) curl(0, z^2, 0) = (alpha + beta t)(-2z, 0, 0):
    // trapezoid integrates the linear amplitude exactly, and
    // P_{H_c} f = (-(alpha + beta t), 0).
    auto run = [&](int nt, double T) {
        TimeGrid tg(T, nt);
        SpaceTimeField f(g, tg), omega(g, tg), u(g, tg);
        const double alpha = 0.7, beta = -0.4;
        for (int m = 0; m <= tg.nt; ++m) {
            double amp = alpha + beta * tg.t(m);
            for (int k = 0; k < g.n3; ++k)
                for (int j = 0; j < g.n2; ++j)
                    for (int i = 0; i < g.n1; ++i)
                        f.slice[m].x[g.idx(i, j, k)] = -2.0 * amp * g.z(k);
            u.slice[m] = bg.slice(g, tg.t(m));
        }
        VectorField3 u0 = u.slice[0];
        auto c = harmonic_evolve(u0, f, omega, u);
        double err = 0.0;
        for (int m = 0; m <= tg.nt; ++m) {
            double t = tg.t(m);
            double want = -(alpha * t + 0.5 * beta * t * t);
            err = std::max(err, std::fabs(c[m].c1 - want));
            err = std::max(err, std::fabs(c[m].c2));
        }
        return err;
    };
    rec.check_le("harmonic evolution: forced drift matches the quadrature",
                 run(8, 1.0), 1e-8);

    // Smooth non-polynomial amplitude: trapezoid converges at second order.
    auto run_sin = [&](int nt) {
        TimeGrid tg(1.0, nt);
        SpaceTimeField f(g, tg), omega(g, tg), u(g, tg);
        for (int m = 0; m <= tg.nt; ++m) {
            double amp = std::sin(tg.t(m));
            for (int k = 0; k < g.n3; ++k)
                for (int j = 0; j < g.n2; ++j)
                    for (int i = 0; i < g.n1; ++i)
                        f.slice[m].x[g.idx(i, j, k)] = -2.0 * amp * g.z(k);
            u.slice[m] = bg.slice(g, tg.t(m));
        }
        auto c = harmonic_evolve(u.slice[0], f, omega, u);
        double cend = c[tg.nt].c1 - c[0].c1;
        return std::fabs(cend - (std::cos(1.0) - 1.0));
    };
    double q1 = run_sin(16), q2 = run_sin(32);
    rec.check_le("harmonic evolution: smooth forcing, coarse quadrature error",
                 q1, 1e-3);
    rec.check_ge("harmonic evolution: trapezoid refines at second order",
                 q1 / q2, 3.6);

    bool threw = false;
    try {
        TimeGrid tg(1.0, 4);
        SpaceTimeField f(g, tg), omega(g, tg);
        SpaceTimeField u(g, TimeGrid(1.0, 5));
        harmonic_evolve(VectorField3(g), f, omega, u);
    } catch (const InputError&) {
        threw = true;
    }
    rec.record("harmonic evolution: rejects mismatched slice layouts", threw);
}

} // namespace

int main() {
    test_curl_range();
    test_biot_savart_invariants();
    test_biot_savart_accuracy();
    test_recover_velocity();
    test_projection();
    test_harmonic_constant();
    test_harmonic_steady_slope();
    test_harmonic_forcing_quadrature();
    return rec.finish("recovery");
}
