#include "euler/transport.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "euler/error.h"
#include "euler/parallel.h"

namespace euler {

namespace {

constexpr double kTimeSlack = 1e-9;
constexpr double pi = std::numbers::pi;

int wrap(int i, int n) { return (i % n + n) % n; }

} // namespace

InflowSeries::InflowSeries(const Grid3& g, const TimeGrid& tg)
    : grid(g), time(tg), slice(tg.slices()) {
    for (auto& s : slice)
        for (auto& c : s) c.assign(grid.plane_size(), 0.0);
}

Vec3 InflowSeries::at(int m, int i, int j) const {
    std::size_t q = static_cast<std::size_t>(j) * grid.n1 + i;
    return {slice[m][0][q], slice[m][1][q], slice[m][2][q]};
}

void InflowSeries::set(int m, int i, int j, const Vec3& v) {
    std::size_t q = static_cast<std::size_t>(j) * grid.n1 + i;
    slice[m][0][q] = v.x;
    slice[m][1][q] = v.y;
    slice[m][2][q] = v.z;
}

Vec3 InflowSeries::sample(double t, double x, double y) const {
    if (slice.empty()) throw InputError("inflow data: no slices");
    if (t < -kTimeSlack || t > time.T + kTimeSlack)
        throw InputError("inflow data: evaluation time outside the data window");
    t = std::min(std::max(t, 0.0), time.T);

    // Lagrange window over the nearest W slices (cubic once enough exist).
    const int ns = static_cast<int>(slice.size());
    const int W = std::min(4, ns);
    const double dt = time.dt();
    int m0 = static_cast<int>(std::floor(t / dt)) - (W / 2 - 1);
    m0 = std::min(std::max(m0, 0), ns - W);
    const double s = t / dt - m0;
    double wt[4] = {1.0, 0.0, 0.0, 0.0};
    for (int a = 0; a < W; ++a) {
        double w = 1.0;
        for (int b = 0; b < W; ++b)
            if (b != a) w *= (s - b) / (a - b);
        wt[a] = w;
    }

    CubicAxis ax = cubic_axis_periodic(x, grid.n1, grid.h1());
    CubicAxis ay = cubic_axis_periodic(y, grid.n2, grid.h2());
    int ia[4], ja[4];
    for (int a = 0; a < 4; ++a) {
        ia[a] = wrap(ax.base + a, grid.n1);
        ja[a] = wrap(ay.base + a, grid.n2);
    }

    Vec3 acc;
    for (int m = 0; m < W; ++m) {
        const auto& pl = slice[m0 + m];
        double vx = 0.0, vy = 0.0, vz = 0.0;
        for (int b = 0; b < 4; ++b) {
            std::size_t row = static_cast<std::size_t>(ja[b]) * grid.n1;
            double lx = 0.0, ly = 0.0, lz = 0.0;
            for (int a = 0; a < 4; ++a) {
                double w = ax.w[a];
                std::size_t q = row + ia[a];
                lx += w * pl[0][q];
                ly += w * pl[1][q];
                lz += w * pl[2][q];
            }
            vx += ay.w[b] * lx;
            vy += ay.w[b] * ly;
            vz += ay.w[b] * lz;
        }
        acc += wt[m] * Vec3{vx, vy, vz};
    }
    return acc;
}

SpaceTimeField lagrangian_solve(const TransportProblem& p) {
    if (!p.u || !p.omega0)
        throw InputError("transport: velocity and initial vorticity are required");
    const SpaceTimeVelocity& u = *p.u;
    const Grid3& g = u.grid;
    if (!p.omega0->grid.same_as(g))
        throw InputError("transport: initial vorticity grid mismatch");
    if (p.inflow) {
        const Grid3& wg = p.inflow->grid;
        if (wg.n1 != g.n1 || wg.n2 != g.n2 || wg.L1 != g.L1 || wg.L2 != g.L2)
            throw InputError("transport: inflow data horizontal layout mismatch");
        if (std::fabs(p.inflow->time.T - u.time.T) > kTimeSlack)
            throw InputError("transport: inflow data must cover the solve window");
    }
    if (p.curl_f) {
        if (!p.curl_f->grid.same_as(g))
            throw InputError("transport: forcing grid mismatch");
        if (std::fabs(p.curl_f->time.T - u.time.T) > kTimeSlack)
            throw InputError("transport: forcing must cover the solve window");
    }

    SpaceTimeField out(g, u.time);
    out.slice[0] = *p.omega0;

    TimeInterpolant ut(u);
    std::optional<TimeInterpolant> gt;
    if (p.curl_f) gt.emplace(*p.curl_f);
    const TimeInterpolant* gp = gt ? &*gt : nullptr;

    const int n1 = g.n1, n2 = g.n2;
    for (int m = 1; m < u.time.slices(); ++m) {
        const double t = u.time.t(m);
        VectorField3& w = out.slice[m];
        parallel_for(g.size(), [&](std::size_t q) {
            const int i = static_cast<int>(q % n1);
            const int j = static_cast<int>((q / n1) % n2);
            const int k = static_cast<int>(q / (static_cast<std::size_t>(n1) * n2));
            const Vec3 x{g.x(i), g.y(j), g.z(k)};
            BackwardPath bp = backward_path(ut, t, x, p.ode, gp);
            Vec3 data;
            if (bp.trace.region == Region::UPlus) {
                if (!p.inflow)
                    throw InputError(
                        "transport: a backward characteristic reaches the "
                        "inflow wall but no inflow data was provided");
                data = p.inflow->sample(bp.trace.tau, bp.trace.gamma.x,
                                        bp.trace.gamma.y);
            } else {
                data = sample(*p.omega0, bp.trace.gamma);
            }
            Vec3 val = bp.data_jacobian * data + bp.forcing;
            w.x[q] = val.x;
            w.y[q] = val.y;
            w.z[q] = val.z;
        });
    }
    return out;
}

namespace {

// One separable test function psi(t,x,y,z) e_c. Axis tables hold values and
// derivatives on the slice times and grid nodes.
struct TestShape {
    std::vector<double> tv, td;       // per slice
    std::vector<double> xv, xdx, xdy; // per plane node
    std::vector<double> zv, zd;       // per z node
};

enum class TProfile { Bump, Signed };
enum class XProfile { One, CosX, SinX, CosY, Diag };
enum class ZProfile { Bump, Odd, Tilt };

TestShape make_shape(const Grid3& g, const TimeGrid& tg, TProfile tp,
                     XProfile xp, ZProfile zp) {
    TestShape sh;
    const double T = tg.T;
    sh.tv.resize(tg.slices());
    sh.td.resize(tg.slices());
    for (int m = 0; m < tg.slices(); ++m) {
        double a = pi / T, t = tg.t(m);
        double s = std::sin(a * t), s2 = std::sin(2.0 * a * t),
               c2 = std::cos(2.0 * a * t);
        if (tp == TProfile::Bump) {
            sh.tv[m] = s * s;
            sh.td[m] = a * s2;
        } else {
            sh.tv[m] = s * s * s2;
            sh.td[m] = a * (s2 * s2 + 2.0 * s * s * c2);
        }
    }

    sh.xv.resize(g.plane_size());
    sh.xdx.resize(g.plane_size());
    sh.xdy.resize(g.plane_size());
    const double k1 = 2.0 * pi / g.L1, k2 = 2.0 * pi / g.L2;
    for (int j = 0; j < g.n2; ++j)
        for (int i = 0; i < g.n1; ++i) {
            std::size_t q = static_cast<std::size_t>(j) * g.n1 + i;
            double x = g.x(i), y = g.y(j), v = 1.0, dx = 0.0, dy = 0.0;
            switch (xp) {
            case XProfile::One: break;
            case XProfile::CosX:
                v = std::cos(k1 * x);
                dx = -k1 * std::sin(k1 * x);
                break;
            case XProfile::SinX:
                v = std::sin(k1 * x + 0.5);
                dx = k1 * std::cos(k1 * x + 0.5);
                break;
            case XProfile::CosY:
                v = std::cos(k2 * y - 0.3);
                dy = -k2 * std::sin(k2 * y - 0.3);
                break;
            case XProfile::Diag:
                v = std::sin(k1 * x + k2 * y);
                dx = k1 * std::cos(k1 * x + k2 * y);
                dy = k2 * std::cos(k1 * x + k2 * y);
                break;
            }
            sh.xv[q] = v;
            sh.xdx[q] = dx;
            sh.xdy[q] = dy;
        }

    sh.zv.resize(g.n3);
    sh.zd.resize(g.n3);
    for (int k = 0; k < g.n3; ++k) {
        double z = g.z(k), s = std::sin(pi * z), c = std::cos(pi * z),
               s2 = std::sin(2.0 * pi * z);
        switch (zp) {
        case ZProfile::Bump:
            sh.zv[k] = s * s;
            sh.zd[k] = pi * s2;
            break;
        case ZProfile::Odd:
            sh.zv[k] = s * s * c;
            sh.zd[k] = pi * s * (2.0 * c * c - s * s);
            break;
        case ZProfile::Tilt:
            sh.zv[k] = s * s * (z - 0.3);
            sh.zd[k] = pi * s2 * (z - 0.3) + s * s;
            break;
        }
    }
    return sh;
}

} // namespace

double weak_residual(const SpaceTimeField& omega, const SpaceTimeVelocity& u,
                     const SpaceTimeField* curl_f) {
    const Grid3& g = omega.grid;
    if (!u.grid.same_as(g) || u.time.nt != omega.time.nt ||
        std::fabs(u.time.T - omega.time.T) > kTimeSlack)
        throw InputError("weak residual: vorticity and velocity grids differ");
    if (curl_f &&
        (!curl_f->grid.same_as(g) || curl_f->time.nt != omega.time.nt ||
         std::fabs(curl_f->time.T - omega.time.T) > kTimeSlack))
        throw InputError("weak residual: forcing grid mismatch");

    const TimeGrid& tg = omega.time;
    struct Combo {
        TProfile t;
        XProfile x;
        ZProfile z;
    };
    const Combo combos[] = {
        {TProfile::Bump, XProfile::One, ZProfile::Bump},
        {TProfile::Bump, XProfile::CosX, ZProfile::Odd},
        {TProfile::Bump, XProfile::SinX, ZProfile::Tilt},
        {TProfile::Bump, XProfile::Diag, ZProfile::Odd},
        {TProfile::Bump, XProfile::CosY, ZProfile::Odd},
        {TProfile::Signed, XProfile::One, ZProfile::Bump},
        {TProfile::Signed, XProfile::CosY, ZProfile::Tilt},
        {TProfile::Signed, XProfile::CosX, ZProfile::Bump},
    };
    const int nsh = static_cast<int>(std::size(combos));
    std::vector<TestShape> bank;
    bank.reserve(nsh);
    for (const Combo& c : combos)
        bank.push_back(make_shape(g, tg, c.t, c.x, c.z));

    // R(phi) = -int [ w_c (dpsi/dt + u.grad psi) + ((w.grad u)_c + g_c) psi ]
    // for phi = psi e_c; norm2 = int psi^2 + |dpsi/dt|^2 + |grad psi|^2.
    std::vector<double> R(static_cast<std::size_t>(nsh) * 3, 0.0);
    std::vector<double> norm2(nsh, 0.0);

    const std::size_t pl = g.plane_size();
    for (int m = 0; m < tg.slices(); ++m) {
        const double wt =
            tg.dt() * ((m == 0 || m == tg.nt) ? 0.5 : 1.0);
        const VectorField3& w = omega.slice[m];
        const VectorField3& uv = u.slice[m];
        const VectorField3* gv = curl_f ? &curl_f->slice[m] : nullptr;
        TensorField3 gu = grad_tensor(uv);
        for (int k = 0; k < g.n3; ++k) {
            const double wz =
                g.h3() * ((k == 0 || k == g.n3 - 1) ? 0.5 : 1.0);
            const double cell = wt * wz * g.h1() * g.h2();
            for (std::size_t q2 = 0; q2 < pl; ++q2) {
                const std::size_t q = static_cast<std::size_t>(k) * pl + q2;
                const Vec3 wv{w.x[q], w.y[q], w.z[q]};
                const Vec3 uu{uv.x[q], uv.y[q], uv.z[q]};
                const Vec3 stretch = gu.at(q) * wv;
                Vec3 rhs = stretch;
                if (gv) rhs += Vec3{gv->x[q], gv->y[q], gv->z[q]};
                for (int s = 0; s < nsh; ++s) {
                    const TestShape& sh = bank[s];
                    const double X = sh.xv[q2], Z = sh.zv[k];
                    const double psi = sh.tv[m] * X * Z;
                    const double pt = sh.td[m] * X * Z;
                    const double px = sh.tv[m] * sh.xdx[q2] * Z;
                    const double py = sh.tv[m] * sh.xdy[q2] * Z;
                    const double pz = sh.tv[m] * X * sh.zd[k];
                    const double adv = pt + uu.x * px + uu.y * py + uu.z * pz;
                    double* r = &R[static_cast<std::size_t>(s) * 3];
                    r[0] -= cell * (wv.x * adv + rhs.x * psi);
                    r[1] -= cell * (wv.y * adv + rhs.y * psi);
                    r[2] -= cell * (wv.z * adv + rhs.z * psi);
                    norm2[s] +=
                        cell * (psi * psi + pt * pt + px * px + py * py + pz * pz);
                }
            }
        }
    }

    double worst = 0.0;
    for (int s = 0; s < nsh; ++s) {
        const double scale = std::sqrt(norm2[s]);
        for (int c = 0; c < 3; ++c)
            worst = std::max(worst,
                             std::fabs(R[static_cast<std::size_t>(s) * 3 + c]) /
                                 scale);
    }
    return worst;
}

double RangeOfCurlReport::worst() const {
    double w = 0.0;
    for (const CurlRangeDefect& d : slice) w = std::max(w, d.worst());
    return w;
}

RangeOfCurlReport range_of_curl_check(const SpaceTimeField& omega, double tol) {
    RangeOfCurlReport rep;
    rep.tol = tol;
    rep.slice.reserve(omega.slice.size());
    for (const VectorField3& w : omega.slice)
        rep.slice.push_back(curl_range_defect(w));
    rep.pass = rep.worst() <= tol;
    return rep;
}

} // namespace euler
