#include "euler/flow_map.h"

#include <cmath>

#include "euler/error.h"

namespace euler {

namespace {

constexpr double kWallTol = 1e-12;   // bisection target for |z - 1|
constexpr double kBelowTol = -1e-9;  // backward exit through z=0 is an error
constexpr double kGrazeTol = 1e-10;  // wall counts as inflowing below -this

enum class MatrixMode {
    None,    // position only
    Forward, // dJ/ds = grad_u J  (J = grad eta from the start time)
    Inverse  // dB/ds = -B grad_u (B = grad eta back to the current time)
};

void rk4_step(const TimeInterpolant& u, double s, double h, MatrixMode mode,
              Vec3* y, Mat3* M) {
    auto stage = [&](double ss, const Vec3& yy, const Mat3& MM, Vec3* ky,
                     Mat3* kM) {
        if (mode == MatrixMode::None) {
            *ky = u.sample(ss, yy);
            return;
        }
        Mat3 gu;
        u.sample_with_gradient(ss, yy, ky, &gu);
        *kM = mode == MatrixMode::Forward ? gu * MM : -1.0 * (MM * gu);
    };
    Vec3 k1y, k2y, k3y, k4y;
    Mat3 k1m, k2m, k3m, k4m;
    stage(s, *y, *M, &k1y, &k1m);
    stage(s + 0.5 * h, *y + 0.5 * h * k1y, *M + 0.5 * h * k1m, &k2y, &k2m);
    stage(s + 0.5 * h, *y + 0.5 * h * k2y, *M + 0.5 * h * k2m, &k3y, &k3m);
    stage(s + h, *y + h * k3y, *M + h * k3m, &k4y, &k4m);
    *y += (h / 6.0) * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
    if (mode != MatrixMode::None)
        *M += (h / 6.0) * (k1m + 2.0 * k2m + 2.0 * k3m + k4m);
}

void require_step(double dt_ode) {
    if (!(dt_ode > 0.0))
        throw ConfigError("flow map: dt_ode must be positive");
}

// Bisection on the step fraction for the z=1 crossing inside one RK4 step
// starting at (s0, y0). Returns the fraction and the state there.
struct Crossing {
    double theta = 0.0;
    Vec3 y{};
    Mat3 M;
};

Crossing refine_crossing(const TimeInterpolant& u, double s0, const Vec3& y0,
                         const Mat3& M0, double signed_h, MatrixMode mode) {
    double lo = 0.0, hi = 1.0;
    Crossing c;
    for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        Vec3 y = y0;
        Mat3 M = M0;
        rk4_step(u, s0, signed_h * mid, mode, &y, &M);
        if (std::fabs(y.z - 1.0) <= kWallTol) {
            c.theta = mid;
            c.y = y;
            c.M = M;
            return c;
        }
        (y.z > 1.0 ? hi : lo) = mid;
    }
    c.theta = hi;
    c.y = y0;
    c.M = M0;
    rk4_step(u, s0, signed_h * hi, mode, &c.y, &c.M);
    return c;
}

struct BackwardCore {
    BoundaryTrace trace;
    Mat3 M; // state matrix at the exit/foot time (identity in None mode)
    Vec3 forcing{};
};

BackwardCore run_backward(const TimeInterpolant& u, double t, const Vec3& x,
                          const FlowMapParams& p, MatrixMode mode,
                          const TimeInterpolant* g) {
    require_step(p.dt_ode);
    BackwardCore out;
    out.M = Mat3::identity();

    // Points on an inflowing wall exit immediately; a zero-flux wall carries
    // them tangentially like interior points.
    if (x.z >= 1.0 - kWallTol && t > p.tau_tol &&
        u.sample(t, x).z < -kGrazeTol) {
        out.trace = {Region::UPlus, t, x};
        return out;
    }

    double s = t;
    Vec3 y = x;
    bool near_s = false;
    Vec3 f_prev{};
    if (g) f_prev = out.M * g->sample(s, y);

    while (s > 1e-14) {
        double h = std::min(p.dt_ode, s);
        double s_prev = s;
        Vec3 y_prev = y;
        Mat3 M_prev = out.M;
        rk4_step(u, s, -h, mode, &y, &out.M);
        s -= h;

        if (!near_s && y.z > 1.0) {
            if (u.sample(s, Vec3{y.x, y.y, 1.0}).z < -kGrazeTol) {
                Crossing c = refine_crossing(u, s_prev, y_prev, M_prev, -h, mode);
                double tau = s_prev - h * c.theta;
                if (tau > p.tau_tol) {
                    out.trace = {Region::UPlus, tau, c.y};
                    out.M = c.M;
                    if (g) {
                        Vec3 f_cross = c.M * g->sample(tau, c.y);
                        out.forcing += (0.5 * h * c.theta) * (f_prev + f_cross);
                    }
                    return out;
                }
                // Crossing hugs t=0: continue through the clamped extension
                // and treat the point with the interior branch.
                near_s = true;
            } else {
                // Grazing contact with a wall that is not inflowing here:
                // the characteristic slides along it; the overshoot is
                // integration noise, so pin it back to the wall.
                y.z = 1.0;
            }
        }
        if (y.z < kBelowTol)
            throw DiagnosticError(
                "backward characteristic exited through the outflow wall");

        if (g) {
            Vec3 f_cur = out.M * g->sample(s, y);
            out.forcing += (0.5 * h) * (f_prev + f_cur);
            f_prev = f_cur;
        }
    }

    Vec3 foot = y;
    foot.z = std::min(1.0, std::max(0.0, foot.z));
    // A foot landing on the inflow wall is the tau = 0 boundary case.
    if (foot.z >= 1.0 - kWallTol) near_s = true;
    out.trace.region = near_s ? Region::NearS : Region::UMinus;
    out.trace.tau = 0.0;
    out.trace.gamma = foot;
    return out;
}

// Unclipped integration of (y, M) from t1 to t2.
void integrate(const TimeInterpolant& u, double t1, double t2, const Vec3& x,
               double dt_ode, MatrixMode mode, Vec3* y, Mat3* M) {
    *y = x;
    *M = Mat3::identity();
    double dir = t2 >= t1 ? 1.0 : -1.0;
    double remaining = std::fabs(t2 - t1);
    double s = t1;
    while (remaining > 1e-14) {
        double h = std::min(dt_ode, remaining);
        rk4_step(u, s, dir * h, mode, y, M);
        s += dir * h;
        remaining -= h;
    }
}

} // namespace

Vec3 trace(const TimeInterpolant& u, double t1, double t2, const Vec3& x,
           double dt_ode) {
    require_step(dt_ode);
    if (t2 < t1) {
        // Backward: clip at the inflow wall, flag the outflow wall.
        if (x.z >= 1.0 - kWallTol && u.sample(t1, x).z < -kGrazeTol) return x;
        double s = t1;
        Vec3 y = x;
        Mat3 M;
        while (s - t2 > 1e-14) {
            double h = std::min(dt_ode, s - t2);
            double s_prev = s;
            Vec3 y_prev = y;
            rk4_step(u, s, -h, MatrixMode::None, &y, &M);
            s -= h;
            if (y.z > 1.0) {
                if (u.sample(s, Vec3{y.x, y.y, 1.0}).z < -kGrazeTol) {
                    Crossing c = refine_crossing(u, s_prev, y_prev, M, -h,
                                                 MatrixMode::None);
                    return c.y;
                }
                y.z = 1.0; // grazing a wall that is not inflowing
            }
            if (y.z < kBelowTol)
                throw DiagnosticError(
                    "backward characteristic exited through the outflow wall");
        }
        return y;
    }
    Vec3 y;
    Mat3 M;
    integrate(u, t1, t2, x, dt_ode, MatrixMode::None, &y, &M);
    return y;
}

Mat3 grad_eta(const TimeInterpolant& u, double t1, double t2, const Vec3& x,
              double dt_ode) {
    require_step(dt_ode);
    Vec3 y;
    Mat3 M;
    integrate(u, t1, t2, x, dt_ode, MatrixMode::Forward, &y, &M);
    return M;
}

BoundaryTrace classify(const TimeInterpolant& u, double t, const Vec3& x,
                       const FlowMapParams& p) {
    return run_backward(u, t, x, p, MatrixMode::None, nullptr).trace;
}

BackwardPath backward_path(const TimeInterpolant& u, double t, const Vec3& x,
                           const FlowMapParams& p, const TimeInterpolant* g) {
    BackwardCore core = run_backward(u, t, x, p, MatrixMode::Inverse, g);
    return {core.trace, core.M, core.forcing};
}

EtaBoundsReport verify_eta_bounds(const TimeInterpolant& u,
                                  const std::vector<EtaBoundsSample>& samples,
                                  double dt_ode, double slack) {
    require_step(dt_ode);
    const SpaceTimeField& f = u.field();
    double u_sup = 0.0;
    for (const VectorField3& s : f.slice) u_sup = std::max(u_sup, max_abs(s));

    EtaBoundsReport rep;
    for (const EtaBoundsSample& smp : samples) {
        // h(t1,t2) = exp|int |grad u(s)|_inf ds| by trapezoid.
        double a = std::min(smp.t1, smp.t2), b = std::max(smp.t1, smp.t2);
        int nseg = std::min(64, std::max(8, static_cast<int>((b - a) / dt_ode)));
        double integral = 0.0, prev = grad_sup_norm(u.at_time(a));
        for (int q = 1; q <= nseg; ++q) {
            double cur =
                grad_sup_norm(u.at_time(a + (b - a) * q / nseg));
            integral += 0.5 * (b - a) / nseg * (prev + cur);
            prev = cur;
        }
        double hbound = std::exp(integral);

        Vec3 y;
        Mat3 J;
        integrate(u, smp.t1, smp.t2, smp.x, dt_ode, MatrixMode::Forward, &y, &J);
        rep.worst_grad_ratio =
            std::max(rep.worst_grad_ratio, norm_inf(J) / hbound);

        // d eta / d t1 by a centered (or one-sided) difference quotient.
        double T = f.time.T, ep = dt_ode;
        double tp = std::min(T, smp.t1 + ep), tm = std::max(0.0, smp.t1 - ep);
        Mat3 Mdummy;
        Vec3 yp, ym;
        integrate(u, tp, smp.t2, smp.x, dt_ode, MatrixMode::None, &yp, &Mdummy);
        integrate(u, tm, smp.t2, smp.x, dt_ode, MatrixMode::None, &ym, &Mdummy);
        double dnorm = norm(yp - ym) / (tp - tm);
        double denom = std::max(u_sup * hbound, 1e-30);
        rep.worst_dtime_ratio = std::max(rep.worst_dtime_ratio, dnorm / denom);
    }
    rep.pass = rep.worst_grad_ratio <= 1.0 + slack &&
               rep.worst_dtime_ratio <= 1.0 + slack;
    return rep;
}

} // namespace euler
