#ifndef EULER_FLOW_MAP_H
#define EULER_FLOW_MAP_H

#include <vector>

#include "euler/fields.h"

namespace euler {

// Characteristic tracing for the linearized transport problem. All routines
// integrate the velocity interpolant with fixed-step RK4 (substep dt_ode,
// final partial step), so results are deterministic for a given field.
//
// Backward traces stop at the first crossing of the inflow wall z=1; the
// crossing is refined by bisection on the step fraction to |z-1| <= 1e-12.

enum class Region { UMinus, UPlus, NearS };

// Where the backward characteristic through (t, x) came from.
//   UPlus:  entered through the inflow wall at time tau at point gamma.
//   UMinus: started inside the domain; gamma is the foot point at time 0.
//   NearS:  crossing time within tau_tol of 0 - handled like UMinus (the
//           compatibility condition makes both branches agree across S).
struct BoundaryTrace {
    Region region = Region::UMinus;
    double tau = 0.0;
    Vec3 gamma{};
};

struct FlowMapParams {
    double dt_ode = 1.0 / 64.0;
    double tau_tol = 2.0 / 64.0; // NearS band, default 2*dt_ode
};

// Endpoint of the characteristic through (t1, x) at time t2 (either
// direction). Backward traces are clipped at the inflow wall.
Vec3 trace(const TimeInterpolant& u, double t1, double t2, const Vec3& x,
           double dt_ode);

// grad eta(t1, t2; x): the variational equation dJ/ds = grad u(s, y) J with
// J(t1) = I, integrated alongside the trajectory to t2.
Mat3 grad_eta(const TimeInterpolant& u, double t1, double t2, const Vec3& x,
              double dt_ode);

BoundaryTrace classify(const TimeInterpolant& u, double t, const Vec3& x,
                       const FlowMapParams& p);

// Everything the Lagrangian vorticity formula needs from one backward pass
// through (t, x):
//   trace          region and exit/foot data,
//   data_jacobian  grad eta(s0, t; gamma) with s0 = tau (UPlus) or 0,
//   forcing        int_{s0}^t grad eta(s, t; y(s)) g(s, y(s)) ds (trapezoid
//                  on the substep nodes), zero when g is null.
// The Jacobian is accumulated inverse-side (dB/ds = -B grad u, B(t) = I), so
// no matrix inversions appear.
struct BackwardPath {
    BoundaryTrace trace;
    Mat3 data_jacobian;
    Vec3 forcing{};
};

BackwardPath backward_path(const TimeInterpolant& u, double t, const Vec3& x,
                           const FlowMapParams& p,
                           const TimeInterpolant* g = nullptr);

// Flow-map bound check: |grad eta(t1,t2;x)|_inf against
// h(t1,t2) = exp|int_{t1}^{t2} |grad u(s)|_inf ds| and the t1-derivative of
// eta against |u|_inf h. Traces here are not clipped (the clamped velocity
// extension is what the bound sees).
struct EtaBoundsSample {
    double t1 = 0.0, t2 = 0.0;
    Vec3 x{};
};

struct EtaBoundsReport {
    double worst_grad_ratio = 0.0;
    double worst_dtime_ratio = 0.0;
    bool pass = true;
};

EtaBoundsReport verify_eta_bounds(const TimeInterpolant& u,
                                  const std::vector<EtaBoundsSample>& samples,
                                  double dt_ode, double slack = 0.1);

} // namespace euler

#endif
