#ifndef EULER_PRESSURE_H
#define EULER_PRESSURE_H

#include "euler/background.h"
#include "euler/channel.h"
#include "euler/fields.h"
#include "euler/poisson.h"

namespace euler {

// (u . grad u) . n for a divergence-free field, from wall traces only:
//   u^tau . grad_G u^n - u^n div_G u^tau - (kap1+kap2)(u^n)^2 - u^tau . A u^tau.
PatchScalar ugradu_normal(const SurfacePatch& P, const PatchVector& u_tau,
                          const PatchScalar& u_n);

// Derivative-free inflow form of the modified datum, valid where the normal
// trace of u is the background's:
//   2 u^tau . grad_G U^n - div_G(U^n Utau) - (kap1+kap2)(U^n)^2 - u^tau . A u^tau.
PatchScalar inflow_neumann_form(const SurfacePatch& P, const PatchVector& u_tau,
                                const PatchScalar& U_n,
                                const PatchVector& U_tau);

// N[u] on the channel walls: the derivative-free form on the inflow wall,
// the trace identity on the outflow wall. A zero-flux background turns both
// walls into impermeable components, which use the trace identity.
WallData nonlinear_neumann(const VectorField3& u, const Background& bg,
                           double t);

// (u . grad u) . n on both channel walls via the trace identity.
WallData ugradu_normal_walls(const VectorField3& u);

// Volume source shared by all three pressure problems: -grad u : (grad u)^T.
ScalarField3 pressure_source(const VectorField3& u);

struct PressureResult {
    ScalarField3 q;
    double gauss_defect = 0.0; // pre-correction Gauss compatibility defect
};

// Approximating pressure: Laplace q = -grad u : (grad u)^T with
// dq/dn = -dt U^n - N[u] and zero volume mean.
PressureResult solve_q(const VectorField3& u, const Background& bg, double t);

// True-pressure recovery for a-posteriori checks: same volume source with
// dp/dn = -dtun - (u . grad u) . n; dtun supplied per wall by the caller.
PressureResult solve_true_pressure(const VectorField3& u, const WallData& dtun);

// Compatibility pressure at t=0: the true-pressure path with dtun = dt U^n(0).
PressureResult solve_pU(const VectorField3& u0, const Background& bg);

} // namespace euler

#endif
