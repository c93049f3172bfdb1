#ifndef EULER_BIOT_SAVART_H
#define EULER_BIOT_SAVART_H

#include <vector>

#include "euler/background.h"
#include "euler/fields.h"
#include "euler/grid.h"

namespace euler {

// Mean horizontal velocities spanning the harmonic space on the channel:
// curl-free + divergence-free + tangent forces a constant horizontal field,
// so the harmonic component is exactly (c1, c2, 0).
struct HarmonicComponent {
    double c1 = 0.0, c2 = 0.0;
};

// How far omega sits from the discrete range of the curl: the volume sup of
// div omega and the area integral of omega.n over each wall.
struct CurlRangeDefect {
    double div_inf = 0.0;
    double flux_plus = 0.0;
    double flux_minus = 0.0;
    double worst() const;
};

CurlRangeDefect curl_range_defect(const VectorField3& omega);

// Biot-Savart operator: the unique v0 with curl v0 = omega, div v0 = 0,
// v0.n = 0 on the walls and zero horizontal mean. Solved per horizontal
// Fourier mode: a Dirichlet Helmholtz problem for the vertical component,
// the horizontal components recovered algebraically so the discrete
// divergence vanishes identically; the zero mode integrates the curl
// relations in z and has its harmonic content removed. Throws an input
// error when curl_range_defect(omega) exceeds range_tol.
VectorField3 biot_savart(const VectorField3& omega, double range_tol = 1e-6);

// u = K[omega] + background + harmonic component.
VectorField3 recover_velocity(const VectorField3& omega, const Background& bg,
                              double t, const HarmonicComponent& hc,
                              double range_tol = 1e-6);

// Orthogonal projection onto divergence-free fields tangent to the walls:
// subtracts grad(phi) where phi solves the Neumann problem with source
// div(w) and data w.n. Keeps the harmonic component: horizontal means pass
// through untouched (the gradient of a periodic scalar has none).
VectorField3 project_h(const VectorField3& w);

// Horizontal volume means (the harmonic projection P_{H_c}).
HarmonicComponent horizontal_mean(const VectorField3& w);

// Harmonic component of the linearized solution:
//   c(t) = P_{H_c} u0 + int_0^t P_{H_c} f - int_0^t P_{H_c} P_H(Omega(s) u(s)),
// with Omega := grad K[omega] - (grad K[omega])^T and u the transporting
// velocity. Advanced by trapezoid over the shared slice grid; the result has
// one entry per slice. The integrand does not depend on c itself: the
// columns of Omega restricted to horizontal means vanish, a property the
// tests pin down rather than assume.
std::vector<HarmonicComponent> harmonic_evolve(const VectorField3& u0,
                                               const SpaceTimeField& f,
                                               const SpaceTimeField& omega,
                                               const SpaceTimeField& u,
                                               double range_tol = 1e-6);

} // namespace euler

#endif
