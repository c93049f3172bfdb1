#ifndef EULER_TRANSPORT_H
#define EULER_TRANSPORT_H

#include <array>
#include <vector>

#include "euler/biot_savart.h"
#include "euler/fields.h"
#include "euler/flow_map.h"

namespace euler {

// Vector data on the inflow wall z=1: one horizontal plane per time slice,
// plane layout i + n1*j as in Grid3. Off-sample evaluation is cubic in x and
// y (periodic) and Lagrange-cubic through the nearest slices in t, so data
// polynomial of degree <= 3 in t is reproduced exactly.
struct InflowSeries {
    Grid3 grid;
    TimeGrid time;
    std::vector<std::array<std::vector<double>, 3>> slice;

    InflowSeries() = default;
    InflowSeries(const Grid3& g, const TimeGrid& tg);

    Vec3 at(int m, int i, int j) const;
    void set(int m, int i, int j, const Vec3& v);

    // H(t, x, y); t must lie in the data window [0, T] (up to roundoff).
    Vec3 sample(double t, double x, double y) const;
};

// The linearized vorticity problem with the transporting velocity frozen:
//   dw/dt + (u.grad) w - (w.grad) u = curl f,  w(0) = omega0,  w|_{z=1} = H.
// Pointers are non-owning. inflow may be null when no backward
// characteristic reaches the inflow wall (zero-flux background); curl_f may
// be null when the body force is curl-free.
struct TransportProblem {
    const SpaceTimeVelocity* u = nullptr;
    const VectorField3* omega0 = nullptr;
    const InflowSeries* inflow = nullptr;
    const SpaceTimeField* curl_f = nullptr;
    FlowMapParams ode;
};

// Lagrangian solution on the slices of u's time grid. Per point, one
// backward pass yields the region, the data Jacobian and the forcing
// integral; the value is jacobian * data + forcing with the data read at
// the time-0 foot (interior origin) or from the inflow series at the wall
// crossing. Slice 0 is omega0 itself.
SpaceTimeField lagrangian_solve(const TransportProblem& p);

// Weak residual of dw/dt + div(w tensor u) - (w.grad) u = curl f against a
// fixed bank of smooth separable space-time test functions that vanish (with
// their z-derivative) at the walls and at t = 0, T. Each pairing is
// integrated by parts in t and in the advection term, evaluated with the
// trapezoid rule, and normalized by the H1 norm of the test function; the
// return value is the largest magnitude over the bank. curl_f may be null.
double weak_residual(const SpaceTimeField& omega, const SpaceTimeVelocity& u,
                     const SpaceTimeField* curl_f = nullptr);

// Per-slice range-of-curl diagnostics with a verdict against one tolerance.
struct RangeOfCurlReport {
    double tol = 0.0;
    bool pass = true;
    std::vector<CurlRangeDefect> slice;
    double worst() const;
};

RangeOfCurlReport range_of_curl_check(const SpaceTimeField& omega, double tol);

} // namespace euler

#endif
