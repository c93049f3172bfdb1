#ifndef EULER_BACKGROUND_H
#define EULER_BACKGROUND_H

#include "euler/channel.h"
#include "euler/grid.h"
#include "euler/surface.h"

namespace euler {

// Background flow on the channel: a divergence-free, curl-free field
// carrying the prescribed wall fluxes, plus its tangential trace on the
// inflow wall. Presets are analytic, so every trace and time derivative is
// exact: the field is (0, 0, -a(t)) with a(t) = a0 + amp*sin(freq t).
// The impermeable preset has a = 0 (both walls become zero-flux).
class Background {
public:
    // Steady downward flux of speed U_I > 0.
    static Background tw_constant(double U_I);
    // a(t) = a0 + amp*sin(freq t), required positive: a0 - |amp| > 0.
    static Background time_varying(double a0, double amp, double freq);
    static Background impermeable();

    bool zero_flux() const { return a0_ == 0.0; }

    double speed(double t) const;     // a(t)
    double speed_dt(double t) const;  // a'(t)
    double speed_dtt(double t) const; // a''(t)

    Vec3 value(double t) const { return {0.0, 0.0, -speed(t)}; }
    VectorField3 slice(const Grid3& g, double t) const;

    // U^n = U.n on a wall: -a(t) on the inflow wall, +a(t) on the outflow
    // wall, and its time derivative.
    double normal_trace(Wall w, double t) const;
    double normal_trace_dt(Wall w, double t) const;
    double normal_trace_dtt(Wall w, double t) const;

    // Tangential trace in the wall patch frame (identically zero for the
    // presets; kept as a field so consumers stay trace-driven).
    PatchVector tangential_trace(const Grid3& g, Wall w, double t) const;

private:
    Background(double a0, double amp, double freq);
    double a0_ = 0.0, amp_ = 0.0, freq_ = 0.0;
};

} // namespace euler

#endif
