#include "euler/background.h"

#include <cmath>

#include "euler/error.h"

namespace euler {

Background::Background(double a0, double amp, double freq)
    : a0_(a0), amp_(amp), freq_(freq) {}

Background Background::tw_constant(double U_I) {
    if (!(U_I > 0.0))
        throw ConfigError("background: constant flux speed must be positive");
    return Background(U_I, 0.0, 0.0);
}

Background Background::time_varying(double a0, double amp, double freq) {
    if (!(a0 - std::fabs(amp) > 0.0))
        throw ConfigError(
            "background: time-varying flux must keep a fixed sign");
    return Background(a0, amp, freq);
}

Background Background::impermeable() { return Background(0.0, 0.0, 0.0); }

double Background::speed(double t) const {
    return a0_ + amp_ * std::sin(freq_ * t);
}

double Background::speed_dt(double t) const {
    return amp_ * freq_ * std::cos(freq_ * t);
}

double Background::speed_dtt(double t) const {
    return -amp_ * freq_ * freq_ * std::sin(freq_ * t);
}

VectorField3 Background::slice(const Grid3& g, double t) const {
    VectorField3 out(g);
    double w = -speed(t);
    for (std::size_t q = 0; q < g.size(); ++q) out.z[q] = w;
    return out;
}

double Background::normal_trace(Wall w, double t) const {
    return w == Wall::Plus ? -speed(t) : speed(t);
}

double Background::normal_trace_dt(Wall w, double t) const {
    return w == Wall::Plus ? -speed_dt(t) : speed_dt(t);
}

double Background::normal_trace_dtt(Wall w, double t) const {
    return w == Wall::Plus ? -speed_dtt(t) : speed_dtt(t);
}

PatchVector Background::tangential_trace(const Grid3& g, Wall, double) const {
    return PatchVector(g.plane_size());
}

} // namespace euler
