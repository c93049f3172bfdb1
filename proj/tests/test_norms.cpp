// Discrete Holder seminorm estimator and the combined iteration norm:
// trivial fixed points, the Lipschitz example, scaling/subadditivity, and a
// brute-force dense-pair oracle at double resolution.

#include <cmath>
#include <numbers>

#include "euler/fields.h"
#include "euler/norms.h"
#include "euler/rng.h"
#include "harness.h"

using namespace euler;

namespace {

constexpr double pi = std::numbers::pi;

testing::Recorder rec;

ScalarField3 sin_x_field(const Grid3& g) {
    ScalarField3 f(g);
    for (int k = 0; k < g.n3; ++k)
        for (int j = 0; j < g.n2; ++j)
            for (int i = 0; i < g.n1; ++i)
                f.at(i, j, k) = std::sin(2.0 * pi * g.x(i) / g.L1);
    return f;
}

// All-pairs seminorm with alpha = 1/2, minimum-image metric. The reference
// the subsampled estimator is measured against.
double dense_half_seminorm(const ScalarField3& f) {
    const Grid3& g = f.grid;
    std::size_t n = g.size();
    double best = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
        int ia = static_cast<int>(a) % g.n1;
        int ja = static_cast<int>(a / g.n1) % g.n2;
        int ka = static_cast<int>(a / g.plane_size());
        for (std::size_t b = a + 1; b < n; ++b) {
            int ib = static_cast<int>(b) % g.n1;
            int jb = static_cast<int>(b / g.n1) % g.n2;
            int kb = static_cast<int>(b / g.plane_size());
            double dx = std::fabs(ia - ib) * g.h1();
            dx = std::min(dx, g.L1 - dx);
            double dy = std::fabs(ja - jb) * g.h2();
            dy = std::min(dy, g.L2 - dy);
            double dz = (ka - kb) * g.h3();
            double d = std::sqrt(dx * dx + dy * dy + dz * dz);
            best = std::max(best, std::fabs(f.v[a] - f.v[b]) / std::sqrt(d));
        }
    }
    return best;
}

void test_spatial_seminorm() {
    Grid3 g(16, 4, 9, 2.0, 1.0);

    ScalarField3 c(g);
    c.v.assign(g.size(), 4.2);
    rec.check_le("seminorm of a constant is zero", holder_seminorm(c, 0.5), 0.0);

    ScalarField3 f = sin_x_field(g);
    double est = holder_seminorm(f, 0.5);
    Grid3 g2(32, 8, 17, 2.0, 1.0);
    double oracle = dense_half_seminorm(sin_x_field(g2));
    rec.check_le("estimator within 5% of dense double-resolution oracle",
                 std::fabs(est - oracle) / oracle, 0.05);

    double scaled = holder_seminorm([&] {
        ScalarField3 h(g);
        for (std::size_t q = 0; q < g.size(); ++q) h.v[q] = -3.7 * f.v[q];
        return h;
    }(), 0.5);
    rec.check_le("seminorm scales with |c|",
                 std::fabs(scaled - 3.7 * est) / (3.7 * est), 1e-12);

    // Subadditivity over the shared pair set.
    Rng rng(99);
    ScalarField3 a(g), b(g), sum(g);
    for (std::size_t q = 0; q < g.size(); ++q) {
        a.v[q] = rng.uniform(-1.0, 1.0);
        b.v[q] = rng.uniform(-1.0, 1.0);
        sum.v[q] = a.v[q] + b.v[q];
    }
    rec.check_le("seminorm is subadditive", holder_seminorm(sum, 0.5),
                 holder_seminorm(a, 0.5) + holder_seminorm(b, 0.5) + 1e-12);

    bool threw = false;
    try {
        holder_seminorm(c, 1.5);
    } catch (const InputError&) {
        threw = true;
    }
    rec.record("alpha outside (0,1] rejected", threw);
}

void test_time_seminorm_and_x_norm() {
    Grid3 g(8, 4, 9, 1.0, 1.0);
    TimeGrid tg(1.0, 4);

    // u = (t, 0, 0): Lipschitz constant 1 on the time axis.
    SpaceTimeField u(g, tg);
    for (int m = 0; m < tg.slices(); ++m)
        u.slice[m].x.assign(g.size(), tg.t(m));
    rec.check_near("f(t) = t has unit Lipschitz seminorm",
                   holder_seminorm(u, 1.0, HolderAxis::Time), 1.0, 1e-12);
    rec.check_le("time-constant spatial axis unaffected",
                 holder_seminorm(u, 0.5, HolderAxis::Space), 0.0);

    SpaceTimeField zero(g, tg);
    rec.check_le("x_norm of zero", x_norm(zero, 0.5, 0.5), 0.0);

    SpaceTimeField cst(g, tg);
    for (int m = 0; m < tg.slices(); ++m) cst.slice[m].y.assign(g.size(), -2.5);
    rec.check_near("x_norm of a constant is its sup", x_norm(cst, 0.5, 0.5), 2.5,
                   0.0);

    // Decomposition: x_norm is exactly the sum of its two pieces.
    SpaceTimeField w(g, tg);
    Rng rng(7);
    for (int m = 0; m < tg.slices(); ++m)
        for (int kk = 0; kk < g.n3; ++kk)
            for (int j = 0; j < g.n2; ++j)
                for (int i = 0; i < g.n1; ++i)
                    w.slice[m].set(i, j, kk,
                                   {std::sin(2.0 * pi * g.x(i) + tg.t(m)),
                                    rng.uniform(-0.1, 0.1),
                                    std::cos(2.0 * pi * g.y(j)) * g.z(kk)});
    SpaceTimeField cw(g, tg);
    for (int m = 0; m < tg.slices(); ++m) cw.slice[m] = curl3(w.slice[m]);
    double parts = holder_norm(w, 0.4).total() + holder_norm(cw, 0.6).total();
    rec.check_le("x_norm equals the sum of its component norms",
                 std::fabs(x_norm(w, 0.4, 0.6) - parts), 0.0);

    bool threw = false;
    try {
        x_norm(w, 0.4, 1.0);
    } catch (const InputError&) {
        threw = true;
    }
    rec.record("x_norm rejects exponents outside (0,1)", threw);
}

} // namespace

int main() {
    test_spatial_seminorm();
    test_time_seminorm_and_x_norm();
    return rec.finish("test_norms");
}
