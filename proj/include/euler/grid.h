#ifndef EULER_GRID_H
#define EULER_GRID_H

#include <cstddef>
#include <vector>

#include "euler/error.h"
#include "euler/vec3.h"

namespace euler {

// Node-centered grid on the periodic channel T^2 x [0,1]. x and y are
// periodic with n1, n2 sample points (powers of two, for the in-plane
// transforms); z holds n3 nodes including both walls, z_k = k/(n3-1).
struct Grid3 {
    int n1 = 0, n2 = 0, n3 = 0;
    double L1 = 1.0, L2 = 1.0;

    Grid3() = default;
    Grid3(int n1_, int n2_, int n3_, double L1_, double L2_);

    double h1() const { return L1 / n1; }
    double h2() const { return L2 / n2; }
    double h3() const { return 1.0 / (n3 - 1); }

    double x(int i) const { return i * h1(); }
    double y(int j) const { return j * h2(); }
    double z(int k) const { return k * h3(); }

    std::size_t size() const {
        return static_cast<std::size_t>(n1) * n2 * n3;
    }
    std::size_t plane_size() const {
        return static_cast<std::size_t>(n1) * n2;
    }
    std::size_t idx(int i, int j, int k) const {
        return static_cast<std::size_t>(k) * plane_size()
             + static_cast<std::size_t>(j) * n1 + i;
    }

    double cell_volume() const { return h1() * h2() * h3(); }
    double volume() const { return L1 * L2; }

    bool same_as(const Grid3& o) const {
        return n1 == o.n1 && n2 == o.n2 && n3 == o.n3 && L1 == o.L1 && L2 == o.L2;
    }
};

struct ScalarField3 {
    Grid3 grid;
    std::vector<double> v;

    ScalarField3() = default;
    explicit ScalarField3(const Grid3& g) : grid(g), v(g.size(), 0.0) {}

    double& at(int i, int j, int k) { return v[grid.idx(i, j, k)]; }
    double at(int i, int j, int k) const { return v[grid.idx(i, j, k)]; }
};

// Structure-of-arrays vector field.
struct VectorField3 {
    Grid3 grid;
    std::vector<double> x, y, z;

    VectorField3() = default;
    explicit VectorField3(const Grid3& g)
        : grid(g), x(g.size(), 0.0), y(g.size(), 0.0), z(g.size(), 0.0) {}

    Vec3 at(int i, int j, int k) const {
        std::size_t q = grid.idx(i, j, k);
        return {x[q], y[q], z[q]};
    }
    void set(int i, int j, int k, const Vec3& val) {
        std::size_t q = grid.idx(i, j, k);
        x[q] = val.x;
        y[q] = val.y;
        z[q] = val.z;
    }
    std::vector<double>& comp(int c) { return c == 0 ? x : (c == 1 ? y : z); }
    const std::vector<double>& comp(int c) const {
        return c == 0 ? x : (c == 1 ? y : z);
    }
};

// Uniform slice times t_m = m*dt, m = 0..nt, dt = T/nt.
struct TimeGrid {
    double T = 1.0;
    int nt = 1;

    TimeGrid() = default;
    TimeGrid(double T_, int nt_) : T(T_), nt(nt_) {
        if (T <= 0.0 || nt < 1) throw ConfigError("time grid: T > 0 and nt >= 1 required");
    }
    double dt() const { return T / nt; }
    double t(int m) const { return m * dt(); }
    int slices() const { return nt + 1; }
};

// Vector field sampled on time slices. Invariants expected of a velocity
// iterate (per-slice zero divergence, normal trace matching the background)
// are checked by the consumers that need them, not enforced by construction.
struct SpaceTimeField {
    Grid3 grid;
    TimeGrid time;
    std::vector<VectorField3> slice;

    SpaceTimeField() = default;
    SpaceTimeField(const Grid3& g, const TimeGrid& tg)
        : grid(g), time(tg), slice(tg.slices(), VectorField3(g)) {}
};

using SpaceTimeVelocity = SpaceTimeField;

bool is_power_of_two(int n);

} // namespace euler

#endif
