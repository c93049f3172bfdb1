#include "euler/channel.h"

namespace euler {

SurfacePatch wall_patch(const Grid3& g, Wall w) {
    if (w == Wall::Plus) return flat_torus_patch(g.n1, g.n2, g.L1, g.L2, 1.0);

    // Bottom wall: chart (y, x), frame (e_y, e_x, -e_z).
    SurfacePatch P = flat_torus_patch(g.n2, g.n1, g.L2, g.L1, 0.0);
    for (int i2 = 0; i2 < P.m2; ++i2)
        for (int i1 = 0; i1 < P.m1; ++i1) {
            std::size_t q = P.idx(i1, i2);
            P.pos[q] = {i2 * P.d2, i1 * P.d1, 0.0};
            P.tau1[q] = {0.0, 1.0, 0.0};
            P.tau2[q] = {1.0, 0.0, 0.0};
            P.nrm[q] = {0.0, 0.0, -1.0};
        }
    return P;
}

PatchScalar wall_scalar(const ScalarField3& f, Wall w) {
    const Grid3& g = f.grid;
    int k = wall_k(g, w);
    int m1 = w == Wall::Plus ? g.n1 : g.n2;
    int m2 = w == Wall::Plus ? g.n2 : g.n1;
    PatchScalar out(static_cast<std::size_t>(m1) * m2);
    for (int i2 = 0; i2 < m2; ++i2)
        for (int i1 = 0; i1 < m1; ++i1) {
            auto [i, j] = patch_to_grid(w, i1, i2);
            out[static_cast<std::size_t>(i2) * m1 + i1] = f.at(i, j, k);
        }
    return out;
}

PatchVector wall_tangential(const VectorField3& v, Wall w) {
    const Grid3& g = v.grid;
    int k = wall_k(g, w);
    int m1 = w == Wall::Plus ? g.n1 : g.n2;
    int m2 = w == Wall::Plus ? g.n2 : g.n1;
    PatchVector out(static_cast<std::size_t>(m1) * m2);
    for (int i2 = 0; i2 < m2; ++i2)
        for (int i1 = 0; i1 < m1; ++i1) {
            auto [i, j] = patch_to_grid(w, i1, i2);
            Vec3 val = v.at(i, j, k);
            std::size_t q = static_cast<std::size_t>(i2) * m1 + i1;
            if (w == Wall::Plus) {
                out.c1[q] = val.x;
                out.c2[q] = val.y;
            } else {
                out.c1[q] = val.y;
                out.c2[q] = val.x;
            }
        }
    return out;
}

PatchScalar wall_normal_component(const VectorField3& v, Wall w) {
    const Grid3& g = v.grid;
    int k = wall_k(g, w);
    int m1 = w == Wall::Plus ? g.n1 : g.n2;
    int m2 = w == Wall::Plus ? g.n2 : g.n1;
    double sign = w == Wall::Plus ? 1.0 : -1.0;
    PatchScalar out(static_cast<std::size_t>(m1) * m2);
    for (int i2 = 0; i2 < m2; ++i2)
        for (int i1 = 0; i1 < m1; ++i1) {
            auto [i, j] = patch_to_grid(w, i1, i2);
            out[static_cast<std::size_t>(i2) * m1 + i1] =
                sign * v.z[g.idx(i, j, k)];
        }
    return out;
}

std::vector<double> patch_to_plane(const Grid3& g, Wall w, const PatchScalar& f) {
    int m1 = w == Wall::Plus ? g.n1 : g.n2;
    int m2 = w == Wall::Plus ? g.n2 : g.n1;
    std::vector<double> plane(g.plane_size());
    for (int i2 = 0; i2 < m2; ++i2)
        for (int i1 = 0; i1 < m1; ++i1) {
            auto [i, j] = patch_to_grid(w, i1, i2);
            plane[static_cast<std::size_t>(j) * g.n1 + i] =
                f[static_cast<std::size_t>(i2) * m1 + i1];
        }
    return plane;
}

} // namespace euler
