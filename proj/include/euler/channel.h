#ifndef EULER_CHANNEL_H
#define EULER_CHANNEL_H

#include "euler/grid.h"
#include "euler/surface.h"

namespace euler {

// Flat doubly-periodic channel T^2 x [0,1]. The top wall z=1 is the inflow
// component (outward normal +e_z, normal velocity < 0 there), the bottom
// wall z=0 the outflow component (outward normal -e_z, normal velocity > 0).
// Impermeable mode turns both walls into zero-flux components.
struct ChannelDomain {
    double L1 = 1.0, L2 = 1.0;
    bool impermeable = false;
};

enum class Wall { Plus, Minus }; // z = 1 (inflow), z = 0 (outflow)

inline int wall_k(const Grid3& g, Wall w) { return w == Wall::Plus ? g.n3 - 1 : 0; }
inline Vec3 wall_normal(Wall w) {
    return w == Wall::Plus ? Vec3{0.0, 0.0, 1.0} : Vec3{0.0, 0.0, -1.0};
}

// Wall charts with right-handed frames. The top wall chart is (x, y) with
// frame (e_x, e_y, e_z); the bottom wall chart is (y, x) with frame
// (e_y, e_x, -e_z). Patch node (i1, i2) therefore maps to horizontal grid
// index (i, j) = (i1, i2) on the top wall and (i2, i1) on the bottom.
SurfacePatch wall_patch(const Grid3& g, Wall w);

// Horizontal grid index of a patch node.
inline std::pair<int, int> patch_to_grid(Wall w, int i1, int i2) {
    return w == Wall::Plus ? std::make_pair(i1, i2) : std::make_pair(i2, i1);
}

// Extract the wall trace of a volume scalar into patch layout.
PatchScalar wall_scalar(const ScalarField3& f, Wall w);

// Tangential components (in the patch frame) and normal component of a
// volume vector field's wall trace.
PatchVector wall_tangential(const VectorField3& v, Wall w);
PatchScalar wall_normal_component(const VectorField3& v, Wall w);

// Scatter a patch scalar back onto the wall plane of a volume-shaped plane
// array value[i + n1*j].
std::vector<double> patch_to_plane(const Grid3& g, Wall w, const PatchScalar& f);

} // namespace euler

#endif
