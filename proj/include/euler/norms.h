#ifndef EULER_NORMS_H
#define EULER_NORMS_H

#include "euler/grid.h"

namespace euler {

// Discrete Holder seminorms: maxima of |f(p)-f(q)| / d(p,q)^alpha over grid
// pairs. Pairs along axis lines are enumerated completely (with the periodic
// minimum-image distance in x and y); cross-direction pairs are subsampled
// deterministically to O(N log N). These are estimators of the continuum
// seminorms and are used as diagnostics, not results.
enum class HolderAxis { Time, Space };

struct HolderNorm {
    double alpha = 0.0;
    double seminorm_time = 0.0;
    double seminorm_space = 0.0;
    double sup = 0.0;

    double total() const { return sup + seminorm_time + seminorm_space; }
};

// Spatial seminorm of a single slice.
double holder_seminorm(const ScalarField3& f, double alpha);
double holder_seminorm(const VectorField3& f, double alpha);

// Axis-restricted seminorm of a space-time field: Time compares slices at
// fixed spatial points, Space takes the max of the slice seminorms.
double holder_seminorm(const SpaceTimeField& u, double alpha, HolderAxis axis);

HolderNorm holder_norm(const SpaceTimeField& u, double alpha);

// Iteration diagnostic: C^{beta1} norm of u plus C^{beta2} norm of curl u,
// each norm being sup + both axis seminorms.
double x_norm(const SpaceTimeField& u, double beta1, double beta2);

} // namespace euler

#endif
