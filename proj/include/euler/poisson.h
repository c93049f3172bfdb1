#ifndef EULER_POISSON_H
#define EULER_POISSON_H

#include <vector>

#include "euler/fft.h"
#include "euler/grid.h"

namespace euler {

// Scalar data on the two walls, plane layout value[i + n1*j].
struct WallData {
    std::vector<double> bottom; // z = 0 (outward normal -e_z)
    std::vector<double> top;    // z = 1 (outward normal +e_z)
};

WallData zero_wall_data(const Grid3& g);

// Solve  Laplace q = source  with  dq/dn = data  on the walls and zero
// volume mean: spectral in the plane, second-order differences in z with
// ghost-node elimination for the Neumann rows. The Gauss defect
//   int_Gamma dq/dn - int_Omega source
// is split evenly between the walls before solving, making the singular
// horizontal-mean mode consistent; its pre-correction value is reported
// through defect when non-null.
ScalarField3 solve_neumann_poisson(const ScalarField3& source,
                                   const WallData& data,
                                   double* defect = nullptr);

// Max row residual of the discrete system solve_neumann_poisson solved,
// including the boundary rows with the defect-corrected data. The solver's
// exactness invariant is residual <= 1e-10 at desk scales.
double neumann_residual(const ScalarField3& q, const ScalarField3& source,
                        const WallData& data);

// One-mode Helmholtz solve (d^2/dz^2 - kappa2) v = s on n3 nodes with
// spacing h and Dirichlet end values. s may be null (homogeneous).
void helmholtz_dirichlet_mode(int n3, double h, double kappa2, const cplx* s,
                              cplx vbot, cplx vtop, cplx* v);

} // namespace euler

#endif
