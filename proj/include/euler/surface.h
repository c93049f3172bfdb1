#ifndef EULER_SURFACE_H
#define EULER_SURFACE_H

#include <utility>
#include <vector>

#include "euler/error.h"
#include "euler/vec3.h"

namespace euler {

// A boundary patch sampled on a tensor grid in principal-curvature
// coordinates (xi1, xi2). Stored per node: position, the orthonormal frame
// (tau1, tau2, n) with tau1 x tau2 = n, metric factors a1, a2 > 0 and
// principal curvatures kap1, kap2 (directional derivative of n along tau_i
// equals kap_i tau_i). Tangent fields live in tau components:
//   v = c1 tau1 + c2 tau2.
struct SurfacePatch {
    int m1 = 0, m2 = 0;
    double d1 = 0.0, d2 = 0.0;       // parameter-space spacings
    bool periodic1 = false, periodic2 = false;
    bool spectral = false;           // Fourier derivatives (flat periodic charts)
    double period1 = 0.0, period2 = 0.0;

    std::vector<Vec3> pos, tau1, tau2, nrm;
    std::vector<double> a1, a2, kap1, kap2;

    std::size_t idx(int i1, int i2) const {
        return static_cast<std::size_t>(i2) * m1 + i1;
    }
    std::size_t size() const { return static_cast<std::size_t>(m1) * m2; }

    // Orthonormality and right-handedness of every stored frame.
    void validate_frames(double tol = 1e-12) const;
};

using PatchScalar = std::vector<double>;
struct PatchVector {
    std::vector<double> c1, c2;

    PatchVector() = default;
    explicit PatchVector(std::size_t n) : c1(n, 0.0), c2(n, 0.0) {}
};

// Analytic test charts.
SurfacePatch flat_torus_patch(int m1, int m2, double P1, double P2,
                              double z0 = 0.0);
// Polar band of the radius-R sphere: xi1 = polar angle in [theta0, theta1],
// xi2 = azimuth (periodic). Outward normal, kap1 = kap2 = 1/R.
SurfacePatch sphere_band_patch(double R, double theta0, double theta1,
                               int m_theta, int m_phi);
// Axial band of the radius-R cylinder: xi1 = azimuth (periodic),
// xi2 = axial coordinate in [s0, s1]. kap1 = 1/R, kap2 = 0.
SurfacePatch cylinder_band_patch(double R, double s0, double s1,
                                 int m_phi, int m_s);

// v = v_n n + v_tau with v_tau.n = 0.
std::pair<double, Vec3> tangential_decompose(const Vec3& v, const Vec3& n);

// Quarter turn of a tangent vector around the normal: n x v. Applying it
// twice negates. The 3D form checks tangency; the component form
// (c1, c2) -> (-c2, c1) is exact by construction.
Vec3 perp(const Vec3& v_tau, const Vec3& n, double tangency_tol = 1e-10);
PatchVector perp(const PatchVector& v);

// Surface gradient of a scalar: (1/a1) d1 f tau1 + (1/a2) d2 f tau2.
PatchVector grad_gamma(const SurfacePatch& P, const PatchScalar& f);

// Surface divergence: (1/(a1 a2)) [d1(a2 v1) + d2(a1 v2)].
PatchScalar div_gamma(const SurfacePatch& P, const PatchVector& v);

// Surface curl: -div_gamma(perp v) = (1/(a1 a2)) [d1(a2 v2) - d2(a1 v1)];
// equals (curl V).n for any extension V and integrates to zero over a
// closed component.
PatchScalar curl_gamma(const SurfacePatch& P, const PatchVector& v);

// Shape operator: v -> kap1 v1 tau1 + kap2 v2 tau2.
PatchVector shape_apply(const SurfacePatch& P, const PatchVector& v);

// Tangential part of u x v: u_n perp(v_tau) - v_n perp(u_tau).
Vec3 cross_tangential(const Vec3& u, const Vec3& v, const Vec3& n);

// Tensor trapezoid with area element a1 a2 (rectangle weights along
// periodic directions).
double patch_integral(const SurfacePatch& P, const PatchScalar& f);

// Frame conversions at one node.
Vec3 patch_vec3(const SurfacePatch& P, std::size_t q, double c1, double c2);
std::pair<double, double> patch_components(const SurfacePatch& P, std::size_t q,
                                           const Vec3& v_tau);

// Parameter-space derivative along one direction (spectral or 4th-order
// finite differences per the patch configuration). Exposed for tests.
PatchScalar patch_derivative(const SurfacePatch& P, const PatchScalar& f,
                             int direction);

} // namespace euler

#endif
