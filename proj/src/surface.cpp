#include "euler/surface.h"

#include <cmath>
#include <numbers>

#include "euler/fft.h"

namespace euler {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// 4th-order first derivative along one line; one-sided closures at
// non-periodic ends.
void fd4_line(const double* f, double* out, int n, double h, int stride,
              bool periodic) {
    auto get = [&](int i) { return f[static_cast<std::ptrdiff_t>(i) * stride]; };
    auto put = [&](int i, double v) {
        out[static_cast<std::ptrdiff_t>(i) * stride] = v;
    };
    double s = 1.0 / (12.0 * h);
    if (periodic) {
        for (int i = 0; i < n; ++i) {
            int im2 = (i - 2 + 2 * n) % n, im1 = (i - 1 + n) % n;
            int ip1 = (i + 1) % n, ip2 = (i + 2) % n;
            put(i, s * (-get(ip2) + 8.0 * get(ip1) - 8.0 * get(im1) + get(im2)));
        }
        return;
    }
    put(0, s * (-25.0 * get(0) + 48.0 * get(1) - 36.0 * get(2) + 16.0 * get(3)
                - 3.0 * get(4)));
    put(1, s * (-3.0 * get(0) - 10.0 * get(1) + 18.0 * get(2) - 6.0 * get(3)
                + get(4)));
    for (int i = 2; i < n - 2; ++i)
        put(i, s * (-get(i + 2) + 8.0 * get(i + 1) - 8.0 * get(i - 1) + get(i - 2)));
    int e = n - 1;
    put(e - 1, s * (3.0 * get(e) + 10.0 * get(e - 1) - 18.0 * get(e - 2)
                    + 6.0 * get(e - 3) - get(e - 4)));
    put(e, s * (25.0 * get(e) - 48.0 * get(e - 1) + 36.0 * get(e - 2)
                - 16.0 * get(e - 3) + 3.0 * get(e - 4)));
}

void require_resolution(const SurfacePatch& P) {
    if (P.m1 < 5 || P.m2 < 5)
        throw ConfigError("surface patch: need at least 5 nodes per direction "
                          "for the derivative stencils");
}

} // namespace

void SurfacePatch::validate_frames(double tol) const {
    for (std::size_t q = 0; q < size(); ++q) {
        const Vec3 &t1 = tau1[q], &t2 = tau2[q], &n = nrm[q];
        if (std::fabs(norm(t1) - 1.0) > tol || std::fabs(norm(t2) - 1.0) > tol ||
            std::fabs(norm(n) - 1.0) > tol)
            throw InputError("surface patch: frame vectors not unit length");
        if (std::fabs(dot(t1, t2)) > tol || std::fabs(dot(t1, n)) > tol ||
            std::fabs(dot(t2, n)) > tol)
            throw InputError("surface patch: frame not orthogonal");
        if (norm(cross(t1, t2) - n) > tol)
            throw InputError("surface patch: frame not right-handed");
        if (a1[q] <= 0.0 || a2[q] <= 0.0)
            throw InputError("surface patch: metric factors must be positive");
    }
}

namespace {

SurfacePatch allocate_patch(int m1, int m2) {
    SurfacePatch P;
    P.m1 = m1;
    P.m2 = m2;
    std::size_t n = static_cast<std::size_t>(m1) * m2;
    P.pos.resize(n);
    P.tau1.resize(n);
    P.tau2.resize(n);
    P.nrm.resize(n);
    P.a1.assign(n, 1.0);
    P.a2.assign(n, 1.0);
    P.kap1.assign(n, 0.0);
    P.kap2.assign(n, 0.0);
    return P;
}

} // namespace

SurfacePatch flat_torus_patch(int m1, int m2, double P1, double P2, double z0) {
    SurfacePatch P = allocate_patch(m1, m2);
    P.periodic1 = P.periodic2 = true;
    P.spectral = true;
    P.period1 = P1;
    P.period2 = P2;
    P.d1 = P1 / m1;
    P.d2 = P2 / m2;
    for (int i2 = 0; i2 < m2; ++i2)
        for (int i1 = 0; i1 < m1; ++i1) {
            std::size_t q = P.idx(i1, i2);
            P.pos[q] = {i1 * P.d1, i2 * P.d2, z0};
            P.tau1[q] = {1.0, 0.0, 0.0};
            P.tau2[q] = {0.0, 1.0, 0.0};
            P.nrm[q] = {0.0, 0.0, 1.0};
        }
    return P;
}

SurfacePatch sphere_band_patch(double R, double theta0, double theta1,
                               int m_theta, int m_phi) {
    SurfacePatch P = allocate_patch(m_theta, m_phi);
    P.periodic1 = false;
    P.periodic2 = true;
    P.spectral = false;
    P.period2 = two_pi;
    P.d1 = (theta1 - theta0) / (m_theta - 1);
    P.d2 = two_pi / m_phi;
    for (int i2 = 0; i2 < m_phi; ++i2)
        for (int i1 = 0; i1 < m_theta; ++i1) {
            std::size_t q = P.idx(i1, i2);
            double th = theta0 + i1 * P.d1, ph = i2 * P.d2;
            double st = std::sin(th), ct = std::cos(th);
            double sp = std::sin(ph), cp = std::cos(ph);
            P.pos[q] = {R * st * cp, R * st * sp, R * ct};
            P.tau1[q] = {ct * cp, ct * sp, -st};
            P.tau2[q] = {-sp, cp, 0.0};
            P.nrm[q] = {st * cp, st * sp, ct};
            P.a1[q] = R;
            P.a2[q] = R * st;
            P.kap1[q] = 1.0 / R;
            P.kap2[q] = 1.0 / R;
        }
    return P;
}

SurfacePatch cylinder_band_patch(double R, double s0, double s1, int m_phi,
                                 int m_s) {
    SurfacePatch P = allocate_patch(m_phi, m_s);
    P.periodic1 = true;
    P.periodic2 = false;
    P.spectral = false;
    P.period1 = two_pi;
    P.d1 = two_pi / m_phi;
    P.d2 = (s1 - s0) / (m_s - 1);
    for (int i2 = 0; i2 < m_s; ++i2)
        for (int i1 = 0; i1 < m_phi; ++i1) {
            std::size_t q = P.idx(i1, i2);
            double ph = i1 * P.d1, s = s0 + i2 * P.d2;
            double sp = std::sin(ph), cp = std::cos(ph);
            P.pos[q] = {R * cp, R * sp, s};
            P.tau1[q] = {-sp, cp, 0.0};
            P.tau2[q] = {0.0, 0.0, 1.0};
            P.nrm[q] = {cp, sp, 0.0};
            P.a1[q] = R;
            P.a2[q] = 1.0;
            P.kap1[q] = 1.0 / R;
            P.kap2[q] = 0.0;
        }
    return P;
}

std::pair<double, Vec3> tangential_decompose(const Vec3& v, const Vec3& n) {
    double vn = dot(v, n);
    return {vn, v - vn * n};
}

Vec3 perp(const Vec3& v_tau, const Vec3& n, double tangency_tol) {
    double scale = std::max(1.0, norm(v_tau));
    if (std::fabs(dot(v_tau, n)) > tangency_tol * scale)
        throw InputError("perp: input has a normal component");
    return cross(n, v_tau);
}

PatchVector perp(const PatchVector& v) {
    PatchVector out(v.c1.size());
    for (std::size_t q = 0; q < v.c1.size(); ++q) {
        out.c1[q] = -v.c2[q];
        out.c2[q] = v.c1[q];
    }
    return out;
}

PatchScalar patch_derivative(const SurfacePatch& P, const PatchScalar& f,
                             int direction) {
    require_resolution(P);
    if (f.size() != P.size())
        throw InputError("patch_derivative: field size mismatch");
    PatchScalar out(P.size());
    if (P.spectral) {
        std::vector<double> d;
        plane_spectral_derivatives(P.m1, P.m2, P.period1, P.period2, f,
                                   direction == 0 ? &d : nullptr,
                                   direction == 0 ? nullptr : &d);
        return d;
    }
    if (direction == 0) {
        for (int i2 = 0; i2 < P.m2; ++i2)
            fd4_line(f.data() + P.idx(0, i2), out.data() + P.idx(0, i2), P.m1,
                     P.d1, 1, P.periodic1);
    } else {
        for (int i1 = 0; i1 < P.m1; ++i1)
            fd4_line(f.data() + P.idx(i1, 0), out.data() + P.idx(i1, 0), P.m2,
                     P.d2, P.m1, P.periodic2);
    }
    return out;
}

PatchVector grad_gamma(const SurfacePatch& P, const PatchScalar& f) {
    PatchScalar g1 = patch_derivative(P, f, 0);
    PatchScalar g2 = patch_derivative(P, f, 1);
    PatchVector out(P.size());
    for (std::size_t q = 0; q < P.size(); ++q) {
        out.c1[q] = g1[q] / P.a1[q];
        out.c2[q] = g2[q] / P.a2[q];
    }
    return out;
}

PatchScalar div_gamma(const SurfacePatch& P, const PatchVector& v) {
    if (v.c1.size() != P.size())
        throw InputError("div_gamma: field size mismatch");
    PatchScalar t1(P.size()), t2(P.size());
    for (std::size_t q = 0; q < P.size(); ++q) {
        t1[q] = P.a2[q] * v.c1[q];
        t2[q] = P.a1[q] * v.c2[q];
    }
    PatchScalar d1 = patch_derivative(P, t1, 0);
    PatchScalar d2 = patch_derivative(P, t2, 1);
    PatchScalar out(P.size());
    for (std::size_t q = 0; q < P.size(); ++q)
        out[q] = (d1[q] + d2[q]) / (P.a1[q] * P.a2[q]);
    return out;
}

PatchScalar curl_gamma(const SurfacePatch& P, const PatchVector& v) {
    PatchScalar d = div_gamma(P, perp(v));
    for (double& x : d) x = -x;
    return d;
}

PatchVector shape_apply(const SurfacePatch& P, const PatchVector& v) {
    PatchVector out(P.size());
    for (std::size_t q = 0; q < P.size(); ++q) {
        out.c1[q] = P.kap1[q] * v.c1[q];
        out.c2[q] = P.kap2[q] * v.c2[q];
    }
    return out;
}

Vec3 cross_tangential(const Vec3& u, const Vec3& v, const Vec3& n) {
    auto [un, ut] = tangential_decompose(u, n);
    auto [vn, vt] = tangential_decompose(v, n);
    return un * cross(n, vt) - vn * cross(n, ut);
}

double patch_integral(const SurfacePatch& P, const PatchScalar& f) {
    if (f.size() != P.size())
        throw InputError("patch_integral: field size mismatch");
    double sum = 0.0;
    for (int i2 = 0; i2 < P.m2; ++i2) {
        double w2 = (!P.periodic2 && (i2 == 0 || i2 == P.m2 - 1)) ? 0.5 : 1.0;
        for (int i1 = 0; i1 < P.m1; ++i1) {
            double w1 = (!P.periodic1 && (i1 == 0 || i1 == P.m1 - 1)) ? 0.5 : 1.0;
            std::size_t q = P.idx(i1, i2);
            sum += w1 * w2 * f[q] * P.a1[q] * P.a2[q];
        }
    }
    return sum * P.d1 * P.d2;
}

Vec3 patch_vec3(const SurfacePatch& P, std::size_t q, double c1, double c2) {
    return c1 * P.tau1[q] + c2 * P.tau2[q];
}

std::pair<double, double> patch_components(const SurfacePatch& P, std::size_t q,
                                           const Vec3& v_tau) {
    return {dot(v_tau, P.tau1[q]), dot(v_tau, P.tau2[q])};
}

} // namespace euler
