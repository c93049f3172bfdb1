#include "euler/poisson.h"

#include <cmath>

#include "euler/error.h"

namespace euler {

namespace {

// Thomas algorithm for a tridiagonal system with real coefficients and
// complex right-hand side; solves in place. No pivoting: every system here
// is (after symmetrization) negative definite or has a pinned first row.
void tridiag(int n, const double* sub, const double* diag, const double* sup,
             cplx* rhs, std::vector<double>& scratch) {
    scratch.resize(n);
    scratch[0] = sup[0] / diag[0];
    rhs[0] /= diag[0];
    for (int i = 1; i < n; ++i) {
        double m = diag[i] - sub[i] * scratch[i - 1];
        scratch[i] = sup[i] / m;
        rhs[i] = (rhs[i] - sub[i] * rhs[i - 1]) / m;
    }
    for (int i = n - 2; i >= 0; --i) rhs[i] -= scratch[i] * rhs[i + 1];
}

// Trapezoid over the z-profile, spacing h.
cplx trapz(const cplx* f, int n, double h) {
    cplx s = 0.5 * (f[0] + f[n - 1]);
    for (int k = 1; k < n - 1; ++k) s += f[k];
    return s * h;
}

void require_wall_shapes(const Grid3& g, const WallData& d) {
    if (d.bottom.size() != g.plane_size() || d.top.size() != g.plane_size())
        throw InputError("wall data does not match the horizontal grid");
}

} // namespace

WallData zero_wall_data(const Grid3& g) {
    return {std::vector<double>(g.plane_size(), 0.0),
            std::vector<double>(g.plane_size(), 0.0)};
}

ScalarField3 solve_neumann_poisson(const ScalarField3& source,
                                   const WallData& data, double* defect) {
    const Grid3& g = source.grid;
    require_wall_shapes(g, data);
    const int n1 = g.n1, n2 = g.n2, n3 = g.n3;
    const double h = g.h3(), h2 = h * h;
    const std::size_t pl = g.plane_size();

    std::vector<cplx> modes = fft_planes_forward(source);
    PlaneFFT fft(n1, n2, g.L1, g.L2);
    std::vector<cplx> bhat(pl), that(pl);
    fft.forward(data.bottom.data(), bhat.data());
    fft.forward(data.top.data(), that.data());

    std::vector<double> sub(n3), dia(n3), sup(n3), scratch;
    std::vector<cplx> rhs(n3);

    for (int q2 = 0; q2 < n2; ++q2) {
        for (int q1 = 0; q1 < n1; ++q1) {
            std::size_t qp = static_cast<std::size_t>(q2) * n1 + q1;
            double kx = fft.k1(q1), ky = fft.k2(q2);
            double kap2 = kx * kx + ky * ky;
            for (int k = 0; k < n3; ++k)
                rhs[k] = modes[static_cast<std::size_t>(k) * pl + qp];

            cplx bb = bhat[qp], bt = that[qp];
            if (q1 == 0 && q2 == 0) {
                // Singular mean mode: make it consistent by splitting the
                // Gauss defect evenly between the walls, then pin q(0) = 0
                // and restore the zero mean afterwards.
                cplx c = 0.5 * (bb + bt - trapz(rhs.data(), n3, h));
                if (defect) *defect = 2.0 * g.L1 * g.L2 * c.real();
                bb -= c;
                bt -= c;
                rhs[0] = 0.0;
                for (int k = 1; k < n3 - 1; ++k) {
                    sub[k] = k == 1 ? 0.0 : 1.0 / h2;
                    dia[k] = -2.0 / h2;
                    sup[k] = 1.0 / h2;
                }
                sub[n3 - 1] = 2.0 / h2;
                dia[n3 - 1] = -2.0 / h2;
                sup[n3 - 1] = 0.0;
                rhs[n3 - 1] -= 2.0 * bt / h;
                tridiag(n3 - 1, sub.data() + 1, dia.data() + 1, sup.data() + 1,
                        rhs.data() + 1, scratch);
                cplx mean = trapz(rhs.data(), n3, h); // z-extent is 1
                for (int k = 0; k < n3; ++k) rhs[k] -= mean;
            } else {
                dia[0] = -2.0 / h2 - kap2;
                sup[0] = 2.0 / h2;
                sub[0] = 0.0;
                rhs[0] -= 2.0 * bb / h;
                for (int k = 1; k < n3 - 1; ++k) {
                    sub[k] = 1.0 / h2;
                    dia[k] = -2.0 / h2 - kap2;
                    sup[k] = 1.0 / h2;
                }
                sub[n3 - 1] = 2.0 / h2;
                dia[n3 - 1] = -2.0 / h2 - kap2;
                sup[n3 - 1] = 0.0;
                rhs[n3 - 1] -= 2.0 * bt / h;
                tridiag(n3, sub.data(), dia.data(), sup.data(), rhs.data(),
                        scratch);
            }

            for (int k = 0; k < n3; ++k)
                modes[static_cast<std::size_t>(k) * pl + qp] = rhs[k];
        }
    }

    return fft_planes_inverse(g, modes);
}

double neumann_residual(const ScalarField3& q, const ScalarField3& source,
                        const WallData& data) {
    const Grid3& g = q.grid;
    if (!g.same_as(source.grid))
        throw InputError("residual: grids differ");
    require_wall_shapes(g, data);
    const int n1 = g.n1, n2 = g.n2, n3 = g.n3;
    const double h = g.h3(), h2 = h * h;
    const std::size_t pl = g.plane_size();

    std::vector<cplx> qm = fft_planes_forward(q);
    std::vector<cplx> sm = fft_planes_forward(source);
    PlaneFFT fft(n1, n2, g.L1, g.L2);
    std::vector<cplx> bhat(pl), that(pl);
    fft.forward(data.bottom.data(), bhat.data());
    fft.forward(data.top.data(), that.data());

    double worst = 0.0;
    std::vector<cplx> qk(n3), sk(n3);
    for (int q2 = 0; q2 < n2; ++q2) {
        for (int q1 = 0; q1 < n1; ++q1) {
            std::size_t qp = static_cast<std::size_t>(q2) * n1 + q1;
            double kx = fft.k1(q1), ky = fft.k2(q2);
            double kap2 = kx * kx + ky * ky;
            for (int k = 0; k < n3; ++k) {
                qk[k] = qm[static_cast<std::size_t>(k) * pl + qp];
                sk[k] = sm[static_cast<std::size_t>(k) * pl + qp];
            }
            cplx bb = bhat[qp], bt = that[qp];
            if (q1 == 0 && q2 == 0) {
                cplx c = 0.5 * (bb + bt - trapz(sk.data(), n3, h));
                bb -= c;
                bt -= c;
            }
            auto bump = [&](cplx r) {
                worst = std::max(worst, std::abs(r));
            };
            bump((2.0 * qk[1] - 2.0 * qk[0]) / h2 - kap2 * qk[0] - sk[0] +
                 2.0 * bb / h);
            for (int k = 1; k < n3 - 1; ++k)
                bump((qk[k - 1] - 2.0 * qk[k] + qk[k + 1]) / h2 -
                     kap2 * qk[k] - sk[k]);
            bump((2.0 * qk[n3 - 2] - 2.0 * qk[n3 - 1]) / h2 -
                 kap2 * qk[n3 - 1] - sk[n3 - 1] + 2.0 * bt / h);
        }
    }
    return worst;
}

void helmholtz_dirichlet_mode(int n3, double h, double kappa2, const cplx* s,
                              cplx vbot, cplx vtop, cplx* v) {
    if (n3 < 3) throw InputError("helmholtz mode: need at least 3 nodes");
    const double h2 = h * h;
    int n = n3 - 2; // interior unknowns
    std::vector<double> sub(n), dia(n), sup(n), scratch;
    std::vector<cplx> rhs(n);
    for (int k = 0; k < n; ++k) {
        sub[k] = k == 0 ? 0.0 : 1.0 / h2;
        dia[k] = -2.0 / h2 - kappa2;
        sup[k] = k == n - 1 ? 0.0 : 1.0 / h2;
        rhs[k] = s ? s[k + 1] : cplx(0.0);
    }
    rhs[0] -= vbot / h2;
    rhs[n - 1] -= vtop / h2;
    tridiag(n, sub.data(), dia.data(), sup.data(), rhs.data(), scratch);
    v[0] = vbot;
    for (int k = 0; k < n; ++k) v[k + 1] = rhs[k];
    v[n3 - 1] = vtop;
}

} // namespace euler
