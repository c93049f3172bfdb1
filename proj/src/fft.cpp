#include "euler/fft.h"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <numbers>

namespace euler {

namespace {

std::mutex plan_mutex;

struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

// Plans are created FFTW_UNALIGNED so fftw_execute_dft may run them on any
// buffer of the right shape; execution itself is thread-safe.
PlanPair& plans_for(int m1, int m2) {
    static std::map<std::pair<int, int>, PlanPair> cache;
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_pair(m1, m2);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<cplx> tmp(static_cast<std::size_t>(m1) * m2);
    auto* p = reinterpret_cast<fftw_complex*>(tmp.data());
    PlanPair pp;
    // FFTW is row-major; our planes are value[i1 + m1*i2], i.e. shape (m2, m1).
    pp.fwd = fftw_plan_dft_2d(m2, m1, p, p, FFTW_FORWARD,
                              FFTW_ESTIMATE | FFTW_UNALIGNED);
    pp.bwd = fftw_plan_dft_2d(m2, m1, p, p, FFTW_BACKWARD,
                              FFTW_ESTIMATE | FFTW_UNALIGNED);
    return cache.emplace(key, pp).first->second;
}

double signed_wavenumber(int q, int m, double period) {
    int s = q <= m / 2 ? q : q - m;
    return 2.0 * std::numbers::pi * s / period;
}

} // namespace

PlaneFFT::PlaneFFT(int m1, int m2, double P1, double P2)
    : m1_(m1), m2_(m2), P1_(P1), P2_(P2),
      scratch_(static_cast<std::size_t>(m1) * m2) {
    plans_for(m1, m2);
}

void PlaneFFT::forward(const double* real_plane, cplx* modes) {
    std::size_t n = scratch_.size();
    for (std::size_t q = 0; q < n; ++q) scratch_[q] = real_plane[q];
    auto& pp = plans_for(m1_, m2_);
    fftw_execute_dft(pp.fwd, reinterpret_cast<fftw_complex*>(scratch_.data()),
                     reinterpret_cast<fftw_complex*>(modes));
    double scale = 1.0 / static_cast<double>(n);
    for (std::size_t q = 0; q < n; ++q) modes[q] *= scale;
}

void PlaneFFT::inverse(const cplx* modes, double* real_plane) {
    std::size_t n = scratch_.size();
    auto& pp = plans_for(m1_, m2_);
    fftw_execute_dft(pp.bwd,
                     reinterpret_cast<fftw_complex*>(const_cast<cplx*>(modes)),
                     reinterpret_cast<fftw_complex*>(scratch_.data()));
    for (std::size_t q = 0; q < n; ++q) real_plane[q] = scratch_[q].real();
}

double PlaneFFT::k1(int q1) const { return signed_wavenumber(q1, m1_, P1_); }
double PlaneFFT::k2(int q2) const { return signed_wavenumber(q2, m2_, P2_); }

double PlaneFFT::k1_deriv(int q1) const {
    if (m1_ % 2 == 0 && q1 == m1_ / 2) return 0.0;
    return k1(q1);
}
double PlaneFFT::k2_deriv(int q2) const {
    if (m2_ % 2 == 0 && q2 == m2_ / 2) return 0.0;
    return k2(q2);
}

void plane_spectral_derivatives(int m1, int m2, double P1, double P2,
                                const std::vector<double>& f,
                                std::vector<double>* d1,
                                std::vector<double>* d2) {
    PlaneFFT fft(m1, m2, P1, P2);
    std::size_t n = f.size();
    std::vector<cplx> modes(n), work(n);
    fft.forward(f.data(), modes.data());
    const cplx iu(0.0, 1.0);
    if (d1) {
        for (int q2 = 0; q2 < m2; ++q2)
            for (int q1 = 0; q1 < m1; ++q1) {
                std::size_t q = static_cast<std::size_t>(q2) * m1 + q1;
                work[q] = iu * fft.k1_deriv(q1) * modes[q];
            }
        d1->resize(n);
        fft.inverse(work.data(), d1->data());
    }
    if (d2) {
        for (int q2 = 0; q2 < m2; ++q2)
            for (int q1 = 0; q1 < m1; ++q1) {
                std::size_t q = static_cast<std::size_t>(q2) * m1 + q1;
                work[q] = iu * fft.k2_deriv(q2) * modes[q];
            }
        d2->resize(n);
        fft.inverse(work.data(), d2->data());
    }
}

std::vector<cplx> fft_planes_forward(const ScalarField3& f) {
    const Grid3& g = f.grid;
    PlaneFFT fft(g.n1, g.n2, g.L1, g.L2);
    std::vector<cplx> modes(g.size());
    for (int k = 0; k < g.n3; ++k)
        fft.forward(f.v.data() + g.idx(0, 0, k), modes.data() + g.idx(0, 0, k));
    return modes;
}

ScalarField3 fft_planes_inverse(const Grid3& g, const std::vector<cplx>& modes) {
    PlaneFFT fft(g.n1, g.n2, g.L1, g.L2);
    ScalarField3 out(g);
    for (int k = 0; k < g.n3; ++k)
        fft.inverse(modes.data() + g.idx(0, 0, k), out.v.data() + g.idx(0, 0, k));
    return out;
}

namespace {

ScalarField3 spectral_derivative_volume(const ScalarField3& f, bool along_x) {
    const Grid3& g = f.grid;
    ScalarField3 out(g);
    std::vector<double> plane(g.plane_size()), d(g.plane_size());
    for (int k = 0; k < g.n3; ++k) {
        std::copy(f.v.begin() + g.idx(0, 0, k),
                  f.v.begin() + g.idx(0, 0, k) + g.plane_size(), plane.begin());
        plane_spectral_derivatives(g.n1, g.n2, g.L1, g.L2, plane,
                                   along_x ? &d : nullptr,
                                   along_x ? nullptr : &d);
        std::copy(d.begin(), d.end(), out.v.begin() + g.idx(0, 0, k));
    }
    return out;
}

} // namespace

ScalarField3 ddx_spectral(const ScalarField3& f) {
    return spectral_derivative_volume(f, true);
}
ScalarField3 ddy_spectral(const ScalarField3& f) {
    return spectral_derivative_volume(f, false);
}

} // namespace euler
