#ifndef EULER_FFT_H
#define EULER_FFT_H

#include <complex>
#include <vector>

#include "euler/grid.h"

namespace euler {

using cplx = std::complex<double>;

// 2D Fourier transforms of horizontal planes, layout value[i1 + m1*i2]
// (first index fastest, matching Grid3 planes with i1 = x). Forward output
// is normalized so modes are Fourier coefficients of
//   f = sum_{q1,q2} fhat(q1,q2) exp(i(k1 x + k2 y)).
// Instances hold scratch buffers and must not be shared across threads;
// FFTW plans are cached per shape behind a mutex, so construction is cheap.
class PlaneFFT {
public:
    PlaneFFT(int m1, int m2, double P1, double P2);

    void forward(const double* real_plane, cplx* modes);
    void inverse(const cplx* modes, double* real_plane);

    int m1() const { return m1_; }
    int m2() const { return m2_; }

    // Signed wavenumber of mode index q along each period.
    double k1(int q1) const;
    double k2(int q2) const;
    // First-derivative multiplier wavenumbers: the Nyquist column is zeroed
    // so odd derivatives of real data stay real.
    double k1_deriv(int q1) const;
    double k2_deriv(int q2) const;

private:
    int m1_, m2_;
    double P1_, P2_;
    std::vector<cplx> scratch_;
};

// In-plane spectral derivatives of a plane; either output may be null.
void plane_spectral_derivatives(int m1, int m2, double P1, double P2,
                                const std::vector<double>& f,
                                std::vector<double>* d1,
                                std::vector<double>* d2);

// Forward/inverse transform of every z-plane of a scalar field.
// Mode layout matches the grid layout: modes[k*plane + q2*n1 + q1].
std::vector<cplx> fft_planes_forward(const ScalarField3& f);
ScalarField3 fft_planes_inverse(const Grid3& g, const std::vector<cplx>& modes);

// Spectral in-plane partial derivatives of a volume field.
ScalarField3 ddx_spectral(const ScalarField3& f);
ScalarField3 ddy_spectral(const ScalarField3& f);

} // namespace euler

#endif
