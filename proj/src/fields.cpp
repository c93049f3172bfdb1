#include "euler/fields.h"

#include <cmath>
#include <stdexcept>

namespace euler {

ScalarField3 ddz_fd(const ScalarField3& f) {
    const Grid3& g = f.grid;
    ScalarField3 out(g);
    double ih = 1.0 / (2.0 * g.h3());
    std::size_t pl = g.plane_size();
    for (int k = 0; k < g.n3; ++k) {
        const double* fk = f.v.data() + k * pl;
        double* ok = out.v.data() + k * pl;
        if (k == 0) {
            const double* f1 = f.v.data() + pl;
            const double* f2 = f.v.data() + 2 * pl;
            for (std::size_t q = 0; q < pl; ++q)
                ok[q] = ih * (-3.0 * fk[q] + 4.0 * f1[q] - f2[q]);
        } else if (k == g.n3 - 1) {
            const double* f1 = f.v.data() + (k - 1) * pl;
            const double* f2 = f.v.data() + (k - 2) * pl;
            for (std::size_t q = 0; q < pl; ++q)
                ok[q] = ih * (3.0 * fk[q] - 4.0 * f1[q] + f2[q]);
        } else {
            const double* fp = f.v.data() + (k + 1) * pl;
            const double* fm = f.v.data() + (k - 1) * pl;
            for (std::size_t q = 0; q < pl; ++q) ok[q] = ih * (fp[q] - fm[q]);
        }
    }
    return out;
}

namespace {

ScalarField3 component_field(const VectorField3& v, int c) {
    ScalarField3 f(v.grid);
    f.v = v.comp(c);
    return f;
}

} // namespace

ScalarField3 divergence(const VectorField3& v) {
    ScalarField3 dx = ddx_spectral(component_field(v, 0));
    ScalarField3 dy = ddy_spectral(component_field(v, 1));
    ScalarField3 dz = ddz_fd(component_field(v, 2));
    ScalarField3 out(v.grid);
    for (std::size_t q = 0; q < out.v.size(); ++q)
        out.v[q] = dx.v[q] + dy.v[q] + dz.v[q];
    return out;
}

VectorField3 curl3(const VectorField3& v) {
    ScalarField3 vx = component_field(v, 0), vy = component_field(v, 1),
                 vz = component_field(v, 2);
    ScalarField3 dzy = ddy_spectral(vz), dyz = ddz_fd(vy);
    ScalarField3 dxz = ddz_fd(vx), dzx = ddx_spectral(vz);
    ScalarField3 dyx = ddx_spectral(vy), dxy = ddy_spectral(vx);
    VectorField3 out(v.grid);
    for (std::size_t q = 0; q < out.x.size(); ++q) {
        out.x[q] = dzy.v[q] - dyz.v[q];
        out.y[q] = dxz.v[q] - dzx.v[q];
        out.z[q] = dyx.v[q] - dxy.v[q];
    }
    return out;
}

VectorField3 grad_scalar(const ScalarField3& f) {
    ScalarField3 dx = ddx_spectral(f), dy = ddy_spectral(f), dz = ddz_fd(f);
    VectorField3 out(f.grid);
    out.x = dx.v;
    out.y = dy.v;
    out.z = dz.v;
    return out;
}

TensorField3 grad_tensor(const VectorField3& v) {
    TensorField3 out(v.grid);
    for (int i = 0; i < 3; ++i) {
        ScalarField3 ci = component_field(v, i);
        out.comp[3 * i + 0] = ddx_spectral(ci).v;
        out.comp[3 * i + 1] = ddy_spectral(ci).v;
        out.comp[3 * i + 2] = ddz_fd(ci).v;
    }
    return out;
}

double volume_integral(const ScalarField3& f) {
    const Grid3& g = f.grid;
    std::size_t pl = g.plane_size();
    double sum = 0.0;
    for (int k = 0; k < g.n3; ++k) {
        double w = (k == 0 || k == g.n3 - 1) ? 0.5 : 1.0;
        double s = 0.0;
        const double* fk = f.v.data() + k * pl;
        for (std::size_t q = 0; q < pl; ++q) s += fk[q];
        sum += w * s;
    }
    return sum * g.cell_volume();
}

double volume_mean(const ScalarField3& f) {
    return volume_integral(f) / f.grid.volume();
}

double max_abs(const ScalarField3& f) {
    double m = 0.0;
    for (double v : f.v) m = std::max(m, std::fabs(v));
    return m;
}

double max_abs(const VectorField3& f) {
    double m = 0.0;
    for (double v : f.x) m = std::max(m, std::fabs(v));
    for (double v : f.y) m = std::max(m, std::fabs(v));
    for (double v : f.z) m = std::max(m, std::fabs(v));
    return m;
}

double grad_sup_norm(const VectorField3& v) {
    TensorField3 gv = grad_tensor(v);
    double best = 0.0;
    for (std::size_t q = 0; q < v.x.size(); ++q) {
        for (int i = 0; i < 3; ++i) {
            double row = std::fabs(gv.comp[3 * i][q]) +
                         std::fabs(gv.comp[3 * i + 1][q]) +
                         std::fabs(gv.comp[3 * i + 2][q]);
            best = std::max(best, row);
        }
    }
    return best;
}

// --- interpolation ---------------------------------------------------------

namespace {

void cubic_weights(double xi, std::array<double, 4>& w,
                   std::array<double, 4>& dw) {
    double x1 = xi - 1.0, x2 = xi - 2.0, x3 = xi - 3.0;
    w[0] = -x1 * x2 * x3 / 6.0;
    w[1] = xi * x2 * x3 / 2.0;
    w[2] = -xi * x1 * x3 / 2.0;
    w[3] = xi * x1 * x2 / 6.0;
    dw[0] = -(x2 * x3 + x1 * x3 + x1 * x2) / 6.0;
    dw[1] = (x2 * x3 + xi * x3 + xi * x2) / 2.0;
    dw[2] = -(x1 * x3 + xi * x3 + xi * x1) / 2.0;
    dw[3] = (x1 * x2 + xi * x2 + xi * x1) / 6.0;
}

} // namespace

CubicAxis cubic_axis_periodic(double coord, int n, double h) {
    double period = n * h;
    double c = coord - period * std::floor(coord / period);
    double u = c / h;
    int base = static_cast<int>(std::floor(u)) - 1;
    double xi = u - base;
    CubicAxis ax;
    ax.base = base;
    cubic_weights(xi, ax.w, ax.dw);
    for (double& d : ax.dw) d /= h;
    return ax;
}

CubicAxis cubic_axis_bounded(double z, int n3, double h) {
    double zc = std::min(1.0, std::max(0.0, z));
    double u = zc / h;
    int kf = std::min(static_cast<int>(std::floor(u)), n3 - 2);
    int base = std::min(std::max(kf - 1, 0), n3 - 4);
    double xi = u - base;
    CubicAxis ax;
    ax.base = base;
    cubic_weights(xi, ax.w, ax.dw);
    for (double& d : ax.dw) d /= h;
    return ax;
}

namespace {

struct Stencil {
    std::array<int, 4> ia, ja, ka;
    CubicAxis ax, ay, az;
};

Stencil make_stencil(const Grid3& g, const Vec3& p) {
    Stencil s;
    s.ax = cubic_axis_periodic(p.x, g.n1, g.h1());
    s.ay = cubic_axis_periodic(p.y, g.n2, g.h2());
    s.az = cubic_axis_bounded(p.z, g.n3, g.h3());
    for (int a = 0; a < 4; ++a) {
        s.ia[a] = ((s.ax.base + a) % g.n1 + g.n1) % g.n1;
        s.ja[a] = ((s.ay.base + a) % g.n2 + g.n2) % g.n2;
        s.ka[a] = s.az.base + a;
    }
    return s;
}

} // namespace

double sample(const ScalarField3& f, const Vec3& p) {
    const Grid3& g = f.grid;
    Stencil s = make_stencil(g, p);
    double acc = 0.0;
    for (int c = 0; c < 4; ++c)
        for (int b = 0; b < 4; ++b) {
            std::size_t row = g.idx(0, s.ja[b], s.ka[c]);
            double wyz = s.ay.w[b] * s.az.w[c];
            double line = 0.0;
            for (int a = 0; a < 4; ++a) line += s.ax.w[a] * f.v[row + s.ia[a]];
            acc += wyz * line;
        }
    return acc;
}

Vec3 sample(const VectorField3& f, const Vec3& p) {
    const Grid3& g = f.grid;
    Stencil s = make_stencil(g, p);
    Vec3 acc;
    for (int c = 0; c < 4; ++c)
        for (int b = 0; b < 4; ++b) {
            std::size_t row = g.idx(0, s.ja[b], s.ka[c]);
            double wyz = s.ay.w[b] * s.az.w[c];
            double lx = 0.0, ly = 0.0, lz = 0.0;
            for (int a = 0; a < 4; ++a) {
                std::size_t q = row + s.ia[a];
                lx += s.ax.w[a] * f.x[q];
                ly += s.ax.w[a] * f.y[q];
                lz += s.ax.w[a] * f.z[q];
            }
            acc.x += wyz * lx;
            acc.y += wyz * ly;
            acc.z += wyz * lz;
        }
    return acc;
}

void sample_with_gradient(const VectorField3& f, const Vec3& p, Vec3* value,
                          Mat3* grad) {
    const Grid3& g = f.grid;
    Stencil s = make_stencil(g, p);
    Vec3 val;
    Mat3 gr;
    for (int c = 0; c < 4; ++c)
        for (int b = 0; b < 4; ++b) {
            std::size_t row = g.idx(0, s.ja[b], s.ka[c]);
            double wy = s.ay.w[b], wz = s.az.w[c];
            double dwy = s.ay.dw[b], dwz = s.az.dw[c];
            for (int comp = 0; comp < 3; ++comp) {
                const double* fc = f.comp(comp).data();
                double lw = 0.0, ldw = 0.0;
                for (int a = 0; a < 4; ++a) {
                    double fv = fc[row + s.ia[a]];
                    lw += s.ax.w[a] * fv;
                    ldw += s.ax.dw[a] * fv;
                }
                val[comp] += wy * wz * lw;
                gr(comp, 0) += wy * wz * ldw;
                gr(comp, 1) += dwy * wz * lw;
                gr(comp, 2) += wy * dwz * lw;
            }
        }
    if (value) *value = val;
    if (grad) *grad = gr;
}

// --- time interpolation ----------------------------------------------------

namespace {

// Derivative weights of the cubic/quadratic/linear fit at slice m over the
// whole slice range; exact for cubics wherever four slices exist.
void slope_stencil(int nt, int m, int* base, double coeff[5], int* len) {
    if (nt == 1) {
        *base = 0;
        coeff[0] = -1.0;
        coeff[1] = 1.0;
        *len = 2;
        return;
    }
    if (nt == 2) {
        *base = 0;
        *len = 3;
        if (m == 0) {
            coeff[0] = -1.5; coeff[1] = 2.0; coeff[2] = -0.5;
        } else if (m == 1) {
            coeff[0] = -0.5; coeff[1] = 0.0; coeff[2] = 0.5;
        } else {
            coeff[0] = 0.5; coeff[1] = -2.0; coeff[2] = 1.5;
        }
        return;
    }
    if (m >= 2 && m <= nt - 2) {
        *base = m - 2;
        *len = 5;
        coeff[0] = 1.0 / 12.0;
        coeff[1] = -8.0 / 12.0;
        coeff[2] = 0.0;
        coeff[3] = 8.0 / 12.0;
        coeff[4] = -1.0 / 12.0;
        return;
    }
    *len = 4;
    if (m <= 1) {
        *base = 0;
        if (m == 0) {
            coeff[0] = -11.0 / 6.0; coeff[1] = 3.0; coeff[2] = -1.5;
            coeff[3] = 1.0 / 3.0;
        } else {
            coeff[0] = -1.0 / 3.0; coeff[1] = -0.5; coeff[2] = 1.0;
            coeff[3] = -1.0 / 6.0;
        }
    } else {
        *base = nt - 3;
        if (m == nt - 1) {
            coeff[0] = 1.0 / 6.0; coeff[1] = -1.0; coeff[2] = 0.5;
            coeff[3] = 1.0 / 3.0;
        } else {
            coeff[0] = -1.0 / 3.0; coeff[1] = 1.5; coeff[2] = -3.0;
            coeff[3] = 11.0 / 6.0;
        }
    }
}

} // namespace

TimeInterpolant::TimeInterpolant(const SpaceTimeField& f)
    : f_(&f), slopes_(f.grid, f.time) {
    int nt = f.time.nt;
    double idt = 1.0 / f.time.dt();
    std::size_t n = f.grid.size();
    for (int m = 0; m <= nt; ++m) {
        int base = 0, len = 0;
        double coeff[5];
        slope_stencil(nt, m, &base, coeff, &len);
        for (int c = 0; c < 3; ++c) {
            double* out = slopes_.slice[m].comp(c).data();
            for (int e = 0; e < len; ++e) {
                const double* src = f.slice[base + e].comp(c).data();
                double a = coeff[e] * idt;
                if (e == 0)
                    for (std::size_t q = 0; q < n; ++q) out[q] = a * src[q];
                else
                    for (std::size_t q = 0; q < n; ++q) out[q] += a * src[q];
            }
        }
    }
}

void TimeInterpolant::weights(double t, int* m, double* w) const {
    const TimeGrid& tg = f_->time;
    double tc = std::min(tg.T, std::max(0.0, t));
    double u = tc / tg.dt();
    int mm = std::min(static_cast<int>(std::floor(u)), tg.nt - 1);
    double th = u - mm;
    double th2 = th * th, th3 = th2 * th;
    w[0] = 2.0 * th3 - 3.0 * th2 + 1.0;
    w[1] = (th3 - 2.0 * th2 + th) * tg.dt();
    w[2] = -2.0 * th3 + 3.0 * th2;
    w[3] = (th3 - th2) * tg.dt();
    *m = mm;
}

VectorField3 TimeInterpolant::at_time(double t) const {
    int m;
    double w[4];
    weights(t, &m, w);
    VectorField3 out(f_->grid);
    std::size_t n = f_->grid.size();
    for (int c = 0; c < 3; ++c) {
        const double* fm = f_->slice[m].comp(c).data();
        const double* dm = slopes_.slice[m].comp(c).data();
        const double* fm1 = f_->slice[m + 1].comp(c).data();
        const double* dm1 = slopes_.slice[m + 1].comp(c).data();
        double* o = out.comp(c).data();
        for (std::size_t q = 0; q < n; ++q)
            o[q] = w[0] * fm[q] + w[1] * dm[q] + w[2] * fm1[q] + w[3] * dm1[q];
    }
    return out;
}

Vec3 TimeInterpolant::sample(double t, const Vec3& p) const {
    int m;
    double w[4];
    weights(t, &m, w);
    Vec3 a = euler::sample(f_->slice[m], p);
    Vec3 b = euler::sample(slopes_.slice[m], p);
    Vec3 c = euler::sample(f_->slice[m + 1], p);
    Vec3 d = euler::sample(slopes_.slice[m + 1], p);
    return w[0] * a + w[1] * b + w[2] * c + w[3] * d;
}

void TimeInterpolant::sample_with_gradient(double t, const Vec3& p, Vec3* value,
                                           Mat3* grad) const {
    int m;
    double w[4];
    weights(t, &m, w);
    const VectorField3* fields[4] = {&f_->slice[m], &slopes_.slice[m],
                                     &f_->slice[m + 1], &slopes_.slice[m + 1]};
    *value = {0.0, 0.0, 0.0};
    *grad = Mat3{};
    for (int s = 0; s < 4; ++s) {
        Vec3 v;
        Mat3 gr;
        euler::sample_with_gradient(*fields[s], p, &v, &gr);
        *value = *value + w[s] * v;
        *grad = *grad + w[s] * gr;
    }
}

Vec3 interpolate(const SpaceTimeField& f, double t, const Vec3& x) {
    if (t < 0.0 || t > f.time.T)
        throw std::out_of_range("interpolate: t outside [0, T]");
    TimeInterpolant ti(f);
    return ti.sample(t, x);
}

VectorField3 time_derivative_slice(const SpaceTimeField& f, int m) {
    int nt = f.time.nt;
    double idt = 1.0 / f.time.dt();
    VectorField3 out(f.grid);
    std::size_t n = f.grid.size();
    auto axpy = [&](double a, int s, int c, double* o) {
        const double* src = f.slice[s].comp(c).data();
        for (std::size_t q = 0; q < n; ++q) o[q] += a * src[q];
    };
    for (int c = 0; c < 3; ++c) {
        double* o = out.comp(c).data();
        if (nt == 1) {
            axpy(-idt, 0, c, o);
            axpy(idt, 1, c, o);
        } else if (m == 0) {
            axpy(-1.5 * idt, 0, c, o);
            axpy(2.0 * idt, 1, c, o);
            axpy(-0.5 * idt, 2, c, o);
        } else if (m == nt) {
            axpy(1.5 * idt, nt, c, o);
            axpy(-2.0 * idt, nt - 1, c, o);
            axpy(0.5 * idt, nt - 2, c, o);
        } else {
            axpy(0.5 * idt, m + 1, c, o);
            axpy(-0.5 * idt, m - 1, c, o);
        }
    }
    return out;
}

std::vector<double> time_derivative_series(const std::vector<double>& s,
                                           double dt) {
    int n = static_cast<int>(s.size());
    std::vector<double> out(n, 0.0);
    if (n < 2) return out;
    double idt = 1.0 / dt;
    if (n == 2) {
        out[0] = out[1] = (s[1] - s[0]) * idt;
        return out;
    }
    out[0] = (-1.5 * s[0] + 2.0 * s[1] - 0.5 * s[2]) * idt;
    for (int m = 1; m < n - 1; ++m) out[m] = 0.5 * idt * (s[m + 1] - s[m - 1]);
    out[n - 1] = (1.5 * s[n - 1] - 2.0 * s[n - 2] + 0.5 * s[n - 3]) * idt;
    return out;
}

} // namespace euler
