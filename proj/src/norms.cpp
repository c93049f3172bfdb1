#include "euler/norms.h"

#include <cmath>
#include <vector>

#include "euler/fields.h"
#include "euler/parallel.h"
#include "euler/rng.h"

namespace euler {

namespace {

void require_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw InputError("holder_seminorm: alpha must lie in (0, 1]");
}

double min_image(double d, double period) {
    d = std::fabs(d);
    return std::min(d, period - d);
}

// diff(qa, qb) must return |f(qa) - f(qb)|.
template <class Diff>
double spatial_seminorm(const Grid3& g, double alpha, Diff&& diff) {
    double best = 0.0;

    // x-lines (periodic): the minimum-image distance depends only on the
    // index offset, so precompute the denominators.
    {
        int half = g.n1 / 2;
        std::vector<double> invd(half + 1, 0.0);
        for (int s = 1; s <= half; ++s)
            invd[s] = 1.0 / std::pow(s * g.h1(), alpha);
        for (int k = 0; k < g.n3; ++k)
            for (int j = 0; j < g.n2; ++j)
                for (int s = 1; s <= half; ++s)
                    for (int i = 0; i < g.n1; ++i) {
                        int i2 = i + s < g.n1 ? i + s : i + s - g.n1;
                        best = std::max(best,
                                        diff(g.idx(i, j, k), g.idx(i2, j, k)) *
                                            invd[s]);
                    }
    }
    // y-lines (periodic).
    {
        int half = g.n2 / 2;
        std::vector<double> invd(half + 1, 0.0);
        for (int s = 1; s <= half; ++s)
            invd[s] = 1.0 / std::pow(s * g.h2(), alpha);
        for (int k = 0; k < g.n3; ++k)
            for (int s = 1; s <= half; ++s)
                for (int j = 0; j < g.n2; ++j)
                    for (int i = 0; i < g.n1; ++i) {
                        int j2 = j + s < g.n2 ? j + s : j + s - g.n2;
                        best = std::max(best,
                                        diff(g.idx(i, j, k), g.idx(i, j2, k)) *
                                            invd[s]);
                    }
    }
    // z-lines (walls included, plain distance).
    {
        std::vector<double> invd(g.n3, 0.0);
        for (int s = 1; s < g.n3; ++s)
            invd[s] = 1.0 / std::pow(s * g.h3(), alpha);
        for (int s = 1; s < g.n3; ++s)
            for (int k = 0; k + s < g.n3; ++k)
                for (int j = 0; j < g.n2; ++j)
                    for (int i = 0; i < g.n1; ++i)
                        best = std::max(best,
                                        diff(g.idx(i, j, k), g.idx(i, j, k + s)) *
                                            invd[s]);
    }
    // Cross pairs: deterministic subsample, O(N log N) of them.
    {
        std::size_t n = g.size();
        int lg = 1;
        while ((std::size_t{1} << lg) < n) ++lg;
        std::size_t pairs = n * static_cast<std::size_t>(lg);
        Rng rng(0x484f4c44u); // fixed: the sample set is part of the estimator
        for (std::size_t s = 0; s < pairs; ++s) {
            std::size_t qa = rng.bits() % n, qb = rng.bits() % n;
            if (qa == qb) continue;
            int ia = static_cast<int>(qa % g.n1), ja = static_cast<int>((qa / g.n1) % g.n2);
            int ka = static_cast<int>(qa / g.plane_size());
            int ib = static_cast<int>(qb % g.n1), jb = static_cast<int>((qb / g.n1) % g.n2);
            int kb = static_cast<int>(qb / g.plane_size());
            double dx = min_image((ia - ib) * g.h1(), g.L1);
            double dy = min_image((ja - jb) * g.h2(), g.L2);
            double dz = (ka - kb) * g.h3();
            double d = std::sqrt(dx * dx + dy * dy + dz * dz);
            best = std::max(best, diff(qa, qb) / std::pow(d, alpha));
        }
    }
    return best;
}

} // namespace

double holder_seminorm(const ScalarField3& f, double alpha) {
    require_alpha(alpha);
    const double* v = f.v.data();
    return spatial_seminorm(f.grid, alpha, [v](std::size_t a, std::size_t b) {
        return std::fabs(v[a] - v[b]);
    });
}

double holder_seminorm(const VectorField3& f, double alpha) {
    require_alpha(alpha);
    const double *x = f.x.data(), *y = f.y.data(), *z = f.z.data();
    return spatial_seminorm(f.grid, alpha, [&](std::size_t a, std::size_t b) {
        double dx = x[a] - x[b], dy = y[a] - y[b], dz = z[a] - z[b];
        return std::sqrt(dx * dx + dy * dy + dz * dz);
    });
}

double holder_seminorm(const SpaceTimeField& u, double alpha, HolderAxis axis) {
    require_alpha(alpha);
    if (axis == HolderAxis::Space) {
        double best = 0.0;
        for (const VectorField3& s : u.slice)
            best = std::max(best, holder_seminorm(s, alpha));
        return best;
    }
    int ns = static_cast<int>(u.slice.size());
    double dt = u.time.dt();
    std::size_t n = u.grid.size();
    std::vector<double> best_per(ns, 0.0);
    // One thread per earlier slice index; disjoint writes.
    parallel_for(static_cast<std::size_t>(ns - 1), [&](std::size_t m) {
        double best = 0.0;
        for (int m2 = static_cast<int>(m) + 1; m2 < ns; ++m2) {
            double invd = 1.0 / std::pow((m2 - static_cast<int>(m)) * dt, alpha);
            const VectorField3 &a = u.slice[m], &b = u.slice[m2];
            for (std::size_t q = 0; q < n; ++q) {
                double dx = a.x[q] - b.x[q], dy = a.y[q] - b.y[q],
                       dz = a.z[q] - b.z[q];
                best = std::max(best,
                                std::sqrt(dx * dx + dy * dy + dz * dz) * invd);
            }
        }
        best_per[m] = best;
    });
    double best = 0.0;
    for (double b : best_per) best = std::max(best, b);
    return best;
}

HolderNorm holder_norm(const SpaceTimeField& u, double alpha) {
    HolderNorm h;
    h.alpha = alpha;
    h.seminorm_time = holder_seminorm(u, alpha, HolderAxis::Time);
    h.seminorm_space = holder_seminorm(u, alpha, HolderAxis::Space);
    for (const VectorField3& s : u.slice) h.sup = std::max(h.sup, max_abs(s));
    return h;
}

double x_norm(const SpaceTimeField& u, double beta1, double beta2) {
    if (!(beta1 > 0.0 && beta1 < 1.0 && beta2 > 0.0 && beta2 < 1.0))
        throw InputError("x_norm: exponents must lie in (0, 1)");
    SpaceTimeField w(u.grid, u.time);
    for (std::size_t m = 0; m < u.slice.size(); ++m)
        w.slice[m] = curl3(u.slice[m]);
    return holder_norm(u, beta1).total() + holder_norm(w, beta2).total();
}

} // namespace euler
