#include <algorithm>
#include <cmath>
#include <mutex>

#include <fftw3.h>

#include "okflow/potential.hpp"

namespace okflow {

namespace {

// Coverage fraction of each grid cell by the region bounded by `shape`,
// from 4x4 stratified point samples per cell.  Inside/outside is decided
// per horizontal sample line by signed crossing counts: walking in +x, a
// downward boundary edge contributes +1 and an upward edge -1; the region
// is where the cumulative count sits above its row minimum (this anchors
// correctly even when the region wraps through x = 0).
std::vector<double> rasterize_coverage(const Curve& shape, int n) {
    const int SS = 4; // subsamples per cell edge
    std::vector<double> cov(static_cast<std::size_t>(n) * n, 0.0);

    // Collect lifted edges once.
    struct Edge {
        Vec2 a, b;
    };
    std::vector<Edge> edges;
    for (const auto& cc : shape.comp) {
        Lift L = lift_component(cc, shape.ambient);
        for (int i = 0; i < cc.n(); ++i) edges.push_back({lift_at(L, i), lift_at(L, i + 1)});
    }

    std::vector<std::pair<double, int>> cross; // (x mod 1, sign)
    for (int iy = 0; iy < n; ++iy) {
        for (int a = 0; a < SS; ++a) {
            const double ys = (iy + (a + 0.5) / SS) / n;
            cross.clear();
            for (const auto& e : edges) {
                double y0 = e.a.y, y1 = e.b.y;
                if (y0 == y1) continue;
                double lo = std::min(y0, y1), hi = std::max(y0, y1);
                // every periodic copy ys + m of the sample line inside [lo, hi]
                for (int m = static_cast<int>(std::ceil(lo - ys));
                     ys + m <= hi; ++m) {
                    double t = (ys + m - y0) / (y1 - y0);
                    if (t <= 0.0 || t >= 1.0) continue; // endpoint hits are non-generic
                    double x = e.a.x + t * (e.b.x - e.a.x);
                    x -= std::floor(x);
                    cross.emplace_back(x, y1 < y0 ? +1 : -1);
                }
            }
            std::sort(cross.begin(), cross.end());
            // cumulative count on the intervals between crossings, and its minimum
            int cmin = 0, c = 0;
            for (const auto& cr : cross) {
                c += cr.second;
                cmin = std::min(cmin, c);
            }
            // sweep the subsample columns
            std::size_t at = 0;
            c = 0;
            const double inv = 1.0 / (SS * SS);
            for (int ix = 0; ix < n; ++ix) {
                double add = 0;
                for (int b = 0; b < SS; ++b) {
                    const double xs = (ix + (b + 0.5) / SS) / n;
                    while (at < cross.size() && cross[at].first < xs) c += cross[at++].second;
                    if (c - cmin >= 1) add += inv;
                }
                cov[static_cast<std::size_t>(iy) * n + ix] += add;
            }
        }
    }
    return cov;
}

std::mutex& fftw_mutex() {
    static std::mutex m;
    return m;
}

} // namespace

TorusField torus_solve(const Curve& shape, int grid) {
    if (shape.ambient != Ambient::torus)
        throw validation_error("torus_solve: shape must live on the torus");
    Kernel::Torus(grid).check();
    const int n = grid;
    TorusField f;
    f.n = n;
    f.source = rasterize_coverage(shape, n);

    double mean = 0;
    for (double v : f.source) mean += v;
    mean /= f.source.size();
    f.area = mean;

    const double poly_area = polygon_area(shape);
    if (std::abs(mean - poly_area) > 1e-3)
        throw numerical_error("torus rasterization drift: coverage mean " + fmt17(mean) +
                              " vs polygon area " + fmt17(poly_area));

    for (double& v : f.source) v -= mean;

    // spectral solve  phi_hat = f_hat / (4 pi^2 |k|^2),  phi_hat(0) = 0
    const int nc = n / 2 + 1;
    std::vector<double> real(static_cast<std::size_t>(n) * n);
    std::vector<fftw_complex> spec(static_cast<std::size_t>(n) * nc);
    fftw_plan fwd, bwd;
    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        fwd = fftw_plan_dft_r2c_2d(n, n, real.data(), spec.data(), FFTW_ESTIMATE);
        bwd = fftw_plan_dft_c2r_2d(n, n, spec.data(), real.data(), FFTW_ESTIMATE);
    }
    std::copy(f.source.begin(), f.source.end(), real.begin());
    fftw_execute(fwd);

    const double norm = 1.0 / (static_cast<double>(n) * n);
    for (int iy = 0; iy < n; ++iy) {
        const double ky = iy <= n / 2 ? iy : iy - n;
        for (int ix = 0; ix < nc; ++ix) {
            const double kx = ix;
            fftw_complex& z = spec[static_cast<std::size_t>(iy) * nc + ix];
            if (ix == 0 && iy == 0) {
                z[0] = z[1] = 0;
                continue;
            }
            const double sym = 4.0 * M_PI * M_PI * (kx * kx + ky * ky);
            const double s = norm / sym;
            z[0] *= s;
            z[1] *= s;
        }
    }
    fftw_execute(bwd);
    f.phi.assign(real.begin(), real.end());
    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
    }
    return f;
}

double bicubic_torus(const std::vector<double>& g, int n, Vec2 p) {
    // grid coordinates with cell centers at integers
    const double gx = p.x * n - 0.5, gy = p.y * n - 0.5;
    const int bx = static_cast<int>(std::floor(gx)), by = static_cast<int>(std::floor(gy));
    const double tx = gx - bx, ty = gy - by;
    auto wgt = [](double t, double* w) {
        // Keys kernel, a = -1/2 (Catmull-Rom)
        const double t2 = t * t, t3 = t2 * t;
        w[0] = -0.5 * t + t2 - 0.5 * t3;
        w[1] = 1.0 - 2.5 * t2 + 1.5 * t3;
        w[2] = 0.5 * t + 2.0 * t2 - 1.5 * t3;
        w[3] = -0.5 * t2 + 0.5 * t3;
    };
    double wx[4], wy[4];
    wgt(tx, wx);
    wgt(ty, wy);
    auto wrap = [n](int i) { return ((i % n) + n) % n; };
    double s = 0;
    for (int j = 0; j < 4; ++j) {
        const int iy = wrap(by - 1 + j);
        double row = 0;
        for (int i = 0; i < 4; ++i)
            row += wx[i] * g[static_cast<std::size_t>(iy) * n + wrap(bx - 1 + i)];
        s += wy[j] * row;
    }
    return s;
}

PotentialResult potential_torus(const Curve& shape, int grid) {
    TorusField tf = torus_solve(shape, grid);
    PotentialResult r;
    r.grid_n = tf.n;
    for (const auto& cc : shape.comp) {
        std::vector<double> vals(cc.n());
        for (int i = 0; i < cc.n(); ++i) vals[i] = bicubic_torus(tf.phi, tf.n, cc.v[i]);
        r.boundary.val.push_back(std::move(vals));
    }
    std::tie(r.mean, r.sup_dev) = boundary_stats(r.boundary, shape);
    r.grid = std::move(tf.phi);
    return r;
}

} // namespace okflow
