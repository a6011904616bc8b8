#include "okflow/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace okflow {

namespace {

// C^2 periodic cubic spline on knots t_0 < ... < t_{n-1} < T with
// y(t + T) = y(t) + ramp.  Second derivatives from the cyclic tridiagonal
// system, solved by Sherman–Morrison on top of the Thomas algorithm.
struct PeriodicSpline {
    std::vector<double> t, y, M; // knots, values (ramp removed), y''
    double T = 0, ramp = 0;

    void build(const std::vector<double>& knots, const std::vector<double>& vals,
               double period, double net) {
        t = knots;
        T = period;
        ramp = net;
        const int n = static_cast<int>(t.size());
        y.resize(n);
        for (int i = 0; i < n; ++i) y[i] = vals[i] - ramp * t[i] / T;

        std::vector<double> h(n), a(n), b(n), c(n), d(n);
        for (int i = 0; i < n; ++i) h[i] = (i + 1 < n ? t[i + 1] : T + t[0]) - t[i];
        auto yv = [&](int i) { return i < n ? y[i] : y[i - n]; };
        for (int i = 0; i < n; ++i) {
            int im = (i + n - 1) % n;
            a[i] = h[im] / 6.0;
            b[i] = (h[im] + h[i]) / 3.0;
            c[i] = h[i] / 6.0;
            d[i] = (yv(i + 1) - y[i]) / h[i] - (y[i] - y[im]) / h[im];
        }
        // cyclic system: A*M = d with corner entries a[0] (row 0, col n-1)
        // and c[n-1] (row n-1, col 0)
        M.assign(n, 0.0);
        if (n == 1) { M[0] = 0; return; }
        std::vector<double> u(n, 0.0);
        double gamma = -b[0];
        std::vector<double> bb(b);
        bb[0] -= gamma;
        bb[n - 1] -= a[0] * c[n - 1] / gamma;
        auto thomas = [&](const std::vector<double>& rhs, std::vector<double>& x) {
            std::vector<double> cp(n), dp(n);
            cp[0] = c[0] / bb[0];
            dp[0] = rhs[0] / bb[0];
            for (int i = 1; i < n; ++i) {
                double m = bb[i] - a[i] * cp[i - 1];
                cp[i] = c[i] / m;
                dp[i] = (rhs[i] - a[i] * dp[i - 1]) / m;
            }
            x[n - 1] = dp[n - 1];
            for (int i = n - 2; i >= 0; --i) x[i] = dp[i] - cp[i] * x[i + 1];
        };
        std::vector<double> x(n), z(n);
        thomas(d, x);
        u[0] = gamma;
        u[n - 1] = c[n - 1];
        thomas(u, z);
        double fact = (x[0] + a[0] * x[n - 1] / gamma) /
                      (1.0 + z[0] + a[0] * z[n - 1] / gamma);
        for (int i = 0; i < n; ++i) M[i] = x[i] - fact * z[i];
    }

    // interval lookup with a walking hint (queries arrive nearly sorted)
    mutable int hint = 0;
    int interval(double s) const {
        const int n = static_cast<int>(t.size());
        int i = hint;
        if (i >= n || t[i] > s) i = 0;
        while (i + 1 < n && t[i + 1] <= s) ++i;
        hint = i;
        return i;
    }

    double eval(double s) const {
        double k = std::floor(s / T);
        double sl = s - k * T;
        const int n = static_cast<int>(t.size());
        int i = interval(sl);
        double t0 = t[i], t1 = i + 1 < n ? t[i + 1] : T + t[0];
        double y0 = y[i], y1 = i + 1 < n ? y[i + 1] : y[0];
        double M0 = M[i], M1 = i + 1 < n ? M[i + 1] : M[0];
        double hh = t1 - t0, A = (t1 - sl) / hh, B = (sl - t0) / hh;
        double v = A * y0 + B * y1 +
                   ((A * A * A - A) * M0 + (B * B * B - B) * M1) * hh * hh / 6.0;
        return v + ramp * (sl + k * T) / T;
    }

    double deriv(double s) const {
        double k = std::floor(s / T);
        double sl = s - k * T;
        const int n = static_cast<int>(t.size());
        int i = interval(sl);
        double t0 = t[i], t1 = i + 1 < n ? t[i + 1] : T + t[0];
        double y0 = y[i], y1 = i + 1 < n ? y[i + 1] : y[0];
        double M0 = M[i], M1 = i + 1 < n ? M[i + 1] : M[0];
        double hh = t1 - t0, A = (t1 - sl) / hh, B = (sl - t0) / hh;
        double v = (y1 - y0) / hh +
                   ((3 * B * B - 1) * M1 - (3 * A * A - 1) * M0) * hh / 6.0;
        return v + ramp / T;
    }
};

} // namespace

Component resample_component(const Component& cin, Ambient amb, int N) {
    if (N < 16) throw validation_error("resample: N must be at least 16");
    const int n = cin.n();
    if (n < 3) throw validation_error("resample: degenerate component");

    Lift L = lift_component(cin, amb);

    // cumulative chord parameter
    std::vector<double> knots(n);
    knots[0] = 0;
    for (int i = 1; i < n; ++i) knots[i] = knots[i - 1] + norm(L.p[i] - L.p[i - 1]);
    double T = knots[n - 1] + norm(lift_at(L, n) - L.p[n - 1]);
    if (!(T > 0)) throw validation_error("resample: degenerate curve with zero length");

    // already uniform at the requested count: identity (idempotence)
    if (N == n) {
        double target = T / n;
        double dev = 0;
        for (int i = 0; i < n; ++i)
            dev = std::max(dev, std::abs(norm(lift_at(L, i + 1) - lift_at(L, i)) - target));
        if (dev <= 1e-9 * target) return cin;
    }

    std::vector<double> xs(n), ys(n);
    for (int i = 0; i < n; ++i) { xs[i] = L.p[i].x; ys[i] = L.p[i].y; }
    PeriodicSpline sx, sy;
    sx.build(knots, xs, T, L.net.x);
    sy.build(knots, ys, T, L.net.y);

    // place N samples, then iterate parameters until all chords are equal
    std::vector<double> s(N);
    for (int j = 0; j < N; ++j) s[j] = T * j / N;
    std::vector<Vec2> P(N);
    for (int pass = 0; pass < 100; ++pass) {
        for (int j = 0; j < N; ++j) P[j] = {sx.eval(s[j]), sy.eval(s[j])};
        Vec2 closing = Vec2{P[0].x + L.net.x, P[0].y + L.net.y};
        std::vector<double> ell(N);
        double total = 0;
        for (int j = 0; j < N; ++j) {
            Vec2 next = j + 1 < N ? P[j + 1] : closing;
            ell[j] = norm(next - P[j]);
            total += ell[j];
        }
        double target = total / N, dev = 0;
        for (double l : ell) dev = std::max(dev, std::abs(l - target));
        if (dev <= 1e-12 * target) break;
        // move each interior sample by the accumulated chord surplus,
        // scaled by the local parametric speed; s[0] stays anchored
        double cum = 0;
        for (int j = 1; j < N; ++j) {
            cum += ell[j - 1] - target;
            double speed = std::hypot(sx.deriv(s[j]), sy.deriv(s[j]));
            s[j] -= cum / std::max(speed, 1e-12);
        }
    }
    for (int j = 0; j < N; ++j) P[j] = {sx.eval(s[j]), sy.eval(s[j])};

    Component out;
    out.orient = cin.orient;
    out.v.resize(N);
    for (int j = 0; j < N; ++j) {
        Vec2 p = P[j];
        if (amb == Ambient::torus) {
            p.x -= std::floor(p.x);
            p.y -= std::floor(p.y);
        }
        out.v[j] = p;
    }
    return out;
}

Curve resample(const Curve& c, int N) {
    Curve out;
    out.ambient = c.ambient;
    out.comp.reserve(c.comp.size());
    for (const auto& cc : c.comp) out.comp.push_back(resample_component(cc, c.ambient, N));
    return out;
}

} // namespace okflow
