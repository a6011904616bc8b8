#include "okflow/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace okflow {

// Centered differences on the uniform parameter (spacing irrelevant: kappa is
// a ratio of derivatives).  Exactly symmetric on circles, second-order on
// smooth data.
BoundaryField curvature(const Curve& c) {
    BoundaryField f;
    for (const auto& cc : c.comp) {
        Lift L = lift_component(cc, c.ambient);
        const int N = cc.n();
        std::vector<double> k(N);
        for (int i = 0; i < N; ++i) {
            Vec2 xm = lift_at(L, i - 1), x0 = lift_at(L, i), xp = lift_at(L, i + 1);
            Vec2 T = 0.5 * (xp - xm);        // X' * h
            Vec2 K = xp - 2.0 * x0 + xm;     // X'' * h^2
            double sp = norm(T);
            k[i] = cross(T, K) / (sp * sp * sp);
        }
        f.val.push_back(std::move(k));
    }
    return f;
}

std::vector<std::vector<Vec2>> normals(const Curve& c) {
    std::vector<std::vector<Vec2>> out;
    for (const auto& cc : c.comp) {
        Lift L = lift_component(cc, c.ambient);
        const int N = cc.n();
        std::vector<Vec2> n(N);
        for (int i = 0; i < N; ++i) {
            Vec2 t = lift_at(L, i + 1) - lift_at(L, i - 1);
            double s = norm(t);
            n[i] = {t.y / s, -t.x / s}; // tangent rotated by -pi/2: outward for ccw
        }
        out.push_back(std::move(n));
    }
    return out;
}

BoundaryField support_function(const Curve& c, Vec2 origin) {
    if (c.ambient != Ambient::plane)
        throw validation_error("support function is defined for plane curves");
    if (c.comp.size() != 1)
        throw validation_error("support function needs a single boundary component");
    if (!c.comp[0].v.empty()) {
        // origin must be strictly inside
        bool inside = false;
        const auto& poly = c.comp[0].v;
        const int N = static_cast<int>(poly.size());
        for (int i = 0, j = N - 1; i < N; j = i++)
            if ((poly[i].y > origin.y) != (poly[j].y > origin.y)) {
                double xi = poly[j].x + (poly[i].x - poly[j].x) * (origin.y - poly[j].y) /
                                            (poly[i].y - poly[j].y);
                if (origin.x < xi) inside = !inside;
            }
        if (!inside) throw validation_error("support-function origin lies outside the curve");
    }
    auto nrm = normals(c);
    BoundaryField f;
    std::vector<double> p(c.comp[0].n());
    for (int i = 0; i < c.comp[0].n(); ++i)
        p[i] = dot(c.comp[0].v[i] - origin, nrm[0][i]);
    f.val.push_back(std::move(p));
    return f;
}

bool is_convex(const Curve& c, double tol) {
    if (c.ambient != Ambient::plane || c.comp.size() != 1)
        throw validation_error("convexity predicate expects a single plane curve");
    auto k = curvature(c);
    double mn = 1e300;
    for (double x : k.val[0]) mn = std::min(mn, x);
    if (c.comp[0].orient == Orient::cw) mn = -mn; // sign follows orientation
    return mn >= -tol;
}

static bool in_polygon(Vec2 p, const std::vector<Vec2>& poly) {
    bool in = false;
    const int N = static_cast<int>(poly.size());
    for (int i = 0, j = N - 1; i < N; j = i++)
        if ((poly[i].y > p.y) != (poly[j].y > p.y)) {
            double xi = poly[j].x + (poly[i].x - poly[j].x) * (p.y - poly[j].y) /
                                        (poly[i].y - poly[j].y);
            if (p.x < xi) in = !in;
        }
    return in;
}

// Star-shapedness: the polar angle seen from `center` must be monotone along
// every boundary component.  On the torus the component is lifted and the
// center replicated into the matching chart.
bool is_star_shaped(const Curve& c, Vec2 center) {
    // the center must lie inside the region itself
    if (c.ambient == Ambient::plane) {
        if (c.comp.size() != 1)
            throw validation_error("star-shape predicate expects a simply connected plane shape or a torus strip");
        if (!in_polygon(center, c.comp[0].v))
            throw validation_error("star-shape center lies outside the region");
    } else {
        ShapeMeasures m = measures(c);
        if (m.is_strip) {
            bool vertical = m.winding_y[0] != 0;
            double coord = vertical ? center.x : center.y;
            double mid = vertical ? m.centroid.x : m.centroid.y;
            double d = coord - mid;
            d -= std::round(d);
            if (std::abs(d) > 0.5 * m.L_in + 1e-12)
                throw validation_error("star-shape center lies outside the inscribed slab");
        } else if (c.comp.size() == 1) {
            Lift L = lift_component(c.comp[0], c.ambient);
            Vec2 p0 = L.p[0];
            Vec2 ctr{p0.x + (center.x - p0.x) - std::round(center.x - p0.x),
                     p0.y + (center.y - p0.y) - std::round(center.y - p0.y)};
            if (!in_polygon(ctr, L.p))
                throw validation_error("star-shape center lies outside the region");
        }
    }
    for (const auto& cc : c.comp) {
        Lift L = lift_component(cc, c.ambient);
        const int N = static_cast<int>(L.p.size());
        double pos = 0, neg = 0;
        if (c.ambient == Ambient::torus && (L.net.x != 0 || L.net.y != 0)) {
            // strip boundary line: monotone in the graph coordinate, i.e. the
            // component is a single-valued graph over the wrapping axis
            const bool wraps_y = L.net.y != 0;
            for (int i = 0; i < N; ++i) {
                Vec2 e = lift_at(L, i + 1) - lift_at(L, i);
                double d = wraps_y ? e.y : e.x;
                if (d > 0) pos += d; else neg -= d;
            }
        } else {
            Vec2 ctr = center;
            if (c.ambient == Ambient::torus) {
                // shift center into the chart of the lifted component
                Vec2 p0 = L.p[0];
                ctr = {p0.x + (center.x - p0.x) - std::round(center.x - p0.x),
                       p0.y + (center.y - p0.y) - std::round(center.y - p0.y)};
            }
            for (int i = 0; i < N; ++i) {
                Vec2 a = lift_at(L, i) - ctr;
                Vec2 b = lift_at(L, i + 1) - ctr;
                if (norm2(a) < 1e-24 || norm2(b) < 1e-24)
                    throw validation_error("star-shape center lies on the boundary");
                double dth = std::atan2(cross(a, b), dot(a, b));
                if (dth > 0) pos += dth; else neg -= dth;
            }
        }
        // monotone means all increments share one sign (tiny slack for
        // collinear jitter)
        if (std::min(pos, neg) > 1e-9 * std::max(1.0, std::max(pos, neg))) return false;
    }
    return true;
}

} // namespace okflow
