#include "okflow/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <unordered_map>

namespace okflow {

// ---------------------------------------------------------------------------
// lifting

static double wrap_diff(double d) {
    // reduce a coordinate difference to (-1/2, 1/2]
    return d - std::round(d);
}

Lift lift_component(const Component& c, Ambient amb) {
    Lift out;
    out.p.reserve(c.v.size());
    if (amb == Ambient::plane) {
        out.p = c.v;
        return out;
    }
    Vec2 cur = c.v.front();
    out.p.push_back(cur);
    for (std::size_t i = 1; i < c.v.size(); ++i) {
        Vec2 d{wrap_diff(c.v[i].x - c.v[i - 1].x), wrap_diff(c.v[i].y - c.v[i - 1].y)};
        cur = cur + d;
        out.p.push_back(cur);
    }
    // closing edge decides the winding displacement
    Vec2 dclose{wrap_diff(c.v.front().x - c.v.back().x),
                wrap_diff(c.v.front().y - c.v.back().y)};
    Vec2 end = cur + dclose;
    out.net = {std::round(end.x - c.v.front().x), std::round(end.y - c.v.front().y)};
    return out;
}

Vec2 lift_at(const Lift& L, int i) {
    const int N = static_cast<int>(L.p.size());
    int q = i >= 0 ? i / N : -((-i + N - 1) / N);
    int r = i - q * N;
    return L.p[r] + static_cast<double>(q) * L.net;
}

std::vector<Vec2> lift_derivative6(const Lift& L) {
    const int N = static_cast<int>(L.p.size());
    const double h = 2.0 * M_PI / N;
    std::vector<Vec2> d(N);
    for (int i = 0; i < N; ++i) {
        Vec2 a = lift_at(L, i + 1) - lift_at(L, i - 1);
        Vec2 b = lift_at(L, i + 2) - lift_at(L, i - 2);
        Vec2 c = lift_at(L, i + 3) - lift_at(L, i - 3);
        d[i] = (1.0 / (60.0 * h)) * (45.0 * a - 9.0 * b + c);
    }
    return d;
}

// ---------------------------------------------------------------------------
// polygon-grade measures (what the flow conserves exactly)

static double polygon_perimeter_c(const Lift& L) {
    const int N = static_cast<int>(L.p.size());
    double s = 0;
    for (int i = 0; i < N; ++i) s += norm(lift_at(L, i + 1) - lift_at(L, i));
    return s;
}

static double polygon_area_c(const Lift& L) {
    const int N = static_cast<int>(L.p.size());
    double s = 0;
    for (int i = 0; i < N; ++i) {
        Vec2 a = lift_at(L, i), b = lift_at(L, i + 1);
        s += 0.5 * (a.x + b.x) * (b.y - a.y); // shoelace as integral of x dy
    }
    return s;
}

double polygon_perimeter(const Curve& c) {
    double s = 0;
    for (const auto& cc : c.comp) s += polygon_perimeter_c(lift_component(cc, c.ambient));
    return s;
}

double polygon_area(const Curve& c) {
    double s = 0;
    for (const auto& cc : c.comp) s += polygon_area_c(lift_component(cc, c.ambient));
    if (c.ambient == Ambient::torus) {
        s -= std::floor(s); // area of the indicated region in one fundamental cell
    }
    return s;
}

Vec2 polygon_centroid(const Component& c, Ambient amb) {
    Lift L = lift_component(c, amb);
    const int N = static_cast<int>(L.p.size());
    double a = 0;
    Vec2 m{0, 0};
    for (int i = 0; i < N; ++i) {
        Vec2 p = lift_at(L, i), q = lift_at(L, i + 1);
        double w = cross(p, q);
        a += 0.5 * w;
        m = m + (w / 6.0) * (p + q);
    }
    if (std::abs(a) < 1e-300) throw numerical_error("degenerate polygon: zero area");
    return (1.0 / a) * m;
}

// ---------------------------------------------------------------------------
// spectral-grade measures

static double spectral_perimeter_c(const Lift& L) {
    const int N = static_cast<int>(L.p.size());
    const double h = 2.0 * M_PI / N;
    auto d = lift_derivative6(L);
    double s = 0;
    for (int i = 0; i < N; ++i) s += norm(d[i]);
    return s * h;
}

static double spectral_area_c(const Lift& L) {
    const int N = static_cast<int>(L.p.size());
    const double h = 2.0 * M_PI / N;
    auto d = lift_derivative6(L);
    double s = 0;
    for (int i = 0; i < N; ++i) s += L.p[i].x * d[i].y;
    // For a winding component x carries a linear ramp; the trapezoid rule on
    // the periodic part is still spectral and the ramp contributes exactly.
    return s * h;
}

double spectral_perimeter(const Curve& c) {
    double s = 0;
    for (const auto& cc : c.comp) s += spectral_perimeter_c(lift_component(cc, c.ambient));
    return s;
}

double spectral_area(const Curve& c) {
    double s = 0;
    bool wraps = false;
    for (const auto& cc : c.comp) {
        Lift L = lift_component(cc, c.ambient);
        if (L.net.x != 0 || L.net.y != 0) wraps = true;
        s += spectral_area_c(L);
    }
    if (c.ambient == Ambient::torus) {
        if (wraps) return polygon_area(c);
        s -= std::floor(s);
    }
    return s;
}

std::vector<std::vector<double>> arc_weights(const Curve& c) {
    std::vector<std::vector<double>> w;
    w.reserve(c.comp.size());
    for (const auto& cc : c.comp) {
        Lift L = lift_component(cc, c.ambient);
        const int N = cc.n();
        const double h = 2.0 * M_PI / N;
        auto d = lift_derivative6(L);
        std::vector<double> wc(N);
        for (int i = 0; i < N; ++i) wc[i] = norm(d[i]) * h;
        w.push_back(std::move(wc));
    }
    return w;
}

// ---------------------------------------------------------------------------
// BoundaryField statistics

double BoundaryField::sup_abs() const {
    double m = 0;
    for (const auto& comp : val)
        for (double x : comp) m = std::max(m, std::abs(x));
    return m;
}

double BoundaryField::mean(const Curve& c) const {
    auto w = arc_weights(c);
    double num = 0, den = 0;
    for (std::size_t k = 0; k < val.size(); ++k)
        for (std::size_t i = 0; i < val[k].size(); ++i) {
            num += val[k][i] * w[k][i];
            den += w[k][i];
        }
    return num / den;
}

double BoundaryField::sup_dev(const Curve& c) const {
    double m = mean(c), s = 0;
    for (const auto& comp : val)
        for (double x : comp) s = std::max(s, std::abs(x - m));
    return s;
}

double BoundaryField::l2_dev(const Curve& c) const {
    auto w = arc_weights(c);
    double m = mean(c), s = 0;
    for (std::size_t k = 0; k < val.size(); ++k)
        for (std::size_t i = 0; i < val[k].size(); ++i) {
            double d = val[k][i] - m;
            s += d * d * w[k][i];
        }
    return s;
}

// ---------------------------------------------------------------------------
// winding / turning

static double turning_sum(const Lift& L) {
    const int N = static_cast<int>(L.p.size());
    double total = 0;
    for (int i = 0; i < N; ++i) {
        Vec2 e0 = lift_at(L, i + 1) - lift_at(L, i);
        Vec2 e1 = lift_at(L, i + 2) - lift_at(L, i + 1);
        total += std::atan2(cross(e0, e1), dot(e0, e1));
    }
    return total;
}

static int turning_winding(const Lift& L) {
    double t = turning_sum(L) / (2.0 * M_PI);
    double r = std::round(t);
    if (std::abs(t - r) > 0.1)
        throw numerical_error("turning angle sum is not near an integer multiple of 2pi: " + fmt17(t));
    return static_cast<int>(r);
}

// ---------------------------------------------------------------------------
// enclosing / inscribed disks

namespace {

struct Disk {
    Vec2 c;
    double r2 = -1;
    bool contains(Vec2 p) const { return norm2(p - c) <= r2 * (1 + 1e-12) + 1e-300; }
};

Disk disk2(Vec2 a, Vec2 b) { return {0.5 * (a + b), norm2(0.5 * (a - b))}; }

Disk disk3(Vec2 a, Vec2 b, Vec2 c) {
    double d = 2.0 * cross(b - a, c - a);
    if (std::abs(d) < 1e-30) {
        // collinear: fall back to the widest pair
        Disk best = disk2(a, b);
        for (Disk t : {disk2(a, c), disk2(b, c)})
            if (t.r2 > best.r2) best = t;
        return best;
    }
    double na = norm2(a), nb = norm2(b), nc = norm2(c);
    Vec2 u{(na * (b.y - c.y) + nb * (c.y - a.y) + nc * (a.y - b.y)) / d,
           (na * (c.x - b.x) + nb * (a.x - c.x) + nc * (b.x - a.x)) / d};
    return {u, norm2(a - u)};
}

// Welzl's algorithm, iterative restarts flavor; deterministic via fixed seed.
Disk min_enclosing_disk(std::vector<Vec2> pts) {
    std::mt19937 rng(12345u);
    std::shuffle(pts.begin(), pts.end(), rng);
    Disk d{pts[0], 0};
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (d.contains(pts[i])) continue;
        d = {pts[i], 0};
        for (std::size_t j = 0; j < i; ++j) {
            if (d.contains(pts[j])) continue;
            d = disk2(pts[i], pts[j]);
            for (std::size_t k = 0; k < j; ++k) {
                if (d.contains(pts[k])) continue;
                d = disk3(pts[i], pts[j], pts[k]);
            }
        }
    }
    return d;
}

double dist_to_segment(Vec2 p, Vec2 a, Vec2 b) {
    Vec2 ab = b - a;
    double t = dot(p - a, ab) / std::max(norm2(ab), 1e-300);
    t = std::clamp(t, 0.0, 1.0);
    return norm(p - (a + t * ab));
}

double dist_to_polygon(Vec2 p, const std::vector<Vec2>& poly) {
    double d = 1e300;
    const int N = static_cast<int>(poly.size());
    for (int i = 0; i < N; ++i)
        d = std::min(d, dist_to_segment(p, poly[i], poly[(i + 1) % N]));
    return d;
}

bool point_in_polygon(Vec2 p, const std::vector<Vec2>& poly) {
    // even-odd crossing rule
    bool in = false;
    const int N = static_cast<int>(poly.size());
    for (int i = 0, j = N - 1; i < N; j = i++) {
        if ((poly[i].y > p.y) != (poly[j].y > p.y)) {
            double xi = poly[j].x + (poly[i].x - poly[j].x) * (p.y - poly[j].y) / (poly[i].y - poly[j].y);
            if (p.x < xi) in = !in;
        }
    }
    return in;
}

// Largest inscribed disk: maximize distance-to-boundary over interior points.
// Multi-start coordinate pattern search; N is small, exactness over speed.
double inradius(const std::vector<Vec2>& poly) {
    double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
    for (auto p : poly) {
        xlo = std::min(xlo, p.x); xhi = std::max(xhi, p.x);
        ylo = std::min(ylo, p.y); yhi = std::max(yhi, p.y);
    }
    auto score = [&](Vec2 p) {
        return point_in_polygon(p, poly) ? dist_to_polygon(p, poly) : -dist_to_polygon(p, poly);
    };
    std::vector<Vec2> starts;
    const int G = 12;
    for (int i = 1; i < G; ++i)
        for (int j = 1; j < G; ++j) {
            Vec2 p{xlo + (xhi - xlo) * i / G, ylo + (yhi - ylo) * j / G};
            if (point_in_polygon(p, poly)) starts.push_back(p);
        }
    std::sort(starts.begin(), starts.end(), [&](Vec2 a, Vec2 b) { return score(a) > score(b); });
    if (starts.size() > 6) starts.resize(6);

    double best = 0;
    for (Vec2 s : starts) {
        Vec2 p = s;
        double f = score(p);
        double step = std::max(xhi - xlo, yhi - ylo) / 8.0;
        const double isq = std::sqrt(0.5);
        while (step > 1e-10) {
            bool moved = false;
            const Vec2 dirs[8] = {{step, 0}, {-step, 0}, {0, step}, {0, -step},
                                  {step * isq, step * isq}, {step * isq, -step * isq},
                                  {-step * isq, step * isq}, {-step * isq, -step * isq}};
            for (Vec2 d : dirs) {
                double ft = score(p + d);
                if (ft > f) { f = ft; p = p + d; moved = true; break; }
            }
            if (!moved) step *= 0.5;
        }
        best = std::max(best, f);
    }
    return best;
}

} // namespace

// ---------------------------------------------------------------------------
// measures

ShapeMeasures measures(const Curve& c) {
    validate(c);
    ShapeMeasures m;
    m.n_components = static_cast<int>(c.comp.size());

    std::vector<Lift> lifts;
    lifts.reserve(c.comp.size());
    for (const auto& cc : c.comp) lifts.push_back(lift_component(cc, c.ambient));

    double area = 0;
    for (const auto& L : lifts) {
        m.L += spectral_perimeter_c(L);
        area += spectral_area_c(L);
        m.winding_x.push_back(static_cast<int>(L.net.x));
        m.winding_y.push_back(static_cast<int>(L.net.y));
        m.winding.push_back(turning_winding(L));
    }
    if (c.ambient == Ambient::torus) {
        bool wraps = false;
        for (std::size_t k = 0; k < lifts.size(); ++k)
            if (m.winding_x[k] != 0 || m.winding_y[k] != 0) wraps = true;
        if (wraps) {
            // winding components: fall back to the exact polygon area mod 1
            area = polygon_area(c);
        } else {
            area -= std::floor(area);
        }
    }
    m.A = area;

    if (c.ambient == Ambient::plane && m.n_components == 1 && m.winding[0] == 1) {
        m.R_out = std::sqrt(min_enclosing_disk(c.comp[0].v).r2);
        m.R_in = inradius(c.comp[0].v);
        m.centroid = polygon_centroid(c.comp[0], c.ambient);
    } else if (c.ambient == Ambient::plane) {
        // area centroid of the signed union
        double atot = 0;
        Vec2 mom{0, 0};
        for (const auto& cc : c.comp) {
            Lift L = lift_component(cc, c.ambient);
            double a = polygon_area_c(L);
            Vec2 g = polygon_centroid(cc, c.ambient);
            atot += a;
            mom = mom + a * g;
        }
        if (std::abs(atot) > 1e-300) m.centroid = (1.0 / atot) * mom;
    }

    if (c.ambient == Ambient::torus && m.n_components == 2) {
        // strip = two components winding the same axis once, opposite senses
        for (int axis = 0; axis < 2; ++axis) {
            const auto& w = axis == 0 ? m.winding_y : m.winding_x; // vertical strip wraps y
            if (std::abs(w[0]) == 1 && w[0] == -w[1] && m.winding[0] == 0 && m.winding[1] == 0) {
                m.is_strip = true;
                // transversal coordinate: x for a y-wrapping (vertical) strip
                auto coord = [&](Vec2 p) { return axis == 0 ? p.x : p.y; };
                // component traveling +axis has the region on its left;
                // for a vertical strip that is the right boundary line.
                int right = w[0] == 1 ? 0 : 1;
                int left = 1 - right;
                auto stats = [&](int k, double& lo, double& hi, double& mean) {
                    lo = 1e300; hi = -1e300; mean = 0;
                    double base = coord(lifts[k].p[0]);
                    for (Vec2 p : lifts[k].p) {
                        double x = base + wrap_diff(coord(p) - base);
                        lo = std::min(lo, x); hi = std::max(hi, x); mean += x;
                    }
                    mean /= lifts[k].p.size();
                };
                double llo, lhi, lmean, rlo, rhi, rmean;
                stats(left, llo, lhi, lmean);
                stats(right, rlo, rhi, rmean);
                double off = rmean - lmean;
                off -= std::floor(off); // relative offset in (0,1)
                double shift = (lmean + off) - rmean;
                m.L_in = (rlo + shift) - lhi;
                m.L_out = (rhi + shift) - llo;
                double center = 0.5 * ((rlo + shift) + lhi);
                center -= std::floor(center);
                m.centroid = axis == 0 ? Vec2{center, 0.5} : Vec2{0.5, center};
            }
        }
    }
    return m;
}

// ---------------------------------------------------------------------------
// self-intersection

static bool segs_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    auto orient = [](Vec2 p, Vec2 q, Vec2 r) {
        double v = cross(q - p, r - p);
        return (v > 1e-15) - (v < -1e-15);
    };
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    auto on = [](Vec2 p, Vec2 q, Vec2 r) {
        return std::min(p.x, q.x) - 1e-15 <= r.x && r.x <= std::max(p.x, q.x) + 1e-15 &&
               std::min(p.y, q.y) - 1e-15 <= r.y && r.y <= std::max(p.y, q.y) + 1e-15;
    };
    if (o1 == 0 && on(a, b, c)) return true;
    if (o2 == 0 && on(a, b, d)) return true;
    if (o3 == 0 && on(c, d, a)) return true;
    if (o4 == 0 && on(c, d, b)) return true;
    return false;
}

bool self_intersects(const Curve& c) {
    // Uniform-grid broadphase: only edge pairs whose bounding boxes share a
    // cell get the exact segment test.  Called once per flow step, so this
    // needs to be close to O(N).
    struct Edge { Vec2 a, b; int comp, idx; };
    std::vector<Edge> edges;
    double maxlen = 0;
    for (std::size_t k = 0; k < c.comp.size(); ++k) {
        Lift L = lift_component(c.comp[k], c.ambient);
        const int N = static_cast<int>(L.p.size());
        for (int i = 0; i < N; ++i) {
            Edge e{lift_at(L, i), lift_at(L, i + 1), static_cast<int>(k), i};
            maxlen = std::max(maxlen, norm(e.b - e.a));
            edges.push_back(e);
        }
    }
    const int n = static_cast<int>(edges.size());
    if (maxlen <= 0) return false;

    double xlo = 1e300, ylo = 1e300;
    for (const auto& e : edges) {
        xlo = std::min({xlo, e.a.x, e.b.x});
        ylo = std::min({ylo, e.a.y, e.b.y});
    }
    const bool torus = c.ambient == Ambient::torus;
    double cell = maxlen * 1.01;
    int M = 0; // torus: cells per period so that shifts reduce to index wrap
    if (torus) {
        M = std::max(3, static_cast<int>(std::floor(1.0 / cell)));
        cell = 1.0 / M;
        xlo = ylo = 0.0;
    }
    auto cell_of = [&](double x, double lo) { return static_cast<int>(std::floor((x - lo) / cell)); };

    std::unordered_map<long long, std::vector<int>> grid;
    grid.reserve(2 * n);
    auto key = [&](int ix, int iy) {
        if (torus) {
            ix = ((ix % M) + M) % M;
            iy = ((iy % M) + M) % M;
        }
        return (static_cast<long long>(ix) << 22) ^ (static_cast<long long>(iy) & 0x3fffff);
    };
    for (int i = 0; i < n; ++i) {
        int x0 = cell_of(std::min(edges[i].a.x, edges[i].b.x), xlo);
        int x1 = cell_of(std::max(edges[i].a.x, edges[i].b.x), xlo);
        int y0 = cell_of(std::min(edges[i].a.y, edges[i].b.y), ylo);
        int y1 = cell_of(std::max(edges[i].a.y, edges[i].b.y), ylo);
        for (int ix = x0 - 1; ix <= x1 + 1; ++ix)
            for (int iy = y0 - 1; iy <= y1 + 1; ++iy)
                grid[key(ix, iy)].push_back(i);
    }

    for (const auto& [k, bucket] : grid) {
        for (std::size_t bi = 0; bi < bucket.size(); ++bi) {
            for (std::size_t bj = bi + 1; bj < bucket.size(); ++bj) {
                const Edge& e = edges[bucket[bi]];
                const Edge& f = edges[bucket[bj]];
                if (e.comp == f.comp) {
                    int N = c.comp[e.comp].n();
                    int d = std::abs(e.idx - f.idx);
                    if (d <= 1 || d == N - 1) continue; // adjacent: shared vertex
                }
                Vec2 fa = f.a, fb = f.b;
                if (torus) {
                    // minimal-image shift of f toward e (edges are short)
                    Vec2 ce = 0.5 * (e.a + e.b), cf = 0.5 * (fa + fb);
                    Vec2 s{std::round(ce.x - cf.x), std::round(ce.y - cf.y)};
                    fa = fa + s;
                    fb = fb + s;
                }
                if (std::max(e.a.x, e.b.x) < std::min(fa.x, fb.x)) continue;
                if (std::min(e.a.x, e.b.x) > std::max(fa.x, fb.x)) continue;
                if (std::max(e.a.y, e.b.y) < std::min(fa.y, fb.y)) continue;
                if (std::min(e.a.y, e.b.y) > std::max(fa.y, fb.y)) continue;
                if (segs_intersect(e.a, e.b, fa, fb)) return true;
            }
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// validation

void validate(const Curve& c) {
    if (c.comp.empty()) throw validation_error("curve has no components");
    for (const auto& cc : c.comp) {
        if (cc.n() < 16) throw validation_error("component has fewer than 16 vertices");
        for (Vec2 p : cc.v) {
            if (!std::isfinite(p.x) || !std::isfinite(p.y))
                throw validation_error("non-finite vertex coordinate");
            if (c.ambient == Ambient::torus && (p.x < 0 || p.x >= 1 || p.y < 0 || p.y >= 1))
                throw validation_error("torus coordinates must lie in [0,1)^2");
        }
        Lift L = lift_component(cc, c.ambient);
        if (c.ambient == Ambient::plane || (L.net.x == 0 && L.net.y == 0)) {
            double a = polygon_area_c(L);
            if (std::abs(a) < 1e-300) throw validation_error("degenerate component: zero area");
            bool ccw = a > 0;
            if (ccw != (cc.orient == Orient::ccw))
                throw validation_error("orientation flag inconsistent with signed area");
        }
    }
}

} // namespace okflow
