#include <algorithm>
#include <cmath>

#include "okflow/potential.hpp"

namespace okflow {

Kernel Kernel::parse(const std::string& s) {
    Kernel k;
    auto colon = s.find(':');
    std::string kind = s.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : s.substr(colon + 1);
    if (kind == "log") {
        if (!rest.empty()) throw validation_error("kernel 'log' takes no parameter");
        k = Kernel::Log();
    } else if (kind == "riesz") {
        if (rest.empty()) throw validation_error("kernel 'riesz' needs alpha, e.g. riesz:0.5");
        k = Kernel::Riesz(std::strtod(rest.c_str(), nullptr));
    } else if (kind == "torus") {
        k = Kernel::Torus(rest.empty() ? 512 : std::atoi(rest.c_str()));
    } else {
        throw validation_error("unknown kernel '" + kind + "'");
    }
    k.check();
    return k;
}

// 8-point Gauss-Legendre on [-1,1]
static const double GLX[8] = {
    -0.9602898564975362, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
    0.1834346424956498, 0.5255324099163290, 0.7966664774136267, 0.9602898564975362};
static const double GLW[8] = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
    0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};

// The area integral of G over the region reduces to a line integral:
//   phi(y) = sum over panels of  d_line * |panel| * int g(r(u)) du,
// where g = h/r with h the radial antiderivative solving h' + h/r = G(r),
// and d_line = (x - y).n is constant along a straight panel.
//   log kernel:   h(r) = r(-log r/(4pi) + 1/(8pi)),  g(r) = -log(r)/(4pi) + 1/(8pi)
//   riesz kernel: h(r) = r^(1-alpha)/(2-alpha),      g(r) = r^(-alpha)/(2-alpha)
namespace {

struct PanelSet {
    std::vector<Vec2> a, e;       // panel start and edge vector
    std::vector<double> len, inv2; // |e| and 1/|e|^2
    std::vector<Vec2> nrm;        // outward unit normal
};

PanelSet build_panels(const Curve& c) {
    PanelSet ps;
    for (const auto& cc : c.comp) {
        Lift L = lift_component(cc, c.ambient);
        const int N = cc.n();
        for (int i = 0; i < N; ++i) {
            Vec2 A = lift_at(L, i), B = lift_at(L, i + 1);
            Vec2 E = B - A;
            double l = norm(E);
            if (l <= 0) throw validation_error("degenerate panel in potential evaluation");
            ps.a.push_back(A);
            ps.e.push_back(E);
            ps.len.push_back(l);
            ps.inv2.push_back(1.0 / (l * l));
            ps.nrm.push_back({E.y / l, -E.x / l});
        }
    }
    return ps;
}

struct GFun {
    bool is_log;
    double alpha, c_riesz;
    double operator()(double r) const {
        if (is_log) return -std::log(r) / (4.0 * M_PI) + 1.0 / (8.0 * M_PI);
        return std::pow(r, -alpha) * c_riesz;
    }
};

double phi_one(const PanelSet& ps, const GFun& g, Vec2 y) {
    double total = 0;
    const std::size_t n = ps.a.size();
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 ap = y - ps.a[i];
        double dline = -(ap.x * ps.nrm[i].x + ap.y * ps.nrm[i].y); // (x - y).n, any x on the line
        double elen = ps.len[i];
        if (std::abs(dline) < 1e-12 * elen) continue; // on the panel line: exact zero
        double t0 = std::clamp(dot(ap, ps.e[i]) * ps.inv2[i], 0.0, 1.0);
        Vec2 closest = ps.a[i] + t0 * ps.e[i];
        double dseg = norm(y - closest);

        double acc = 0;
        auto gl = [&](double lo, double hi) {
            double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
            double s = 0;
            for (int q = 0; q < 8; ++q) {
                double u = mid + half * GLX[q];
                Vec2 x = ps.a[i] + u * ps.e[i];
                s += GLW[q] * g(norm(x - y));
            }
            return s * half;
        };
        if (dseg < 2.0 * elen) {
            // graded subdivision toward the closest point
            static const double cuts[6] = {0.0, 1.0 / 16, 1.0 / 8, 1.0 / 4, 1.0 / 2, 1.0};
            if (t0 > 1e-15) // side [0, t0], singular end at hi: mirror the cuts
                for (int s = 5; s > 0; --s)
                    acc += gl(t0 * (1.0 - cuts[s]), t0 * (1.0 - cuts[s - 1]));
            if (t0 < 1.0 - 1e-15) // side [t0, 1], singular end at lo
                for (int s = 0; s < 5; ++s)
                    acc += gl(t0 + (1.0 - t0) * cuts[s], t0 + (1.0 - t0) * cuts[s + 1]);
        } else {
            acc = gl(0.0, 1.0);
        }
        total += acc * dline * elen;
    }
    return total;
}

} // namespace

std::vector<double> potential_plane_at(const Curve& shape, const Kernel& k,
                                       const std::vector<Vec2>& targets, ParallelMode mode) {
    k.check();
    if (!k.plane()) throw validation_error("potential_plane_at: plane kernels only");
    if (shape.ambient != Ambient::plane)
        throw validation_error("potential_plane_at: shape must live in the plane");
    PanelSet ps = build_panels(shape);
    GFun g{k.type == Kernel::Type::log, k.alpha,
           k.type == Kernel::Type::riesz ? 1.0 / (2.0 - k.alpha) : 0.0};

    std::vector<double> out(targets.size());
    if (mode == ParallelMode::omp) {
        const int nt = worker_threads();
#pragma omp parallel for schedule(static) num_threads(nt)
        for (long long j = 0; j < static_cast<long long>(targets.size()); ++j)
            out[j] = phi_one(ps, g, targets[j]);
    } else {
        for (std::size_t j = 0; j < targets.size(); ++j) out[j] = phi_one(ps, g, targets[j]);
    }
    return out;
}

std::pair<double, double> boundary_stats(const BoundaryField& f, const Curve& shape) {
    double m = f.mean(shape);
    return {m, f.sup_dev(shape)};
}

PotentialResult potential_boundary(const Curve& shape, const Kernel& k, ParallelMode mode) {
    k.check();
    if (k.type == Kernel::Type::torus) {
        if (shape.ambient != Ambient::torus)
            throw validation_error("torus kernel needs a torus shape");
        return potential_torus(shape, k.grid);
    }
    std::vector<Vec2> targets;
    for (const auto& cc : shape.comp) targets.insert(targets.end(), cc.v.begin(), cc.v.end());
    auto vals = potential_plane_at(shape, k, targets, mode);
    PotentialResult r;
    std::size_t at = 0;
    for (const auto& cc : shape.comp) {
        r.boundary.val.emplace_back(vals.begin() + at, vals.begin() + at + cc.n());
        at += cc.n();
    }
    std::tie(r.mean, r.sup_dev) = boundary_stats(r.boundary, shape);
    return r;
}

} // namespace okflow
