#include <cmath>

#include "okflow/potential.hpp"

namespace okflow {

namespace {

// 6-point degree-4 symmetric triangle rule (barycentric orbit form).
struct TriRule {
    double a, b, c, w;
};
static const TriRule TRI6[6] = {
    {0.108103018168070, 0.445948490915965, 0.445948490915965, 0.223381589678011},
    {0.445948490915965, 0.108103018168070, 0.445948490915965, 0.223381589678011},
    {0.445948490915965, 0.445948490915965, 0.108103018168070, 0.223381589678011},
    {0.816847572980459, 0.091576213509771, 0.091576213509771, 0.109951743655322},
    {0.091576213509771, 0.816847572980459, 0.091576213509771, 0.109951743655322},
    {0.091576213509771, 0.091576213509771, 0.816847572980459, 0.109951743655322},
};

// integral of phi over the plane region via a signed fan of triangles from
// the global area centroid (signed triangles cancel over holes).
double plane_region_integral_of_phi(const Curve& shape, const Kernel& k, ParallelMode mode) {
    double area = 0;
    Vec2 cmom{0, 0};
    for (const auto& cc : shape.comp) {
        double a = 0;
        Vec2 m{0, 0};
        const int N = cc.n();
        for (int i = 0; i < N; ++i) {
            Vec2 p = cc.v[i], q = cc.v[(i + 1) % N];
            double w = cross(p, q);
            a += 0.5 * w;
            m = m + (w / 6.0) * (p + q);
        }
        area += a;
        cmom = cmom + m;
    }
    if (std::abs(area) < 1e-14) throw numerical_error("region has (near) zero area");
    Vec2 C = (1.0 / area) * cmom;

    std::vector<Vec2> pts;
    std::vector<double> wts;
    for (const auto& cc : shape.comp) {
        const int N = cc.n();
        for (int i = 0; i < N; ++i) {
            Vec2 A = cc.v[i], B = cc.v[(i + 1) % N];
            double sa = 0.5 * cross(A - C, B - C);
            for (const auto& r : TRI6) {
                pts.push_back(r.a * C + r.b * A + r.c * B);
                wts.push_back(r.w * sa);
            }
        }
    }
    auto phi = potential_plane_at(shape, k, pts, mode);
    double s = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) s += wts[i] * phi[i];
    return s;
}

} // namespace

double nonlocal_energy(const Curve& shape, const Kernel& k, double gamma, ParallelMode mode) {
    k.check();
    if (k.type == Kernel::Type::torus) {
        TorusField f = torus_solve(shape, k.grid);
        double s = 0;
        for (std::size_t i = 0; i < f.phi.size(); ++i) s += f.phi[i] * f.source[i];
        return gamma * s / static_cast<double>(f.phi.size());
    }
    if (shape.ambient != Ambient::plane)
        throw validation_error("plane kernel needs a plane shape");
    return gamma * plane_region_integral_of_phi(shape, k, mode);
}

EnergyBreakdown total_energy(const Curve& shape, const Kernel& k, double gamma,
                             ParallelMode mode) {
    EnergyBreakdown e;
    e.perimeter = measures(shape).L;
    e.nonlocal = nonlocal_energy(shape, k, gamma, mode);
    e.total = e.perimeter + e.nonlocal;
    return e;
}

} // namespace okflow
