#include <cmath>

#include "okflow/criticality.hpp"
#include "okflow/shapes.hpp"

namespace okflow {

namespace {

void fill_scalars(CriticalityReport& r, const Curve& shape, const Kernel& k, double gamma) {
    ShapeMeasures m = measures(shape);
    r.mass = std::abs(m.A);
    r.length = m.L;
    r.winding = m.winding;
    r.convex = shape.comp.size() == 1 && shape.ambient == Ambient::plane && is_convex(shape);
    const double logf = 1.0 + std::abs(std::log(m.L));
    if (shape.ambient == Ambient::torus || k.type == Kernel::Type::torus) {
        r.gamma_bar = gamma * std::sqrt(r.mass) * m.L * m.L * logf;
    } else if (k.type == Kernel::Type::log) {
        r.eta_bar = std::sqrt(r.mass) * m.L * m.L * logf;
        r.eta_bar_noL2 = std::sqrt(r.mass) * logf;
    } else {
        r.eta_bar = std::sqrt(r.mass) * std::pow(m.L, 2.0 - k.alpha);
    }
}

} // namespace

CriticalityReport el_residual(const Curve& shape, const Kernel& k, double gamma,
                              ParallelMode mode) {
    validate(shape);
    BoundaryField kap = curvature(shape);
    PotentialResult phi = potential_boundary(shape, k, mode);

    BoundaryField el;
    for (std::size_t c = 0; c < kap.val.size(); ++c) {
        std::vector<double> v(kap.val[c].size());
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = kap.val[c][i] + gamma * phi.boundary.val[c][i];
        el.val.push_back(std::move(v));
    }

    CriticalityReport r;
    r.lambda_hat = el.mean(shape);
    for (auto& comp : el.val)
        for (double& v : comp) v -= r.lambda_hat;
    r.residual = el;
    r.residual_sup = el.sup_abs();
    r.residual_mean = el.mean(shape);
    fill_scalars(r, shape, k, gamma);
    return r;
}

CriticalityReport stripe_residual(double w, int grid, double gamma, int N) {
    if (!(w > 0 && w < 1)) throw validation_error("stripe width must lie in (0,1)");
    Curve s = shapes::stripe(w, 1, N);
    // kappa vanishes identically on the straight boundary lines, so the
    // residual is gamma (phi - phibar)
    CriticalityReport r = el_residual(s, Kernel::Torus(grid), gamma);
    return r;
}

AnnulusRoot counterexample(const Kernel& k, int N, ParallelMode mode) {
    if (!k.plane()) throw validation_error("counterexample: log or riesz kernel");
    // EL mismatch between the two circles of the annulus (r, 2r):
    //   g(r) = [kappa + phi](inner) - [kappa + phi](outer)
    //        = -1/r - 1/(2r) + phi(r) - phi(2r)
    auto gap = [&](double r) {
        Curve a = shapes::annulus(r, 2.0 * r, N);
        std::vector<Vec2> targets{{r, 0.0}, {2.0 * r, 0.0}};
        auto ph = potential_plane_at(a, k, targets, mode);
        return (-1.0 / r + ph[0]) - (1.0 / (2.0 * r) + ph[1]);
    };

    double lo = 1e-3, hi = 10.0;
    double glo = gap(lo), ghi = gap(hi);
    if (glo * ghi > 0)
        throw numerical_error("counterexample: no sign change on (1e-3, 10): g(lo) = " +
                              fmt17(glo) + ", g(hi) = " + fmt17(ghi));
    for (int it = 0; it < 200 && (hi - lo) > 1e-12 * hi; ++it) {
        double mid = 0.5 * (lo + hi), gm = gap(mid);
        if (gm == 0) {
            lo = hi = mid;
            break;
        }
        (glo * gm < 0 ? hi : lo) = mid;
        (glo * gm < 0 ? ghi : glo) = gm;
    }

    AnnulusRoot out;
    out.r = 0.5 * (lo + hi);
    out.report = el_residual(shapes::annulus(out.r, 2.0 * out.r, N), k, 1.0, mode);

    if (k.type == Kernel::Type::log) {
        const double r = std::pow(0.5, 1.0 / 3.0), R = 2.0 * r;
        out.identity_radius = r;
        out.identity_gap = std::abs((-1.0 / r + 0.5 * (R * R - r * r)) -
                                    (1.0 / R + 0.5 * (r * r - R * R)));
        out.identity_residual_sup =
            el_residual(shapes::annulus(r, R, N), k, 1.0, mode).residual_sup;
    }
    return out;
}

ClassifyResult classify(const Curve& shape, const Kernel& k, double gamma, double tol,
                        ParallelMode mode) {
    ClassifyResult res;
    res.tol = tol;
    CriticalityReport r = el_residual(shape, k, gamma, mode);
    res.residual_sup = r.residual_sup;
    res.cls = r.residual_sup < tol ? Classification::critical_like : Classification::not_critical;
    res.derivative = energy_derivative_analytic(shape, k, gamma, mode);
    return res;
}

} // namespace okflow
