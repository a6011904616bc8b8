#include <algorithm>
#include <cmath>

#include "okflow/flow.hpp"
#include "okflow/shapes.hpp"

namespace okflow {

namespace {

// kappa, kbar, dissipation and spectral L/A in one pass
struct StepGeom {
    BoundaryField kappa;
    std::vector<std::vector<double>> w; // arc weights
    double L_spec = 0, A_spec = 0;
    double kbar = 0;
    double dissipation = 0;
    double deficit = 0;
};

StepGeom step_geometry(const Curve& c) {
    StepGeom g;
    g.kappa = curvature(c);
    g.w = arc_weights(c);
    g.L_spec = spectral_perimeter(c);
    g.A_spec = spectral_area(c);
    double s = 0;
    for (std::size_t k = 0; k < g.w.size(); ++k)
        for (std::size_t i = 0; i < g.w[k].size(); ++i) s += g.w[k][i] * g.kappa.val[k][i];
    g.kbar = s / g.L_spec;
    double d = 0;
    for (std::size_t k = 0; k < g.w.size(); ++k)
        for (std::size_t i = 0; i < g.w[k].size(); ++i) {
            double r = g.kappa.val[k][i] - g.kbar;
            d += g.w[k][i] * r * r;
        }
    g.dissipation = d;
    g.deficit = g.L_spec - 2.0 * std::sqrt(M_PI * std::max(0.0, g.A_spec));
    return g;
}

void fill_energy(TraceRecord& rec, const Curve& c, const FlowParams& p) {
    EnergyBreakdown e = total_energy(c, p.kernel, p.gamma, p.mode);
    rec.E_total = e.total;
    rec.E_perim = e.perimeter;
    rec.E_nonlocal = e.nonlocal;
    EnergyDerivative d = energy_derivative_analytic(c, p.kernel, p.gamma, p.mode);
    rec.dEdt_analytic = d.total;
    // sup residual of kappa + gamma phi = lambda with lambda the joint mean
    BoundaryField kap = curvature(c);
    PotentialResult phi = potential_boundary(c, p.kernel, p.mode);
    BoundaryField el;
    for (std::size_t k = 0; k < kap.val.size(); ++k) {
        std::vector<double> v(kap.val[k].size());
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = kap.val[k][i] + p.gamma * phi.boundary.val[k][i];
        el.val.push_back(std::move(v));
    }
    rec.el_residual_sup = el.sup_dev(c);
}

TraceRecord make_record(const FlowState& s, const StepGeom& g) {
    TraceRecord r;
    r.t = s.t;
    r.L = polygon_perimeter(s.curve);
    r.A = polygon_area(s.curve);
    r.dissipation = g.dissipation;
    r.deficit = g.deficit;
    return r;
}

} // namespace

FlowState flow_init(Curve c, const FlowParams& p) {
    validate(c);
    if (c.comp.size() != 1)
        throw validation_error("flow: a single simple closed curve is required");
    ShapeMeasures m = measures(c);
    if (m.is_strip) throw validation_error("flow: strip topology is not flowed");
    if (self_intersects(c)) throw validation_error("flow: initial curve is not simple");
    if (p.c_stab <= 0 || p.c_stab > 0.5)
        throw validation_error("flow: c_stab must lie in (0, 0.5]");
    FlowState s;
    s.curve = std::move(c);
    s.area_target = polygon_area(s.curve);
    if (s.area_target <= 0) throw validation_error("flow: enclosed area must be positive");
    StepGeom g = step_geometry(s.curve);
    TraceRecord rec = make_record(s, g);
    if (p.track_energy) fill_energy(rec, s.curve, p);
    s.history.push_back(rec);
    return s;
}

void flow_step(FlowState& s, const FlowParams& p) {
    if (s.halted) throw validation_error("flow: cannot step a halted flow");
    Component& cc = s.curve.comp[0];
    const int N = cc.n();
    const double Lp = polygon_perimeter(s.curve);
    s.dt = p.c_stab * (Lp / N) * (Lp / N);

    StepGeom g = step_geometry(s.curve);
    auto nrm = normals(s.curve);
    Lift L = lift_component(cc, s.curve.ambient);
    for (int i = 0; i < N; ++i) {
        Vec2 x = L.p[i] - s.dt * (g.kappa.val[0][i] - g.kbar) * nrm[0][i];
        L.p[i] = x;
    }
    // write back (torus: reduce mod 1)
    for (int i = 0; i < N; ++i) {
        Vec2 x = L.p[i];
        if (s.curve.ambient == Ambient::torus) {
            x.x -= std::floor(x.x);
            x.y -= std::floor(x.y);
        }
        cc.v[i] = x;
    }
    cc = resample_component(cc, s.curve.ambient, N);

    // exact area restoration by homothety about the centroid
    Vec2 C = polygon_centroid(cc, s.curve.ambient);
    double A = polygon_area(s.curve);
    if (A <= 0) {
        s.halted = true;
        s.halt_reason = "area collapsed to zero";
        return;
    }
    double f = std::sqrt(s.area_target / A);
    Lift L2 = lift_component(cc, s.curve.ambient);
    for (int i = 0; i < N; ++i) {
        Vec2 x = C + f * (L2.p[i] - C);
        if (s.curve.ambient == Ambient::torus) {
            x.x -= std::floor(x.x);
            x.y -= std::floor(x.y);
        }
        cc.v[i] = x;
    }

    s.t += s.dt;
    ++s.steps;

    if (self_intersects(s.curve)) {
        s.halted = true;
        s.halt_reason = "self-intersection at t = " + fmt17(s.t);
    }

    StepGeom g2 = step_geometry(s.curve);
    TraceRecord rec = make_record(s, g2);
    if (p.track_energy && p.energy_stride > 0 && s.steps % p.energy_stride == 0)
        fill_energy(rec, s.curve, p);
    s.history.push_back(rec);
}

FlowState flow_run(Curve c, const FlowParams& p, const StopRule& stop,
                   const std::function<void(const FlowState&)>& on_step) {
    if (stop.deficit <= 0 && stop.max_time <= 0 && stop.max_steps <= 0)
        throw validation_error("flow: stop rule must set a deficit, time, or step bound");
    FlowState s = flow_init(std::move(c), p);
    if (on_step) on_step(s);
    auto done = [&]() {
        if (s.halted) return true;
        if (stop.deficit > 0 && s.history.back().deficit < stop.deficit) return true;
        if (stop.max_time > 0 && s.t >= stop.max_time) return true;
        if (stop.max_steps > 0 && s.steps >= stop.max_steps) return true;
        return false;
    };
    while (!done()) {
        flow_step(s, p);
        if (on_step) on_step(s);
    }
    if (p.track_energy && std::isnan(s.history.back().E_total) && !s.halted)
        fill_energy(s.history.back(), s.curve, p);
    return s;
}

EnergyDerivative energy_derivative_analytic(const Curve& shape, const Kernel& k, double gamma,
                                            ParallelMode mode) {
    BoundaryField kap = curvature(shape);
    auto w = arc_weights(shape);
    double Ltot = 0, ks = 0;
    for (std::size_t c = 0; c < w.size(); ++c)
        for (std::size_t i = 0; i < w[c].size(); ++i) {
            Ltot += w[c][i];
            ks += w[c][i] * kap.val[c][i];
        }
    const double kbar = ks / Ltot;

    PotentialResult phi = potential_boundary(shape, k, mode);

    EnergyDerivative d;
    double cross_term = 0;
    for (std::size_t c = 0; c < w.size(); ++c)
        for (std::size_t i = 0; i < w[c].size(); ++i) {
            double dk = kap.val[c][i] - kbar;
            d.perimeter_term -= w[c][i] * dk * dk;
            cross_term += w[c][i] * dk * (phi.boundary.val[c][i] - phi.mean);
        }
    d.nonlocal_term = -2.0 * gamma * cross_term;
    d.total = d.perimeter_term + d.nonlocal_term;
    return d;
}

StabilityGap stability_gap(const Curve& shape, const Kernel& k, double gamma,
                           ParallelMode mode) {
    if (shape.ambient != Ambient::plane || shape.comp.size() != 1)
        throw validation_error("stability_gap: single plane curve required");
    if (!is_convex(shape)) throw validation_error("stability_gap: convex shape required");
    ShapeMeasures m = measures(shape);
    StabilityGap gp;
    gp.deficit = m.L - 2.0 * std::sqrt(M_PI * m.A);
    if (gp.deficit < 1e-12) {
        gp.at_minimizer = true;
        return gp;
    }
    EnergyBreakdown eo = total_energy(shape, k, gamma, mode);
    Curve ball = shapes::disk(std::sqrt(m.A / M_PI), shape.comp[0].n());
    EnergyBreakdown eb = total_energy(ball, k, gamma, mode);
    gp.gap = (eo.total - eb.total) / gp.deficit;
    return gp;
}

} // namespace okflow
