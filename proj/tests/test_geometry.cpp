#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <okflow/geometry.hpp>
#include <okflow/shapes.hpp>

#include "oracles.hpp"

using namespace okflow;

TEST_CASE("resample: circle invariance and idempotence") {
    Curve c = shapes::disk(1.0, 64);
    Curve r = resample(c, 256);
    REQUIRE(r.comp.size() == 1);
    CHECK(r.comp[0].n() == 256);
    for (const Vec2& v : r.comp[0].v) CHECK(std::abs(norm(v) - 1.0) < 1e-4);

    // idempotence: resampling uniform data at the same N is the identity
    Curve r2 = resample(r, 256);
    double move = 0;
    for (int i = 0; i < 256; ++i) move = std::max(move, norm(r2.comp[0].v[i] - r.comp[0].v[i]));
    CHECK(move < 1e-12);
}

TEST_CASE("resample: equal chord spacing on the ellipse") {
    Curve e = resample(shapes::ellipse(2.0, 1.0, 512), 512);
    const auto& v = e.comp[0].v;
    double lo = 1e300, hi = 0;
    for (int i = 0; i < 512; ++i) {
        double d = norm(v[(i + 1) % 512] - v[i]);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    CHECK((hi - lo) / hi < 1e-9);
}

TEST_CASE("resample: perimeter preserved on uniform data") {
    Curve c = shapes::ellipse(2.0, 1.0, 256);
    Curve u = resample(c, 256); // now uniform
    double L0 = polygon_perimeter(u);
    Curve u2 = resample(u, 256);
    CHECK(std::abs(polygon_perimeter(u2) - L0) <= 1e-12 * L0);
}

TEST_CASE("curvature: circles and the ellipse tip") {
    for (double R : {1.0, 2.0}) {
        BoundaryField k = curvature(shapes::disk(R, 256));
        for (double v : k.val[0]) CHECK(std::abs(v - 1.0 / R) < 1e-3 / R);
    }
    // kappa = a/b^2 at the end of the major axis
    Curve e = resample(shapes::ellipse(2.0, 1.0, 512), 512);
    BoundaryField k = curvature(e);
    // locate the vertex closest to (2, 0)
    int best = 0;
    double bd = 1e300;
    for (int i = 0; i < 512; ++i) {
        double d = norm(e.comp[0].v[i] - Vec2{2.0, 0.0});
        if (d < bd) { bd = d; best = i; }
    }
    CHECK(std::abs(k.val[0][best] - 2.0) < 1e-2);
}

TEST_CASE("curvature: exact stripe boundaries are flat") {
    BoundaryField k = curvature(shapes::stripe(0.5, 1, 256));
    for (const auto& comp : k.val)
        for (double v : comp) CHECK(std::abs(v) < 1e-12);
}

TEST_CASE("measures: unit disk") {
    ShapeMeasures m = measures(shapes::disk(1.0, 512));
    CHECK(std::abs(m.L - 2.0 * M_PI) < 1e-6);
    CHECK(std::abs(m.A - M_PI) < 1e-6);
    CHECK(std::abs(m.R_out - 1.0) < 1e-6);
    CHECK(std::abs(m.R_in - 1.0) < 1e-4);
    CHECK(m.winding == std::vector<int>{1});
    CHECK(m.n_components == 1);
    CHECK(std::abs(m.centroid.x) < 1e-12);
    CHECK(std::abs(m.centroid.y) < 1e-12);
}

TEST_CASE("measures: 2:1 ellipse perimeter against elliptic quadrature") {
    ShapeMeasures m = measures(shapes::ellipse(2.0, 1.0, 512));
    CHECK(std::abs(m.L - oracles::kEllipseL21) < 1e-8 * oracles::kEllipseL21);
    CHECK(std::abs(m.A - 2.0 * M_PI) < 1e-8);
    CHECK(std::abs(m.R_out - 2.0) < 1e-6);
    CHECK(std::abs(m.R_in - 1.0) < 1e-4);
}

TEST_CASE("measures: annulus topology") {
    ShapeMeasures m = measures(shapes::annulus(0.5, 1.5, 256));
    CHECK(m.n_components == 2);
    CHECK(std::abs(m.A - M_PI * (1.5 * 1.5 - 0.25)) < 1e-6);
    CHECK(std::abs(m.L - 2.0 * M_PI * 2.0) < 1e-6);
    REQUIRE(m.winding.size() == 2);
    CHECK(((m.winding[0] == 1 && m.winding[1] == -1) ||
           (m.winding[0] == -1 && m.winding[1] == 1)));
    // inradius/circumradius are defined for simply connected regions only
    CHECK(std::isnan(m.R_in));
    CHECK(std::isnan(m.R_out));
}

TEST_CASE("measures: exact stripe on the torus") {
    ShapeMeasures m = measures(shapes::stripe(0.5, 1, 256));
    CHECK(m.is_strip);
    CHECK(std::abs(m.L - 2.0) < 1e-12);
    CHECK(std::abs(m.A - 0.5) < 1e-12);
    CHECK(std::abs(m.L_in - 0.5) < 1e-12);
    CHECK(std::abs(m.L_out - 0.5) < 1e-12);
}

TEST_CASE("measures: perturbed stripe slab widths bracket the area") {
    ShapeMeasures m = measures(shapes::perturbed_stripe(0.5, 0.05, 1, 256));
    CHECK(m.is_strip);
    CHECK(m.L_in < 0.5);
    CHECK(m.L_out > 0.5);
    CHECK(std::abs(m.A - 0.5) < 1e-4);
    CHECK(std::abs(m.L_out - m.L_in - 0.1) < 1e-3); // only one boundary is perturbed
}

TEST_CASE("measures: torus disk") {
    ShapeMeasures m = measures(shapes::torus_disk(0.25, {0.5, 0.5}, 256));
    CHECK(!m.is_strip);
    CHECK(std::abs(m.A - 0.25) < 1e-6);
    double R = std::sqrt(0.25 / M_PI);
    CHECK(std::abs(m.L - 2.0 * M_PI * R) < 1e-6);
}

TEST_CASE("polygon measures are the chord/shoelace values") {
    Curve c = shapes::disk(1.0, 64);
    double Lp = polygon_perimeter(c);
    CHECK(std::abs(Lp - 64.0 * 2.0 * std::sin(M_PI / 64.0)) < 1e-12);
    double Ap = polygon_area(c);
    CHECK(std::abs(Ap - 0.5 * 64.0 * std::sin(2.0 * M_PI / 64.0)) < 1e-12);
    // spectral values converge to the smooth ones much faster
    CHECK(std::abs(spectral_perimeter(c) - 2.0 * M_PI) < 1e-6);
    CHECK(std::abs(spectral_area(c) - M_PI) < 1e-6);
}

TEST_CASE("isoperimetric slack is nonnegative on the corpus") {
    for (const Curve& c : oracles::corpus(10, 256)) {
        ShapeMeasures m = measures(c);
        CHECK(m.L * m.L - 4.0 * M_PI * m.A > -1e-10 * m.L * m.L);
    }
}

TEST_CASE("support function: disk and the area identity") {
    Curve d = shapes::disk(1.5, 256);
    BoundaryField p = support_function(d);
    for (double v : p.val[0]) CHECK(std::abs(v - 1.5) < 1e-6);

    // divergence theorem: integral of p dS = 2A for any convex curve
    for (const Curve& c : oracles::corpus(5, 256)) {
        BoundaryField q = support_function(c, measures(c).centroid);
        auto w = arc_weights(c);
        double ip = 0;
        for (std::size_t ci = 0; ci < w.size(); ++ci)
            for (std::size_t i = 0; i < w[ci].size(); ++i) ip += q.val[ci][i] * w[ci][i];
        double A = measures(c).A;
        CHECK(std::abs(ip - 2.0 * A) < 3e-5 * A);
    }
}

TEST_CASE("predicates: convexity") {
    CHECK(is_convex(shapes::disk(1.0, 128)));
    CHECK(is_convex(shapes::ellipse(2.0, 1.0, 128)));
    CHECK(!is_convex(shapes::perturbed_disk(0.3, 5, 256)));
    // convexity is only defined for a single plane component
    CHECK_THROWS_AS((void)is_convex(shapes::annulus(0.5, 1.0, 128)), validation_error);
    for (const Curve& c : oracles::corpus(10, 256)) CHECK(is_convex(c));
}

TEST_CASE("predicates: star-shapedness") {
    CHECK(is_star_shaped(shapes::disk(1.0, 128), {0, 0}));
    CHECK(is_star_shaped(shapes::disk(1.0, 128), {0.5, 0.2}));
    CHECK(is_star_shaped(shapes::perturbed_disk(0.3, 5, 256), {0, 0}));
    // a center outside the region violates the precondition
    CHECK_THROWS_AS((void)is_star_shaped(shapes::disk(1.0, 128), {2.0, 0.0}), validation_error);
    // straight and gently perturbed stripes are graphs over the wrap axis
    CHECK(is_star_shaped(shapes::stripe(0.5, 1, 128), {0.25, 0.5}));
    CHECK(is_star_shaped(shapes::perturbed_stripe(0.5, 0.1, 1, 256), measures(shapes::perturbed_stripe(0.5, 0.1, 1, 256)).centroid));
    // a folded boundary line is not a graph over the wrap axis
    Curve fold = shapes::stripe(0.5, 1, 256);
    double dir = lift_component(fold.comp[1], Ambient::torus).net.y > 0 ? 1.0 : -1.0;
    for (int i = 0; i < 256; ++i) {
        double t = static_cast<double>(i) / 256.0;
        double y = dir * (t + 0.3 * std::sin(2.0 * M_PI * t)); // dy/dt < 0 near t = 1/2
        fold.comp[1].v[i] = {0.1 + 0.05 * std::sin(2.0 * M_PI * t), y - std::floor(y)};
    }
    CHECK(!is_star_shaped(fold, {0.3, 0.5}));
}

TEST_CASE("predicates: self-intersection") {
    CHECK(!self_intersects(shapes::disk(1.0, 128)));
    CHECK(!self_intersects(shapes::perturbed_disk(0.3, 5, 256)));
    // figure-eight style polar curve r = |cos(theta)| traced with sign flips
    Curve eight;
    Component comp;
    for (int i = 0; i < 128; ++i) {
        double t = 2.0 * M_PI * i / 128;
        comp.v.push_back({std::cos(t), 0.6 * std::sin(2.0 * t)});
    }
    eight.comp.push_back(comp);
    CHECK(self_intersects(eight));
    // two overlapping disks intersect across components
    CHECK(self_intersects(shapes::two_disks(1.0, {0, 0}, 1.0, {1.0, 0}, 96)));
    CHECK(!self_intersects(shapes::two_disks(1.0, {0, 0}, 1.0, {3.0, 0}, 96)));
}

TEST_CASE("winding numbers") {
    ShapeMeasures m = measures(shapes::disk(1.0, 128));
    CHECK(m.winding == std::vector<int>{1});
    Curve cw = shapes::disk(1.0, 128);
    std::reverse(cw.comp[0].v.begin(), cw.comp[0].v.end());
    cw.comp[0].orient = Orient::cw;
    CHECK(measures(cw).winding == std::vector<int>{-1});
}

TEST_CASE("torus winding counts") {
    ShapeMeasures m = measures(shapes::stripe(0.5, 1, 128));
    REQUIRE(m.winding_y.size() == 2);
    CHECK(std::abs(m.winding_y[0]) == 1);
    CHECK(std::abs(m.winding_y[1]) == 1);
    CHECK(m.winding_x == std::vector<int>(2, 0));
}

TEST_CASE("lift: minimal-image continuity across the seam") {
    Curve td = shapes::torus_disk(0.2, {0.02, 0.5}, 128); // straddles x = 0
    Lift l = lift_component(td.comp[0], Ambient::torus);
    for (int i = 0; i + 1 < (int)l.p.size(); ++i)
        CHECK(norm(l.p[i + 1] - l.p[i]) < 0.1);
    CHECK(norm(l.net) < 1e-12); // null-homotopic loop

    Lift s = lift_component(shapes::stripe(0.5, 1, 128).comp[0], Ambient::torus);
    CHECK(std::abs(std::abs(s.net.y) - 1.0) < 1e-12);
}

TEST_CASE("validation rejects malformed curves") {
    Curve tiny;
    tiny.comp.push_back({{{0, 0}, {1, 0}}, Orient::ccw});
    CHECK_THROWS_AS(validate(tiny), validation_error);

    Curve offcell = shapes::stripe(0.5, 1, 64);
    offcell.ambient = Ambient::torus;
    offcell.comp[0].v[3].x = 1.25;
    CHECK_THROWS_AS(validate(offcell), validation_error);

    Curve bad = shapes::disk(1.0, 64);
    bad.comp[0].orient = Orient::cw; // flag contradicts the signed area
    CHECK_THROWS_AS(validate(bad), validation_error);

    Curve nan = shapes::disk(1.0, 64);
    nan.comp[0].v[5].x = std::nan("");
    CHECK_THROWS_AS(validate(nan), validation_error);
}
