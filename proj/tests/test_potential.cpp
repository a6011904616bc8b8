#include <doctest.h>

#include <cmath>
#include <okflow/curve_json.hpp>
#include <okflow/potential.hpp>
#include <okflow/shapes.hpp>

#include "oracles.hpp"

using namespace okflow;

TEST_CASE("plane log potential: disk closed forms") {
    Curve d1 = shapes::disk(1.0, 512);
    auto v = potential_plane_at(d1, Kernel::Log(), {{1.0, 0.0}, {0.0, 0.0}, {3.0, 0.0}});
    CHECK(std::abs(v[0] - 0.0) < 1e-5);                                // boundary of R=1
    // the polygon inscribed in the circle carries a relative area deficit of
    // ~pi^2/(6 N^2) (~2.5e-5 at N=512), which bounds the closed-form agreement
    CHECK(std::abs(v[1] - oracles::disk_phi_log(1.0, 0.0)) < 1e-4);    // center: 1/4
    CHECK(std::abs(v[2] - oracles::disk_phi_log(1.0, 3.0)) < 1e-4);    // exterior

    Curve d2 = shapes::disk(2.0, 512);
    auto w = potential_plane_at(d2, Kernel::Log(), {{2.0, 0.0}, {0.0, 2.0}});
    CHECK(std::abs(w[0] + 2.0 * std::log(2.0)) < 1e-4);
    CHECK(std::abs(w[1] + 2.0 * std::log(2.0)) < 1e-4);
}

TEST_CASE("plane log potential: annulus inner boundary value") {
    double r = oracles::identity_radius(), R = 2.0 * r;
    Curve a = shapes::annulus(r, R, 512);
    auto v = potential_plane_at(a, Kernel::Log(), {{r, 0.0}});
    CHECK(std::abs(v[0] - oracles::kAnnulusPhiInner) < 1e-4);
    // and the frozen constant is itself the radial formula
    double formula = (R * R - r * r) / 4.0 - (R * R / 2.0) * std::log(R) + (r * r / 2.0) * std::log(r);
    CHECK(std::abs(formula - oracles::kAnnulusPhiInner) < 1e-10);
}

TEST_CASE("plane potential matches the brute-force fan oracle") {
    // random convex corpus away from the log zero-crossing scale
    for (const Curve& c : oracles::corpus(8, 256, 2.0 * M_PI)) {
        for (const Kernel& k : {Kernel::Log(), Kernel::Riesz(0.5)}) {
            std::vector<Vec2> targets;
            for (int j = 0; j < 4; ++j) targets.push_back(c.comp[0].v[j * 64]);
            Vec2 ctr = measures(c).centroid;
            targets.push_back(ctr);
            targets.push_back(ctr + Vec2{0.2, 0.1});
            auto main = potential_plane_at(c, k, targets);
            for (std::size_t t = 0; t < targets.size(); ++t) {
                double ref = oracles::potential_bruteforce(c, k, targets[t]);
                CHECK(std::abs(main[t] - ref) < 1e-4 * std::max(std::abs(ref), 0.05));
            }
        }
    }
}

TEST_CASE("plane potential: homothety scaling laws") {
    Curve base = shapes::random_convex(7, 6, 512);
    // The quadrature integrates the straight-segment geometry, so the additive
    // log correction must use the polygon area, not the spectral area.
    double A = polygon_area(base);
    std::vector<Vec2> y0 = {base.comp[0].v[0], base.comp[0].v[171]};
    for (double lam : {0.5, 2.0}) {
        Curve sc = shapes::scale(base, lam);
        std::vector<Vec2> y1 = {lam * y0[0], lam * y0[1]};

        // log: phi_{lam Omega}(lam y) = lam^2 phi_Omega(y) - (lam^2 log lam / 2 pi) A
        auto p0 = potential_plane_at(base, Kernel::Log(), y0);
        auto p1 = potential_plane_at(sc, Kernel::Log(), y1);
        for (int i = 0; i < 2; ++i) {
            double want = lam * lam * p0[i] - (lam * lam * std::log(lam) / (2.0 * M_PI)) * A;
            CHECK(std::abs(p1[i] - want) < 1e-6 * std::max(1.0, std::abs(want)));
        }

        // riesz: phi scales by lam^(2-alpha)
        for (double alpha : {0.25, 0.75}) {
            auto q0 = potential_plane_at(base, Kernel::Riesz(alpha), y0);
            auto q1 = potential_plane_at(sc, Kernel::Riesz(alpha), y1);
            for (int i = 0; i < 2; ++i)
                CHECK(std::abs(q1[i] - std::pow(lam, 2.0 - alpha) * q0[i]) <
                      1e-6 * std::abs(q0[i]));
        }
    }
}

TEST_CASE("serial and parallel potentials agree bitwise") {
    Curve c = shapes::random_convex(3, 6, 256);
    for (const Kernel& k : {Kernel::Log(), Kernel::Riesz(0.5)}) {
        PotentialResult a = potential_boundary(c, k, ParallelMode::serial);
        PotentialResult b = potential_boundary(c, k, ParallelMode::omp);
        REQUIRE(a.boundary.val.size() == b.boundary.val.size());
        for (std::size_t ci = 0; ci < a.boundary.val.size(); ++ci)
            for (std::size_t i = 0; i < a.boundary.val[ci].size(); ++i)
                CHECK(a.boundary.val[ci][i] == b.boundary.val[ci][i]);
    }
}

TEST_CASE("riesz kernel parameter validation") {
    CHECK_THROWS_AS(Kernel::Riesz(1.5).check(), validation_error);
    CHECK_THROWS_AS(Kernel::Riesz(0.0).check(), validation_error);
    CHECK_THROWS_AS(Kernel::parse("riesz:-0.2").check(), validation_error);
    CHECK_NOTHROW(Kernel::parse("riesz:0.5").check());
    CHECK_THROWS_AS(Kernel::Torus(200).check(), validation_error); // not a power of two
}

TEST_CASE("torus stripe: constant boundary potential and the 1/64 gap") {
    Curve s = shapes::stripe(0.5, 1, 512);
    PotentialResult pr = potential_torus(s, 512);
    CHECK(pr.sup_dev < 2e-4);

    TorusField f = torus_solve(s, 512);
    double mid = bicubic_torus(f.phi, f.n, {0.25, 0.5});
    double gap = mid - pr.mean;
    CHECK(std::abs(gap - oracles::stripe_gap(0.5)) < 2e-4);
    CHECK(std::abs(oracles::stripe_gap(0.5) - 1.0 / 64.0) < 1e-18);

    // solver invariants: zero-mean grid, coverage consistent with the area
    double mean = 0;
    for (double v : f.phi) mean += v;
    mean /= f.phi.size();
    CHECK(std::abs(mean) < 1e-12);
    CHECK(std::abs(f.area - 0.5) < 1e-9);
}

TEST_CASE("torus stripe: widths 0.3 and 0.7 against the 1-D solution") {
    for (double w : {0.3, 0.7}) {
        Curve s = shapes::stripe(w, 1, 512);
        TorusField f = torus_solve(s, 512);
        PotentialResult pr = potential_torus(s, 512);
        CHECK(pr.sup_dev < 1e-3);
        double mid = bicubic_torus(f.phi, f.n, {w / 2.0, 0.5});
        CHECK(std::abs(mid - pr.mean - oracles::stripe_gap(w)) < 1e-3);
    }
}

TEST_CASE("torus disk: boundary potential is radially symmetric") {
    Curve td = shapes::torus_disk(0.25, {0.5, 0.5}, 256);
    PotentialResult pr = potential_torus(td, 512);
    CHECK(pr.sup_dev < 3e-4);
}

TEST_CASE("torus rasterization drift check trips on overlapping loops") {
    Curve bad = shapes::torus_disk(0.1, {0.3, 0.5}, 96);
    Curve extra = shapes::torus_disk(0.1, {0.35, 0.5}, 96);
    bad.comp.push_back(extra.comp[0]);
    CHECK_THROWS_AS(torus_solve(bad, 256), numerical_error);
}

TEST_CASE("boundary statistics") {
    Curve d = shapes::disk(1.0, 256);
    BoundaryField constf;
    constf.val.assign(1, std::vector<double>(256, 3.25));
    auto [m, s] = boundary_stats(constf, d);
    CHECK(std::abs(m - 3.25) < 1e-14);
    CHECK(s < 1e-14);

    BoundaryField alt;
    alt.val.assign(1, std::vector<double>(256));
    for (int i = 0; i < 256; ++i) alt.val[0][i] = (i % 2 == 0) ? 0.0 : 1.0;
    auto [m2, s2] = boundary_stats(alt, d);
    CHECK(std::abs(m2 - 0.5) < 1e-12);
    CHECK(std::abs(s2 - 0.5) < 1e-12);
}

TEST_CASE("nonlocal energy: disk, stripe, scaling") {
    // unit disk, log kernel: E_nl = pi/8
    double e = nonlocal_energy(shapes::disk(1.0, 512), Kernel::Log(), 1.0);
    CHECK(std::abs(e - M_PI / 8.0) < 1e-3 * (M_PI / 8.0));

    // stripe w = 1/2: closed-form 1/192
    double es = nonlocal_energy(shapes::stripe(0.5, 1, 512), Kernel::Torus(512), 1.0);
    CHECK(std::abs(es - oracles::stripe_nonlocal(0.5)) < 1e-4);
    CHECK(std::abs(oracles::stripe_nonlocal(0.5) - 1.0 / 192.0) < 1e-18);

    // riesz energy scales by lam^(4-alpha) under homothety
    Curve base = shapes::random_convex(11, 6, 256);
    Curve sc = shapes::scale(base, 2.0);
    for (double alpha : {0.5}) {
        double e0 = nonlocal_energy(base, Kernel::Riesz(alpha), 1.0);
        double e1 = nonlocal_energy(sc, Kernel::Riesz(alpha), 1.0);
        CHECK(std::abs(e1 - std::pow(2.0, 4.0 - alpha) * e0) < 1e-5 * std::abs(e1));
    }
}

TEST_CASE("total energy: breakdown and the gamma = 0 stripe") {
    EnergyBreakdown b = total_energy(shapes::disk(1.0, 512), Kernel::Log(), 2.0);
    CHECK(std::abs(b.perimeter - 2.0 * M_PI) < 1e-6);
    CHECK(std::abs(b.nonlocal - 2.0 * M_PI / 8.0) < 2e-3);
    CHECK(b.total == b.perimeter + b.nonlocal);

    EnergyBreakdown s = total_energy(shapes::stripe(0.5, 1, 256), Kernel::Torus(256), 0.0);
    CHECK(std::abs(s.perimeter - 2.0) < 1e-12);
    CHECK(s.nonlocal == 0.0);
    CHECK(std::abs(s.total - 2.0) < 1e-12);
}

TEST_CASE("boundary potential magnitude is controlled on the corpus") {
    // |phi|_sup / (m (1 + |log L|)) stays bounded over the small-mass corpus
    double worst = 0;
    for (const Curve& c : oracles::corpus(8, 192, 0.2)) {
        ShapeMeasures m = measures(c);
        PotentialResult pr = potential_boundary(c, Kernel::Log());
        double bound = m.A * (1.0 + std::abs(std::log(m.L)));
        worst = std::max(worst, pr.boundary.sup_abs() / bound);
    }
    CHECK(worst < 10.0);
    CHECK(worst > 0.0);
}
