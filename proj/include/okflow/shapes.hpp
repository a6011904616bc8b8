#pragma once
// Shape generators.  Plane shapes are centered at the origin unless noted;
// torus shapes live in the unit cell [0,1)^2.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "okflow/geometry.hpp"

namespace okflow::shapes {

Curve disk(double R, int N, Vec2 center = {0, 0});
Curve ellipse(double a, double b, int N);
Curve annulus(double r, double R, int N); // N vertices per component
// r(theta) = r0 + sum a_k cos(k theta + phase_k)
struct PolarMode { int k; double amp; double phase; };
Curve polar(double r0, const std::vector<PolarMode>& modes, int N);
Curve perturbed_disk(double eps, int k, int N); // r = 1 + eps cos(k theta)
// Convex curve from a support function h(theta) = 1 + trig polynomial with
// h + h'' > 0 enforced by coefficient rescaling.
Curve random_convex(std::uint64_t seed, int K, int N,
                    bool origin_symmetric = false, double amp = 0.12);
Curve two_disks(double R1, Vec2 c1, double R2, Vec2 c2, int N);

// torus
Curve stripe(double w, int n, int N);                       // n bands, total area w
Curve perturbed_stripe(double w, double eps, int k, int N); // right boundary x = w + eps sin(2 pi k y)
Curve torus_disk(double area, Vec2 center, int N);

// plane homothety about the origin / rescale to prescribed area
Curve scale(const Curve& c, double lambda);
Curve scale_to_area(const Curve& c, double target_area);

// CLI shape specs: disk:R | ellipse:a,b | annulus:r,R | stripe:w[,n] |
// pstripe:w,eps[,k] | pdisk:eps,k | polar:r0[,k:amp[:phase]...] |
// random:seed[,K] | tdisk:area[,cx,cy] | file:path
Curve from_spec(const std::string& spec, int N);

} // namespace okflow::shapes
