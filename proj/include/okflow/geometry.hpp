#pragma once
// Discrete closed curves in the plane and on the unit torus [0,1)^2.
//
// A curve is a list of components; each component is a closed polyline with
// uniformly spaced vertices (uniform in chord length after resampling).
// Vertex i connects to vertex (i+1) mod N.  On the torus, coordinates live
// in [0,1) and edges are taken in the minimal-image sense, so a component
// may wind around the torus (a "strip" boundary line has winding (0,1) or
// (1,0) rather than being null-homotopic).

#include <cmath>
#include <vector>

#include "okflow/util.hpp"

namespace okflow {

struct Vec2 {
    double x = 0, y = 0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Vec2 a) { return a.x * a.x + a.y * a.y; }
inline double norm(Vec2 a) { return std::sqrt(norm2(a)); }

enum class Ambient { plane, torus };
enum class Orient { ccw, cw };

struct Component {
    std::vector<Vec2> v;
    Orient orient = Orient::ccw;
    int n() const { return static_cast<int>(v.size()); }
};

struct Curve {
    Ambient ambient = Ambient::plane;
    std::vector<Component> comp;
    int n_total() const {
        int n = 0;
        for (const auto& c : comp) n += c.n();
        return n;
    }
};

// A scalar field sampled at the boundary vertices, same layout as the curve.
struct BoundaryField {
    std::vector<std::vector<double>> val;

    double sup_abs() const;
    // Arc-length weighted mean over all components of `c`.
    double mean(const Curve& c) const;
    double sup_dev(const Curve& c) const;   // sup |f - mean|
    double l2_dev(const Curve& c) const;    // integral of (f - mean)^2 dS
};

// Lift of one component to a connected polyline: on the torus each
// successive vertex is placed by the minimal-image displacement; `net` is
// the total winding displacement (always integral, (0,0) for a loop).
struct Lift {
    std::vector<Vec2> p;
    Vec2 net{0, 0};
};
Lift lift_component(const Component& c, Ambient amb);

// Periodic access to a lifted polyline: p(i+N) = p(i) + net.
Vec2 lift_at(const Lift& L, int i);

// Sixth-order centered first derivative with respect to the uniform
// parameter t_i = 2*pi*i/N (spectral-grade on smooth data).
std::vector<Vec2> lift_derivative6(const Lift& L);

// Quadrature weights dS_i = |X'(t_i)| h for boundary integrals, same
// layout as the curve.
std::vector<std::vector<double>> arc_weights(const Curve& c);

// --- measures -------------------------------------------------------------

struct ShapeMeasures {
    double L = 0;          // total boundary length (spectral-grade)
    double A = 0;          // enclosed area (plane: signed sum; torus: mod 1)
    double R_in = std::nan("");   // inradius  (plane, simply connected only)
    double R_out = std::nan("");  // circumradius
    // Torus strip bounded by two wrapping boundary lines: slab widths
    // measured along the transversal direction.  L_in is the largest slab
    // contained in the strip, L_out the smallest slab containing it; both
    // equal the exact width w for straight boundaries.
    double L_in = std::nan("");
    double L_out = std::nan("");
    Vec2 centroid{std::nan(""), std::nan("")}; // plane: area centroid; strip: slab center
    std::vector<int> winding;              // turning number per component
    std::vector<int> winding_x, winding_y; // per-component torus wrap counts
    int n_components = 0;
    bool is_strip = false; // torus region bounded by two wrapping boundary lines
};

// Chord-sum perimeter and shoelace area of the polygon itself.  These are
// what the flow conserves exactly; `measures` below uses higher-order
// formulas that converge spectrally for smooth data.
double polygon_perimeter(const Curve& c);
double polygon_area(const Curve& c); // plane: signed sum; torus: normalized mod 1 to [0,1)

Vec2 polygon_centroid(const Component& c, Ambient amb); // area centroid of one loop

// Spectral-grade length and signed area alone (no radii/strip analysis);
// cheap enough for per-step use inside the flow.
double spectral_perimeter(const Curve& c);
double spectral_area(const Curve& c);

ShapeMeasures measures(const Curve& c);

// --- differential quantities ----------------------------------------------

// Signed curvature at each vertex from centered second differences on the
// uniform parameter, kappa = cross(X', X'') / |X'|^3.
BoundaryField curvature(const Curve& c);

// Outward unit normal at each vertex (outward for a ccw-oriented outer
// boundary): n = (t_y, -t_x) with t the centered-difference unit tangent.
std::vector<std::vector<Vec2>> normals(const Curve& c);

// Support function h(i) = <X_i - origin, n_i> for a convex plane curve.
BoundaryField support_function(const Curve& c, Vec2 origin = {0, 0});

// --- predicates -------------------------------------------------------------

bool is_convex(const Curve& c, double tol = 1e-9);
bool is_star_shaped(const Curve& c, Vec2 center);
// True if some pair of non-adjacent edges (possibly across components)
// intersects.  O(N^2) segment sweep with a bounding-box prefilter.
bool self_intersects(const Curve& c);

// --- resampling -------------------------------------------------------------

// Fit a periodic C^2 cubic spline through the vertices (chord-length
// parameter) and place N new vertices with exactly equal chord spacing.
// Idempotent on already-uniform data.  Works per component; torus strips
// are lifted, resampled and reduced mod 1.
Curve resample(const Curve& c, int N);

Component resample_component(const Component& c, Ambient amb, int N);

// --- validation -------------------------------------------------------------

// Throws validation_error on: fewer than 3 components vertices, open/NaN
// data, orientation flag inconsistent with the signed area (plane loops),
// torus coordinates outside [0,1).
void validate(const Curve& c);

} // namespace okflow
