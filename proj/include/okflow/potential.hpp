#pragma once
// Nonlocal potential phi(y) = integral over the region of G(x-y) dx, its
// boundary statistics, and the nonlocal / total energy.

#include <vector>

#include "okflow/geometry.hpp"
#include "okflow/kernel.hpp"

namespace okflow {

struct PotentialResult {
    BoundaryField boundary;   // phi at the curve vertices
    double mean = 0;          // arc-length weighted boundary mean
    double sup_dev = 0;       // sup |phi - mean| on the boundary
    std::vector<double> grid; // torus only: phi on the solver grid, row-major, zero mean
    int grid_n = 0;
};

// Plane kernels, arbitrary targets (on or off the boundary); the boundary
// integral reduction with graded panels near the target.
std::vector<double> potential_plane_at(const Curve& shape, const Kernel& k,
                                       const std::vector<Vec2>& targets,
                                       ParallelMode mode = ParallelMode::omp);

// phi at every curve vertex plus boundary statistics; dispatches on kernel.
PotentialResult potential_boundary(const Curve& shape, const Kernel& k,
                                   ParallelMode mode = ParallelMode::omp);

// Torus spectral solve: rasterize the indicator (4x4 supersampled coverage),
// solve -Lap(phi) = u - ubar with zero mean, bicubic-sample the boundary.
PotentialResult potential_torus(const Curve& shape, int grid);

// Raw torus solve shared by the boundary sampler and the energy integral.
// Cell (ix, iy) is centered at ((ix+0.5)/n, (iy+0.5)/n), stored row-major
// at index iy*n + ix.
struct TorusField {
    int n = 0;
    std::vector<double> phi;    // zero-mean potential at cell centers
    std::vector<double> source; // coverage - mean coverage at cell centers
    double area = 0;            // mean coverage (area fraction of the region)
};
TorusField torus_solve(const Curve& shape, int grid);

// Catmull-Rom (Keys, a = -1/2) periodic bicubic sample of a cell-centered
// torus grid at point p in [0,1)^2.
double bicubic_torus(const std::vector<double>& g, int n, Vec2 p);

// (mean, sup deviation) of a boundary field, arc-length weighted.
std::pair<double, double> boundary_stats(const BoundaryField& f, const Curve& shape);

// Plane: gamma * integral of phi over the region (centroid fan + degree-4
// triangle rule); torus: gamma * grid mean of phi*(u-ubar).
double nonlocal_energy(const Curve& shape, const Kernel& k, double gamma,
                       ParallelMode mode = ParallelMode::omp);

struct EnergyBreakdown {
    double perimeter = 0;
    double nonlocal = 0;
    double total = 0;
};
EnergyBreakdown total_energy(const Curve& shape, const Kernel& k, double gamma,
                             ParallelMode mode = ParallelMode::omp);

} // namespace okflow
