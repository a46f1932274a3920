#pragma once

#include <cstdint>
#include <vector>

#include "wavetomo/grid.hpp"
#include "wavetomo/image.hpp"
#include "wavetomo/sources.hpp"

namespace wt {

// Point-probe reconstruction: three solves per evaluation point combine
// two counter-propagating pulses through the point; the second-difference
// stencil in the two amplitudes isolates the coefficient there.
struct PointwiseParams {
    double eps = 0.1;
    PulseParams pulse;
    double theta_deg = 45.0;
    double t0 = -1.0;   // negative means T/2
    int p = 3;
    double sigma = 0.0;
    std::uint64_t seed = 0;
    int n = 44;          // evaluation lattice is n x n ...
    double half = 0.2828;  // ... on [-half, half]^2
    int workers = 1;
    bool six_solve = false;  // add the mirrored stencil half (diagnostic)
};

// Value at one point; returns NaN if the nonlinear solve blows up.
// job_base offsets the noise seed stream (the lattice uses point index * 8).
double reconstruct_point(const Grid& g, const std::vector<double>& q,
                         const PointwiseParams& P, double x0, double y0,
                         std::uint64_t job_base = 0);

Image reconstruct_pointwise(const Grid& g, const std::vector<double>& q,
                            const PointwiseParams& P);

}  // namespace wt
