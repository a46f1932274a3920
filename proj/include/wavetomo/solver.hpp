#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "wavetomo/grid.hpp"
#include "wavetomo/sources.hpp"

namespace wt {

struct CflViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised by the blow-up guard; step is the time index where the field was
// first seen non-finite or past the threshold.
struct NonFinite : std::runtime_error {
    int step;
    NonFinite(const std::string& m, int s) : std::runtime_error(m), step(s) {}
};

struct SolveOptions {
    int p = 3;                        // power of the u^p absorption term
    int blowup_check_every = 50;
    double blowup_threshold = 1e12;
    // optional manufactured source added to the right-hand side (tests)
    std::function<double(double, double, double)> forcing;
    // optional initial levels (full node layout); empty means zero field
    std::vector<double> init0, init1;
};

struct WaveField {
    Grid g;
    std::vector<double> v;   // v[k*g.nnode() + id]
    double* level(int k) { return v.data() + (size_t)k * g.nnode(); }
    const double* level(int k) const { return v.data() + (size_t)k * g.nnode(); }
};

// Leapfrog in time (second order), wide five-point stencil per axis in
// space (fourth order), absorption term explicit at the current level.
// Dirichlet data is prescribed on the two-layer frame after every step;
// the first level is left entirely zero and the frame starts acting at
// time index 1.  Throws CflViolation / NonFinite / BadGrid.
WaveField solve_forward(const Grid& g, const std::vector<double>& q,
                        const FrameTrace& f, const SolveOptions& opt = {});

// Outward normal derivative sampled one line inside each edge:
// left edge value at (i=1,j) is -(u(3,j)-u(1,j))/(2 dx1), and so on.
// Row order follows boundary_index_set.
BoundaryTrace extract_dn(const WaveField& u, const std::vector<BoundaryPoint>& bp);

// Fused march + extraction keeping only two levels in memory; agrees with
// solve_forward + extract_dn to the bit.
BoundaryTrace solve_dn(const Grid& g, const std::vector<double>& q,
                       const FrameTrace& f, const std::vector<BoundaryPoint>& bp,
                       const SolveOptions& opt = {});

// Additive Gaussian noise scaled to the trace: sigma0 = sigma * mean|v|,
// applied to every sample.  Returns sigma0.
double add_noise(BoundaryTrace& tr, double sigma, std::uint64_t seed);

}  // namespace wt
