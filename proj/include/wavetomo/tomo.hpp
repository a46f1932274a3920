#pragma once

#include <stdexcept>
#include <vector>

#include "wavetomo/grid.hpp"
#include "wavetomo/image.hpp"

namespace wt {

// Line-integral table: rows are offsets, columns angles, v[oi*na + ai].
struct Sinogram {
    std::vector<double> angles_deg;
    std::vector<double> offsets;
    std::vector<double> v;

    int na() const { return (int)angles_deg.size(); }
    int no() const { return (int)offsets.size(); }
    double& at(int oi, int ai) { return v[(size_t)oi * na() + ai]; }
    double at(int oi, int ai) const { return v[(size_t)oi * na() + ai]; }
};

struct DegenerateSinogram : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integrals of a sampled node field over the lines x.theta = eta, by
// bilinear interpolation at arc step dx1/2 and the rectangle rule.
// Samples outside the grid count as zero.
Sinogram forward_radon(const std::vector<double>& field, const Grid& g,
                       const std::vector<double>& angles_deg,
                       const std::vector<double>& offsets);

// Per-angle mass sum_eta row * d_eta; equals the integral of the field
// for any angle when the support stays inside the offset range.
std::vector<double> sinogram_mass(const Sinogram& s);

// Filtered backprojection with the ramp |xi| applied via zero-padded FFT
// per projection and linear interpolation along each angle.  Output is an
// n x n raster on [-half, half]^2.  Needs >= 2 angles and uniform offsets.
Image fbp(const Sinogram& s, int n, double half);

}  // namespace wt
