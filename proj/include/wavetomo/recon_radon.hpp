#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wavetomo/grid.hpp"
#include "wavetomo/solver.hpp"
#include "wavetomo/sources.hpp"
#include "wavetomo/specdiff.hpp"
#include "wavetomo/tomo.hpp"

namespace wt {

// Parameters of the sinogram measurement pipeline.  For every probe angle
// the boundary data is ramped through n_eps amplitudes eps*j/n_eps, each
// solved once; every offset then pairs the recorded responses with its own
// test trace and extracts the third derivative of the amplitude curve.
struct RadonParams {
    double eps = 1.5;
    int n_eps = 12;
    PulseParams pulse;
    double alpha = 0.01;   // Gaussian filter of the extractor
    double taper_w = 0.4;  // flat fraction of the extraction window
    int p = 3;
    double sigma = 0.0;    // relative noise on each recorded trace
    std::uint64_t seed = 0;
    std::vector<double> angles_deg;
    std::vector<double> offsets;
    std::string cache_dir;  // empty disables trace caching
    int workers = 1;
};

// Amplitude curves per offset: v[oi*n_eps + j-1] = g~(eps*j/n_eps).
struct CurveSet {
    int n_off = 0, n_eps = 0;
    std::vector<double> v;
    double at(int oi, int j) const { return v[(size_t)oi * n_eps + j]; }
};

struct ColumnResult {
    std::vector<double> spec;  // spectral-extractor entries per offset
    std::vector<double> fd;    // finite-difference entries per offset
    CurveSet curves;
};

struct RadonOutput {
    Sinogram sino;
    Sinogram sino_fd;
};

// sum_{b,k} f0(b,k) * dn(b,k) * weight_b * dt over the true boundary
// layer; the lateral-boundary pairing integral.
double boundary_integral(const BoundaryTrace& f0, const BoundaryTrace& dn,
                         const std::vector<BoundaryPoint>& bp, double dt);

// The recorded (possibly noisy) response for one angle and one amplitude
// step, cached on disk when cache_dir is set.  job id for the noise seed
// is angle_idx*n_eps + (j-1).
BoundaryTrace measured_trace(const Grid& g, const std::vector<double>& q,
                             const RadonParams& P, int angle_idx, int j);

ColumnResult reconstruct_column(const Grid& g, const std::vector<double>& q,
                                const RadonParams& P, int angle_idx);

// Full sinogram over all configured angles; angle columns are computed
// independently (parallel over P.workers) and written into disjoint slots,
// so the result does not depend on the worker count.
RadonOutput reconstruct_sinogram(const Grid& g, const std::vector<double>& q,
                                 const RadonParams& P);

}  // namespace wt
