#pragma once

#include <functional>
#include <vector>

#include "wavetomo/grid.hpp"

namespace wt {

// Pulse profile H(l) = cutoff(l/h) * sqrt(tau) * exp(-tau*l^2/2).
// The cutoff is exp(1 - 1/(1-(l/h)^2)) inside |l| < h and 0 outside, so H
// is compactly supported and smooth.  h = 0 means the default 5/sqrt(tau),
// wide enough that the cutoff sits in the Gaussian tail.
struct PulseParams {
    double tau = 700.0;
    double h = 0.0;
    double width() const;
};

double mollifier(double l, double h);
double pulse(double l, const PulseParams& p);

// Values prescribed on the two-layer frame, one row per time level:
// v[k*ids.size() + n] belongs to node ids[n] at level k.
struct FrameTrace {
    std::vector<int> ids;
    int nt = 0;
    std::vector<double> v;
};

// Values on the boundary quadrature points, v[k*nb + b].
struct BoundaryTrace {
    int nb = 0;
    int nt = 0;
    std::vector<double> v;
};

FrameTrace frame_trace_from(const Grid& g,
                            const std::function<double(double, double, double)>& f);
BoundaryTrace boundary_trace_from(const Grid& g, const std::vector<BoundaryPoint>& bp,
                                  const std::function<double(double, double, double)>& f);

// Probe wave for the sinogram pipeline: cbrt of a pulse riding the plane
// x.theta - t + T/2 = 0, so the cube of the propagated wave is the pulse.
FrameTrace radon_probe_trace(const Grid& g, double theta_deg, const PulseParams& p);

// Matching test wave, fired along -theta and delayed so the product with
// the probe cube concentrates where x.theta = eta at time T/2 + eta.
BoundaryTrace radon_test_trace(const Grid& g, const std::vector<BoundaryPoint>& bp,
                               double theta_deg, double eta, const PulseParams& p);

// Point probe family: two counter-propagating pulses through (x0,y0) at
// time t0 plus a transversal test pulse.
FrameTrace pointwise_probe_trace(const Grid& g, double x0, double y0, double t0,
                                 double theta_deg, const PulseParams& p);
FrameTrace pointwise_second_trace(const Grid& g, double x0, double y0, double t0,
                                  double theta_deg, const PulseParams& p);
BoundaryTrace pointwise_test_trace(const Grid& g, const std::vector<BoundaryPoint>& bp,
                                   double x0, double y0, double t0, double theta_deg,
                                   const PulseParams& p);

}  // namespace wt
