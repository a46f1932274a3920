#include "wavetomo/sources.hpp"

#include <cmath>

namespace wt {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double PulseParams::width() const {
    return h > 0 ? h : 5.0 / std::sqrt(tau);
}

double mollifier(double l, double h) {
    const double r = l / h;
    const double r2 = r * r;
    if (r2 >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - r2));
}

double pulse(double l, const PulseParams& p) {
    const double h = p.width();
    if (std::fabs(l) >= h) return 0.0;
    return mollifier(l, h) * std::sqrt(p.tau) * std::exp(-0.5 * p.tau * l * l);
}

FrameTrace frame_trace_from(const Grid& g,
                            const std::function<double(double, double, double)>& f) {
    FrameTrace tr;
    tr.ids = frame_index_set(g);
    tr.nt = g.nt;
    const int nf = (int)tr.ids.size();
    tr.v.assign((size_t)nf * g.nt, 0.0);
    const int l2 = g.ldim2();
    for (int k = 0; k < g.nt; ++k) {
        const double t = g.t(k);
        for (int n = 0; n < nf; ++n) {
            const int i = tr.ids[n] / l2, j = tr.ids[n] % l2;
            tr.v[(size_t)k * nf + n] = f(g.x1(i), g.x2(j), t);
        }
    }
    return tr;
}

BoundaryTrace boundary_trace_from(const Grid& g, const std::vector<BoundaryPoint>& bp,
                                  const std::function<double(double, double, double)>& f) {
    BoundaryTrace tr;
    tr.nb = (int)bp.size();
    tr.nt = g.nt;
    tr.v.assign((size_t)tr.nb * g.nt, 0.0);
    for (int k = 0; k < g.nt; ++k) {
        const double t = g.t(k);
        for (int b = 0; b < tr.nb; ++b)
            tr.v[(size_t)k * tr.nb + b] = f(g.x1(bp[b].i), g.x2(bp[b].j), t);
    }
    return tr;
}

FrameTrace radon_probe_trace(const Grid& g, double theta_deg, const PulseParams& p) {
    const double th = theta_deg * kPi / 180.0;
    const double ct = std::cos(th), st = std::sin(th), half = 0.5 * g.T;
    return frame_trace_from(g, [&](double x, double y, double t) {
        return std::cbrt(pulse(x * ct + y * st - t + half, p));
    });
}

BoundaryTrace radon_test_trace(const Grid& g, const std::vector<BoundaryPoint>& bp,
                               double theta_deg, double eta, const PulseParams& p) {
    const double th = theta_deg * kPi / 180.0;
    const double ct = std::cos(th), st = std::sin(th), half = 0.5 * g.T;
    return boundary_trace_from(g, bp, [&](double x, double y, double t) {
        return pulse(-(x * ct + y * st) - t + half + 2.0 * eta, p);
    });
}

FrameTrace pointwise_probe_trace(const Grid& g, double x0, double y0, double t0,
                                 double theta_deg, const PulseParams& p) {
    const double th = theta_deg * kPi / 180.0;
    const double ct = std::cos(th), st = std::sin(th);
    return frame_trace_from(g, [&](double x, double y, double t) {
        return pulse((t - t0) - (ct * (x - x0) + st * (y - y0)), p);
    });
}

FrameTrace pointwise_second_trace(const Grid& g, double x0, double y0, double t0,
                                  double theta_deg, const PulseParams& p) {
    const double th = theta_deg * kPi / 180.0;
    const double ct = std::cos(th), st = std::sin(th);
    return frame_trace_from(g, [&](double x, double y, double t) {
        return std::sqrt(pulse((t - t0) + (ct * (x - x0) + st * (y - y0)), p));
    });
}

BoundaryTrace pointwise_test_trace(const Grid& g, const std::vector<BoundaryPoint>& bp,
                                   double x0, double y0, double t0, double theta_deg,
                                   const PulseParams& p) {
    const double th = theta_deg * kPi / 180.0;
    const double ct = std::cos(th), st = std::sin(th);
    return boundary_trace_from(g, bp, [&](double x, double y, double t) {
        return pulse((t - t0) - (-st * (x - x0) + ct * (y - y0)), p);
    });
}

}  // namespace wt
