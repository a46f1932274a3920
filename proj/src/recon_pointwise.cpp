#include "wavetomo/recon_pointwise.hpp"

#include <omp.h>

#include <cmath>
#include <limits>

#include "wavetomo/recon_radon.hpp"
#include "wavetomo/rng.hpp"
#include "wavetomo/solver.hpp"

namespace wt {

namespace {
constexpr double kPi = 3.14159265358979323846;

struct PointSetup {
    FrameTrace f1, f2;
    BoundaryTrace f0;
    std::vector<BoundaryPoint> bp;
};

double solve_g(const Grid& g, const std::vector<double>& q, const PointwiseParams& P,
               const PointSetup& S, double e1, double e2, std::uint64_t job) {
    FrameTrace f = S.f1;
    for (size_t i = 0; i < f.v.size(); ++i) f.v[i] = e1 * f.v[i] + e2 * S.f2.v[i];
    SolveOptions opt;
    opt.p = P.p;
    BoundaryTrace dn = solve_dn(g, q, f, S.bp, opt);
    if (P.sigma > 0) add_noise(dn, P.sigma, mix_seed(P.seed, job));
    return boundary_integral(S.f0, dn, S.bp, g.dt());
}

}  // namespace

double reconstruct_point(const Grid& g, const std::vector<double>& q,
                         const PointwiseParams& P, double x0, double y0,
                         std::uint64_t job_base) {
    const double t0 = P.t0 < 0 ? 0.5 * g.T : P.t0;
    PointSetup S;
    S.bp = boundary_index_set(g);
    S.f1 = pointwise_probe_trace(g, x0, y0, t0, P.theta_deg, P.pulse);
    S.f2 = pointwise_second_trace(g, x0, y0, t0, P.theta_deg, P.pulse);
    S.f0 = pointwise_test_trace(g, S.bp, x0, y0, t0, P.theta_deg, P.pulse);
    const double e = P.eps;
    try {
        const double gpp = solve_g(g, q, P, S, e, e, job_base + 0);
        const double gpm = solve_g(g, q, P, S, e, -e, job_base + 1);
        const double gp0 = solve_g(g, q, P, S, e, 0.0, job_base + 2);
        double D;
        if (!P.six_solve) {
            D = (gpp + gpm - 2.0 * gp0) / (e * e * e);
        } else {
            const double gmm = solve_g(g, q, P, S, -e, -e, job_base + 3);
            const double gmp = solve_g(g, q, P, S, -e, e, job_base + 4);
            const double gm0 = solve_g(g, q, P, S, -e, 0.0, job_base + 5);
            D = (gpp - gmm + gpm - gmp - 2.0 * gp0 + 2.0 * gm0) / (2.0 * e * e * e);
        }
        return D / (6.0 * std::pow(kPi, 1.5));
    } catch (const NonFinite&) {
        return std::numeric_limits<double>::quiet_NaN();
    }
}

Image reconstruct_pointwise(const Grid& g, const std::vector<double>& q,
                            const PointwiseParams& P) {
    Image img;
    img.nx = img.ny = P.n;
    img.x0 = img.y0 = -P.half;
    img.x1 = img.y1 = P.half;
    img.v.assign((size_t)P.n * P.n, 0.0);
    const int npts = P.n * P.n;
    const int nw = P.workers > 0 ? P.workers : 1;
#pragma omp parallel for schedule(dynamic) num_threads(nw)
    for (int idx = 0; idx < npts; ++idx) {
        const int ix = idx / P.n, iy = idx % P.n;
        img.v[idx] = reconstruct_point(g, q, P, img.x(ix), img.y(iy),
                                       (std::uint64_t)idx * 8);
    }
    return img;
}

}  // namespace wt
