#include "wavetomo/recon_radon.hpp"

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <exception>

#include "wavetomo/io.hpp"
#include "wavetomo/rng.hpp"

namespace wt {

namespace {
constexpr double kPi = 3.14159265358979323846;

std::uint64_t trace_key(const Grid& g, const std::vector<double>& q,
                        const RadonParams& P, int angle_idx, int j) {
    std::uint64_t h = fnv1a64(q.data(), q.size() * sizeof(double));
    const double gd[] = {g.a1, g.b1, g.a2, g.b2, g.T,
                         (double)g.n1, (double)g.n2, (double)g.nt};
    h = fnv1a64(gd, sizeof(gd), h);
    const double pd[] = {P.pulse.tau, P.pulse.width(), (double)P.p,
                         P.eps * j / P.n_eps, P.angles_deg[angle_idx], P.sigma,
                         (double)P.seed, (double)(angle_idx * P.n_eps + (j - 1))};
    h = fnv1a64(pd, sizeof(pd), h);
    return h;
}

std::string trace_path(const RadonParams& P, int angle_idx, int j, std::uint64_t key) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "/trace_a%03d_j%02d_%016llx.bin", angle_idx, j,
                  (unsigned long long)key);
    return P.cache_dir + buf;
}

BoundaryTrace solve_measured(const Grid& g, const std::vector<double>& q,
                             const RadonParams& P, const FrameTrace& f1,
                             const std::vector<BoundaryPoint>& bp, int angle_idx,
                             int j) {
    const double ej = P.eps * j / P.n_eps;
    FrameTrace fj = f1;
    for (double& x : fj.v) x *= ej;
    SolveOptions opt;
    opt.p = P.p;
    BoundaryTrace dn = solve_dn(g, q, fj, bp, opt);
    if (P.sigma > 0)
        add_noise(dn, P.sigma,
                  mix_seed(P.seed, (std::uint64_t)angle_idx * P.n_eps + (j - 1)));
    return dn;
}

BoundaryTrace measured_cached(const Grid& g, const std::vector<double>& q,
                              const RadonParams& P, const FrameTrace& f1,
                              const std::vector<BoundaryPoint>& bp, int angle_idx,
                              int j) {
    if (P.cache_dir.empty()) return solve_measured(g, q, P, f1, bp, angle_idx, j);
    const std::uint64_t key = trace_key(g, q, P, angle_idx, j);
    const std::string path = trace_path(P, angle_idx, j, key);
    BoundaryTrace dn;
    dn.nb = (int)bp.size();
    dn.nt = g.nt;
    CacheHeader hdr;
    if (read_cache(path, dn.v, hdr) && hdr.dims.size() == 2 &&
        hdr.dims[0] == g.nt && hdr.dims[1] == dn.nb)
        return dn;
    dn = solve_measured(g, q, P, f1, bp, angle_idx, j);
    write_cache(path, dn.v.data(), {g.nt, dn.nb}, {g.dt(), 1.0},
                mix_seed(P.seed, (std::uint64_t)angle_idx * P.n_eps + (j - 1)));
    return dn;
}

}  // namespace

double boundary_integral(const BoundaryTrace& f0, const BoundaryTrace& dn,
                         const std::vector<BoundaryPoint>& bp, double dt) {
    double acc = 0;
    const int nb = f0.nb;
    for (int k = 0; k < f0.nt; ++k) {
        const double* a = f0.v.data() + (size_t)k * nb;
        const double* b = dn.v.data() + (size_t)k * nb;
        double row = 0;
        for (int i = 0; i < nb; ++i) row += a[i] * b[i] * bp[i].weight;
        acc += row;
    }
    return acc * dt;
}

BoundaryTrace measured_trace(const Grid& g, const std::vector<double>& q,
                             const RadonParams& P, int angle_idx, int j) {
    const FrameTrace f1 = radon_probe_trace(g, P.angles_deg[angle_idx], P.pulse);
    const auto bp = boundary_index_set(g);
    return measured_cached(g, q, P, f1, bp, angle_idx, j);
}

ColumnResult reconstruct_column(const Grid& g, const std::vector<double>& q,
                                const RadonParams& P, int angle_idx) {
    const double theta = P.angles_deg[angle_idx];
    const auto bp = boundary_index_set(g);
    const FrameTrace f1 = radon_probe_trace(g, theta, P.pulse);

    std::vector<BoundaryTrace> dns;
    dns.reserve(P.n_eps);
    for (int j = 1; j <= P.n_eps; ++j)
        dns.push_back(measured_cached(g, q, P, f1, bp, angle_idx, j));

    ColumnResult out;
    const int no = (int)P.offsets.size();
    out.spec.assign(no, 0.0);
    out.fd.assign(no, 0.0);
    out.curves.n_off = no;
    out.curves.n_eps = P.n_eps;
    out.curves.v.assign((size_t)no * P.n_eps, 0.0);
    const GaussianFilter filt{P.alpha};
    std::vector<double> gc(P.n_eps);
    for (int oi = 0; oi < no; ++oi) {
        const BoundaryTrace f0 = radon_test_trace(g, bp, theta, P.offsets[oi], P.pulse);
        for (int j = 0; j < P.n_eps; ++j) {
            gc[j] = boundary_integral(f0, dns[j], bp, g.dt()) / (6.0 * kPi);
            out.curves.v[(size_t)oi * P.n_eps + j] = gc[j];
        }
        out.spec[oi] = derivative_at_origin(gc, P.eps, 3, filt, P.taper_w);
        out.fd[oi] = third_derivative_fd(gc, P.eps);
    }
    return out;
}

RadonOutput reconstruct_sinogram(const Grid& g, const std::vector<double>& q,
                                 const RadonParams& P) {
    validate(g);
    if (!cfl_ok(g))
        throw CflViolation("dt/dx1 + dt/dx2 = " + std::to_string(cfl(g)) +
                           " exceeds the stability bound 0.7071");
    RadonOutput out;
    out.sino.angles_deg = out.sino_fd.angles_deg = P.angles_deg;
    out.sino.offsets = out.sino_fd.offsets = P.offsets;
    const int na = (int)P.angles_deg.size(), no = (int)P.offsets.size();
    out.sino.v.assign((size_t)no * na, 0.0);
    out.sino_fd.v.assign((size_t)no * na, 0.0);

    std::exception_ptr err;
    const int nw = P.workers > 0 ? P.workers : 1;
#pragma omp parallel for schedule(dynamic) num_threads(nw)
    for (int ai = 0; ai < na; ++ai) {
        try {
            ColumnResult col = reconstruct_column(g, q, P, ai);
            for (int oi = 0; oi < no; ++oi) {
                out.sino.v[(size_t)oi * na + ai] = col.spec[oi];
                out.sino_fd.v[(size_t)oi * na + ai] = col.fd[oi];
            }
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return out;
}

}  // namespace wt
