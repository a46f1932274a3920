#include "wavetomo/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>

#include "wavetomo/rng.hpp"

namespace wt {

namespace {

void check_finite(const double* u, int n, double lim, int step) {
    for (int i = 0; i < n; ++i) {
        if (!std::isfinite(u[i]) || std::fabs(u[i]) > lim)
            throw NonFinite("field blew up at time index " + std::to_string(step), step);
    }
}

// One leapfrog march; sink(k, level) is called for every time level in
// order, with the frame data already applied.
template <class Sink>
void march(const Grid& g, const std::vector<double>& q, const FrameTrace& f,
           const SolveOptions& opt, Sink&& sink) {
    validate(g);
    if (g.n1 < 5 || g.n2 < 5) throw BadGrid("stencil needs at least 5 nodes per axis");
    if (!cfl_ok(g))
        throw CflViolation("dt/dx1 + dt/dx2 = " + std::to_string(cfl(g)) +
                           " exceeds the stability bound 0.7071");
    if ((int)q.size() != g.nnode()) throw BadGrid("q has wrong node count");
    if (f.nt != g.nt) throw BadGrid("frame trace length mismatch");
    const int nf = (int)f.ids.size();
    const int n1 = g.n1, n2 = g.n2, l2 = g.ldim2(), nn = g.nnode();
    const double dt2 = g.dt() * g.dt();
    const double iwx = 1.0 / (12.0 * g.dx1() * g.dx1());
    const double iwy = 1.0 / (12.0 * g.dx2() * g.dx2());
    const int p = opt.p;

    std::vector<double> xs2(l2);
    for (int j = 0; j < l2; ++j) xs2[j] = g.x2(j);

    std::vector<double> prev(nn, 0.0), cur(nn, 0.0);
    if (!opt.init0.empty()) {
        if ((int)opt.init0.size() != nn) throw BadGrid("init0 has wrong node count");
        prev = opt.init0;
    }
    sink(0, prev.data());

    if (!opt.init1.empty()) {
        if ((int)opt.init1.size() != nn) throw BadGrid("init1 has wrong node count");
        cur = opt.init1;
    }
    for (int n = 0; n < nf; ++n) cur[f.ids[n]] = f.v[(size_t)nf + n];
    sink(1, cur.data());

    for (int k = 2; k < g.nt; ++k) {
        const double tc = g.t(k - 1);   // forcing acts at the current level
        double* a = prev.data();        // becomes level k in place
        const double* b = cur.data();
        for (int i = 2; i <= n1 - 1; ++i) {
            const double* bm2 = b + (size_t)(i - 2) * l2;
            const double* bm1 = b + (size_t)(i - 1) * l2;
            const double* b0 = b + (size_t)i * l2;
            const double* bp1 = b + (size_t)(i + 1) * l2;
            const double* bp2 = b + (size_t)(i + 2) * l2;
            const double* qr = q.data() + (size_t)i * l2;
            double* ar = a + (size_t)i * l2;
            const double x1i = g.x1(i);
            for (int j = 2; j <= n2 - 1; ++j) {
                const double c = b0[j];
                double lap = (-bp2[j] + 16.0 * bp1[j] - 30.0 * c + 16.0 * bm1[j] - bm2[j]) * iwx +
                             (-b0[j + 2] + 16.0 * b0[j + 1] - 30.0 * c + 16.0 * b0[j - 1] - b0[j - 2]) * iwy;
                double up = c;
                for (int e = 1; e < p; ++e) up *= c;
                double rhs = lap - qr[j] * up;
                if (opt.forcing) rhs += opt.forcing(x1i, xs2[j], tc);
                ar[j] = 2.0 * c - ar[j] + dt2 * rhs;
            }
        }
        for (int n = 0; n < nf; ++n) a[f.ids[n]] = f.v[(size_t)k * nf + n];
        std::swap(prev, cur);
        if (k % opt.blowup_check_every == 0 || k == g.nt - 1)
            check_finite(cur.data(), nn, opt.blowup_threshold, k);
        sink(k, cur.data());
    }
}

void extract_level(const Grid& g, const double* u, const std::vector<BoundaryPoint>& bp,
                   double* out) {
    const double cx = 1.0 / (2.0 * g.dx1()), cy = 1.0 / (2.0 * g.dx2());
    const int n1 = g.n1, n2 = g.n2;
    for (size_t b = 0; b < bp.size(); ++b) {
        const int i = bp[b].i, j = bp[b].j;
        double v;
        if (bp[b].nx == -1)      v = -(u[g.id(3, j)] - u[g.id(1, j)]) * cx;
        else if (bp[b].nx == 1)  v = (u[g.id(n1, j)] - u[g.id(n1 - 2, j)]) * cx;
        else if (bp[b].ny == -1) v = -(u[g.id(i, 3)] - u[g.id(i, 1)]) * cy;
        else                     v = (u[g.id(i, n2)] - u[g.id(i, n2 - 2)]) * cy;
        out[b] = v;
    }
}

}  // namespace

WaveField solve_forward(const Grid& g, const std::vector<double>& q,
                        const FrameTrace& f, const SolveOptions& opt) {
    WaveField out;
    out.g = g;
    out.v.assign((size_t)g.nt * g.nnode(), 0.0);
    march(g, q, f, opt, [&](int k, const double* lvl) {
        std::memcpy(out.level(k), lvl, sizeof(double) * g.nnode());
    });
    return out;
}

BoundaryTrace extract_dn(const WaveField& u, const std::vector<BoundaryPoint>& bp) {
    BoundaryTrace tr;
    tr.nb = (int)bp.size();
    tr.nt = u.g.nt;
    tr.v.assign((size_t)tr.nb * tr.nt, 0.0);
    for (int k = 0; k < tr.nt; ++k)
        extract_level(u.g, u.level(k), bp, tr.v.data() + (size_t)k * tr.nb);
    return tr;
}

BoundaryTrace solve_dn(const Grid& g, const std::vector<double>& q, const FrameTrace& f,
                       const std::vector<BoundaryPoint>& bp, const SolveOptions& opt) {
    BoundaryTrace tr;
    tr.nb = (int)bp.size();
    tr.nt = g.nt;
    tr.v.assign((size_t)tr.nb * g.nt, 0.0);
    march(g, q, f, opt, [&](int k, const double* lvl) {
        extract_level(g, lvl, bp, tr.v.data() + (size_t)k * tr.nb);
    });
    return tr;
}

double add_noise(BoundaryTrace& tr, double sigma, std::uint64_t seed) {
    if (sigma <= 0.0) return 0.0;
    double m = 0.0;
    for (double x : tr.v) m += std::fabs(x);
    m /= (double)tr.v.size();
    const double s0 = sigma * m;
    GaussianGen gen(seed);
    for (double& x : tr.v) x += s0 * gen();
    return s0;
}

}  // namespace wt
