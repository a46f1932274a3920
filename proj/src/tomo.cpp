#include "wavetomo/tomo.hpp"

#include <cmath>
#include <complex>

#include "wavetomo/fft.hpp"

namespace wt {

namespace {
constexpr double kPi = 3.14159265358979323846;

double bilinear(const std::vector<double>& f, const Grid& g, double x, double y) {
    const double px = (x - g.a1) / g.dx1();
    const double py = (y - g.a2) / g.dx2();
    if (px < 0 || px > g.n1 - 1 || py < 0 || py > g.n2 - 1) return 0.0;
    int i0 = (int)px, j0 = (int)py;
    if (i0 > g.n1 - 2) i0 = g.n1 - 2;
    if (j0 > g.n2 - 2) j0 = g.n2 - 2;
    const double fx = px - i0, fy = py - j0;
    // node (i0) is paper index i0+1
    const double v00 = f[g.id(i0 + 1, j0 + 1)], v10 = f[g.id(i0 + 2, j0 + 1)];
    const double v01 = f[g.id(i0 + 1, j0 + 2)], v11 = f[g.id(i0 + 2, j0 + 2)];
    return (1 - fx) * (1 - fy) * v00 + fx * (1 - fy) * v10 +
           (1 - fx) * fy * v01 + fx * fy * v11;
}

double uniform_spacing(const std::vector<double>& x) {
    if (x.size() < 2) throw DegenerateSinogram("need at least 2 offsets");
    const double d = x[1] - x[0];
    for (size_t i = 2; i < x.size(); ++i)
        if (std::fabs((x[i] - x[i - 1]) - d) > 1e-9 * std::max(1.0, std::fabs(d)))
            throw DegenerateSinogram("offsets are not uniformly spaced");
    return d;
}

}  // namespace

Sinogram forward_radon(const std::vector<double>& field, const Grid& g,
                       const std::vector<double>& angles_deg,
                       const std::vector<double>& offsets) {
    Sinogram s;
    s.angles_deg = angles_deg;
    s.offsets = offsets;
    s.v.assign((size_t)s.no() * s.na(), 0.0);
    const double w = g.b1 - g.a1, h = g.b2 - g.a2;
    const double r = 0.5 * std::sqrt(w * w + h * h);
    const double ds = 0.5 * g.dx1();
    const int ns = (int)std::floor(2.0 * r / ds) + 1;
    for (int ai = 0; ai < s.na(); ++ai) {
        const double th = angles_deg[ai] * kPi / 180.0;
        const double ct = std::cos(th), st = std::sin(th);
        for (int oi = 0; oi < s.no(); ++oi) {
            const double eta = offsets[oi];
            double acc = 0;
            for (int k = 0; k < ns; ++k) {
                const double sv = -r + k * ds;
                acc += bilinear(field, g, eta * ct - sv * st, eta * st + sv * ct);
            }
            s.at(oi, ai) = acc * ds;
        }
    }
    return s;
}

std::vector<double> sinogram_mass(const Sinogram& s) {
    const double de = uniform_spacing(s.offsets);
    std::vector<double> m(s.na(), 0.0);
    for (int ai = 0; ai < s.na(); ++ai) {
        double acc = 0;
        for (int oi = 0; oi < s.no(); ++oi) acc += s.at(oi, ai);
        m[ai] = acc * de;
    }
    return m;
}

Image fbp(const Sinogram& s, int n, double half) {
    if (s.na() < 2) throw DegenerateSinogram("need at least 2 angles");
    const double de = uniform_spacing(s.offsets);
    const int noff = s.no();
    int M = 1;
    while (M < 2 * noff) M *= 2;

    // ramp-filter every projection once
    std::vector<double> filt((size_t)noff * s.na());
    for (int ai = 0; ai < s.na(); ++ai) {
        std::vector<std::complex<double>> p(M, 0.0);
        for (int oi = 0; oi < noff; ++oi) p[oi] = s.at(oi, ai);
        fft(p, false);
        for (int k = 0; k < M; ++k) {
            const int kk = (2 * k <= M) ? k : k - M;
            p[k] *= std::fabs(2.0 * kPi * kk / (M * de));
        }
        fft(p, true);
        for (int oi = 0; oi < noff; ++oi) filt[(size_t)ai * noff + oi] = p[oi].real();
    }

    Image img;
    img.nx = img.ny = n;
    img.x0 = img.y0 = -half;
    img.x1 = img.y1 = half;
    img.v.assign((size_t)n * n, 0.0);
    const double scale = (kPi / s.na()) / (2.0 * kPi);
    for (int ix = 0; ix < n; ++ix) {
        const double x = img.x(ix);
        for (int iy = 0; iy < n; ++iy) {
            const double y = img.y(iy);
            double acc = 0;
            for (int ai = 0; ai < s.na(); ++ai) {
                const double th = s.angles_deg[ai] * kPi / 180.0;
                const double t = x * std::cos(th) + y * std::sin(th);
                double idx = (t - s.offsets[0]) / de;
                int i0 = (int)std::floor(idx);
                if (i0 < 0) i0 = 0;
                if (i0 > noff - 2) i0 = noff - 2;
                double fr = idx - i0;
                if (fr < 0) fr = 0;
                if (fr > 1) fr = 1;
                const double* row = filt.data() + (size_t)ai * noff;
                acc += (1 - fr) * row[i0] + fr * row[i0 + 1];
            }
            img.at(ix, iy) = acc * scale;
        }
    }
    return img;
}

}  // namespace wt
