#include "wavetomo/specdiff.hpp"

#include <cmath>
#include <complex>
#include <cstdint>

#include "wavetomo/fft.hpp"
#include "wavetomo/rng.hpp"

namespace wt {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kE = 2.71828182845904523536;

double filter_value(const SpectralFilter& f, double xi) {
    if (std::holds_alternative<Truncation>(f))
        return std::fabs(xi) <= std::get<Truncation>(f).xi_max ? 1.0 : 0.0;
    return std::exp(-std::get<GaussianFilter>(f).alpha * xi * xi);
}
}  // namespace

std::vector<double> spectral_derivative(const std::vector<double>& v, double delta,
                                        int p, const SpectralFilter& f,
                                        double* imag_residue) {
    const int n = (int)v.size();
    std::vector<std::complex<double>> a(n);
    for (int i = 0; i < n; ++i) a[i] = v[i];
    fft(a, false);
    for (int k = 0; k < n; ++k) {
        const int kk = (2 * k <= n) ? k : k - n;
        const double xi = 2.0 * kPi * kk / (n * delta);
        std::complex<double> m = filter_value(f, xi);
        const std::complex<double> ix(0.0, xi);
        for (int e = 0; e < p; ++e) m *= ix;
        if (n % 2 == 0 && k == n / 2 && p % 2 == 1) m = 0.0;
        a[k] *= m;
    }
    fft(a, true);
    std::vector<double> out(n);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        out[i] = a[i].real();
        worst = std::max(worst, std::fabs(a[i].imag()));
    }
    if (imag_residue) *imag_residue = worst;
    return out;
}

std::vector<double> odd_extend(const std::vector<double>& ghalf) {
    const int n = (int)ghalf.size();
    std::vector<double> out(2 * n + 1, 0.0);
    for (int i = 0; i < n; ++i) {
        out[n + 1 + i] = ghalf[i];
        out[n - 1 - i] = -ghalf[i];
    }
    return out;
}

double smoothstep(double r) {
    if (r <= 0.0) return 0.0;
    if (r >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / r);
    const double b = std::exp(-1.0 / (1.0 - r));
    return a / (a + b);
}

void periodize(std::vector<double>& v, double w) {
    const int n = (int)v.size();
    const int half = (n - 1) / 2;
    if (half < 1) return;
    for (int i = 0; i < n; ++i) {
        const double r = std::fabs((double)(i - half)) / half;
        if (r > w) v[i] *= smoothstep((1.0 - r) / (1.0 - w));
    }
}

double derivative_at_origin(const std::vector<double>& gvals, double eps, int p,
                            const SpectralFilter& f, double w) {
    const int N = (int)gvals.size();
    std::vector<double> v = odd_extend(gvals);
    periodize(v, w);
    std::vector<double> d = spectral_derivative(v, eps / N, p, f);
    return d[N];
}

double third_derivative_fd(const std::vector<double>& gvals, double eps) {
    const double h = eps / (double)gvals.size();
    return (gvals[1] - 2.0 * gvals[0]) / (h * h * h);
}

double l2_norm(const std::vector<double>& v, double delta) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s * delta);
}

double sobolev_norm(const std::vector<double>& v, double delta, double s) {
    const int n = (int)v.size();
    std::vector<std::complex<double>> a(n);
    for (int i = 0; i < n; ++i) a[i] = v[i];
    fft(a, false);
    double acc = 0;
    for (int k = 0; k < n; ++k) {
        const int kk = (2 * k <= n) ? k : k - n;
        const double xi = 2.0 * kPi * kk / (n * delta);
        acc += std::pow(1.0 + xi * xi, s) * std::norm(a[k]);
    }
    return std::sqrt(acc * delta / n);
}

double cp_const(int p) { return std::pow(2.0 * kE / p, -0.5 * p); }

double sup_filter_gain(int p, double alpha) {
    return std::pow(p / (2.0 * alpha * kE), 0.5 * p);
}

BoundCheck noise_amplification_check(const std::vector<double>& g,
                                     const std::vector<double>& gd, double delta,
                                     int p, double s, double noise_delta) {
    std::vector<double> diff(g.size());
    for (size_t i = 0; i < g.size(); ++i) diff[i] = g[i] - gd[i];
    if (l2_norm(diff, delta) > noise_delta * (1.0 + 1e-9))
        throw PreconditionViolated("data deviation exceeds stated noise level");
    const double alpha = std::pow(noise_delta, 2.0 / s);
    const GaussianFilter f{alpha};
    std::vector<double> a = spectral_derivative(g, delta, p, f);
    std::vector<double> b = spectral_derivative(gd, delta, p, f);
    for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    BoundCheck out;
    out.lhs = l2_norm(a, delta);
    out.rhs = cp_const(p) * std::pow(noise_delta, 1.0 - p / s);
    return out;
}

BoundCheck total_error_check(const std::vector<double>& g,
                             const std::vector<double>& gd,
                             const std::vector<double>& dp_exact, double delta,
                             int p, double s, double noise_delta) {
    const double alpha = std::pow(noise_delta, 2.0 / s);
    const GaussianFilter f{alpha};
    std::vector<double> r = spectral_derivative(gd, delta, p, f);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= dp_exact[i];
    BoundCheck out;
    out.lhs = l2_norm(r, delta);
    out.rhs = (sobolev_norm(g, delta, s) + cp_const(p)) *
              std::pow(noise_delta, 1.0 - p / s);
    return out;
}

namespace {
double demo_val(double x) {
    if (x < 0.25) return 0.0;
    if (x < 0.5) return 2.0 * x * x - x + 0.125;
    if (x < 0.75) return 3.0 * x - 2.0 * x * x - 0.875;
    return 0.25;
}
double demo_d1(double x) {
    if (x < 0.25) return 0.0;
    if (x < 0.5) return 4.0 * x - 1.0;
    if (x < 0.75) return 3.0 - 4.0 * x;
    return 0.0;
}
double demo_d2(double x) {
    if (x < 0.25) return 0.0;
    if (x < 0.5) return 4.0;
    if (x < 0.75) return -4.0;
    return 0.0;
}
}  // namespace

std::vector<double> demo_curve(int n) {
    std::vector<double> v(n);
    for (int j = 0; j < n; ++j) v[j] = demo_val((double)j / (n - 1));
    return v;
}
std::vector<double> demo_curve_d1(int n) {
    std::vector<double> v(n);
    for (int j = 0; j < n; ++j) v[j] = demo_d1((double)j / (n - 1));
    return v;
}
std::vector<double> demo_curve_d2(int n) {
    std::vector<double> v(n);
    for (int j = 0; j < n; ++j) v[j] = demo_d2((double)j / (n - 1));
    return v;
}

double demo_rms_error(int p, const SpectralFilter& f, double sigma,
                      std::uint64_t seed, int n) {
    std::vector<double> g = demo_curve(n);
    GaussianGen gen(seed);
    if (sigma > 0)
        for (double& x : g) x += sigma * gen();
    // even reflection to one full period, noise included
    std::vector<double> h(2 * n - 2);
    for (int i = 0; i < n; ++i) h[i] = g[i];
    for (int i = 1; i < n - 1; ++i) h[2 * n - 2 - i] = g[i];
    const double delta = 1.0 / (n - 1);
    std::vector<double> d = spectral_derivative(h, delta, p, f);
    std::vector<double> ex = (p == 1) ? demo_curve_d1(n) : demo_curve_d2(n);
    double acc = 0;
    for (int i = 0; i < n; ++i) {
        const double e = d[i] - ex[i];
        acc += e * e;
    }
    return std::sqrt(acc / n);
}

}  // namespace wt
