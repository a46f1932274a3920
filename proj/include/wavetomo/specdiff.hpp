#pragma once

#include <stdexcept>
#include <variant>
#include <vector>

namespace wt {

// High-frequency suppression for spectral differentiation.  xi_max and
// alpha refer to the angular frequency xi_k = 2*pi*k/(n*delta).
struct Truncation {
    double xi_max;
};
struct GaussianFilter {
    double alpha;
};
using SpectralFilter = std::variant<Truncation, GaussianFilter>;

struct PreconditionViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// p-th derivative of a periodic sample vector via FFT: multiply by
// (i xi)^p psi(xi) and transform back.  The Nyquist mode is zeroed for odd
// p on even lengths.  Returns the real part; if imag_residue is given it
// receives the largest leftover imaginary magnitude (roundoff indicator).
std::vector<double> spectral_derivative(const std::vector<double>& v, double delta,
                                        int p, const SpectralFilter& f,
                                        double* imag_residue = nullptr);

// [g1..gN] -> [-gN..-g1, 0, g1..gN]
std::vector<double> odd_extend(const std::vector<double>& ghalf);

// Taper an odd-length, origin-centered window toward 0 at both ends:
// values are kept on the central fraction w and fall smoothly (C-inf
// blending of exp(-1/r)) to 0 at the edges.
void periodize(std::vector<double>& v, double w = 0.5);

double smoothstep(double r);   // 0 at r<=0, 1 at r>=1, smooth blend between

// p-th derivative at 0 of a curve known at j*eps/N, j=1..N, by odd
// extension, tapering, and filtered spectral differentiation.
double derivative_at_origin(const std::vector<double>& gvals, double eps, int p,
                            const SpectralFilter& f, double w = 0.4);

// Finite-difference third derivative at 0 using the same odd extension
// implicitly: (g(2h)-2g(h))/h^3 with h = eps/N.  Exact on odd cubics.
double third_derivative_fd(const std::vector<double>& gvals, double eps);

// L2 and Sobolev H^s norms of one period, with the normalization that
// makes the discrete transform unitary (Plancherel holds exactly).
double l2_norm(const std::vector<double>& v, double delta);
double sobolev_norm(const std::vector<double>& v, double delta, double s);

double cp_const(int p);                       // (2e/p)^(-p/2)
double sup_filter_gain(int p, double alpha);  // sup_xi |xi|^p e^(-alpha xi^2)

struct BoundCheck {
    double lhs = 0, rhs = 0;
    bool ok() const { return lhs <= rhs; }
};

// Noise amplification of the regularized p-th derivative at alpha =
// noise_delta^(2/s): pipeline difference vs C_p * delta^(1-p/s).
// Requires ||g - gd|| <= noise_delta.
BoundCheck noise_amplification_check(const std::vector<double>& g,
                                     const std::vector<double>& gd, double delta,
                                     int p, double s, double noise_delta);

// Total error against the exact derivative: (||g||_{H^s} + C_p) *
// delta^(1-p/s) bounds ||dp_exact - R_alpha(gd)||.
BoundCheck total_error_check(const std::vector<double>& g,
                             const std::vector<double>& gd,
                             const std::vector<double>& dp_exact, double delta,
                             int p, double s, double noise_delta);

// Piecewise-polynomial demo curve on [0,1], N samples at (j-1)/(N-1):
// 0, then 2x^2-x+1/8, then 3x-2x^2-7/8, then 1/4 on successive quarters.
// Its first derivative is continuous piecewise linear; the second jumps
// between 0, 4, -4, 0.
std::vector<double> demo_curve(int n = 4097);
std::vector<double> demo_curve_d1(int n = 4097);
std::vector<double> demo_curve_d2(int n = 4097);

// One differentiation experiment on the demo curve: add white noise of
// std sigma, mirror to a period, filter-differentiate, return RMS error
// against the exact derivative on the original samples.
double demo_rms_error(int p, const SpectralFilter& f, double sigma,
                      std::uint64_t seed, int n = 4097);

}  // namespace wt
