#include "wavetomo/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace wt {

namespace {

std::mutex plan_mutex;
std::map<std::pair<int, int>, fftw_plan> plans;

fftw_plan get_plan(int n, int sign) {
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_pair(n, sign);
    auto it = plans.find(key);
    if (it != plans.end()) return it->second;
    // UNALIGNED lets one plan serve any caller buffer
    std::vector<std::complex<double>> dummy(n);
    fftw_plan p = fftw_plan_dft_1d(
        n, reinterpret_cast<fftw_complex*>(dummy.data()),
        reinterpret_cast<fftw_complex*>(dummy.data()), sign,
        FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!p) throw std::runtime_error("fftw plan creation failed");
    plans.emplace(key, p);
    return p;
}

}  // namespace

void fft(std::vector<std::complex<double>>& a, bool inverse) {
    const int n = (int)a.size();
    if (n == 0) return;
    fftw_plan p = get_plan(n, inverse ? FFTW_BACKWARD : FFTW_FORWARD);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(a.data()),
                     reinterpret_cast<fftw_complex*>(a.data()));
    if (inverse) {
        const double s = 1.0 / n;
        for (auto& z : a) z *= s;
    }
}

}  // namespace wt
