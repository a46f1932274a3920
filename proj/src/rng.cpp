#include "wavetomo/rng.hpp"

#include <cmath>

namespace wt {

std::uint64_t mix_seed(std::uint64_t root, std::uint64_t job) {
    std::uint64_t z = root + 0x9e3779b97f4a7c15ULL * (job + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double GaussianGen::operator()() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // u1 in (0,1]: keep log finite
    const double u1 = (eng_() >> 11) * 0x1p-53 + 0x1p-54;
    const double u2 = (eng_() >> 11) * 0x1p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.28318530717958647692 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

}  // namespace wt
