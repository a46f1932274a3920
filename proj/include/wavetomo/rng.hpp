#pragma once

#include <cstdint>
#include <random>

namespace wt {

// splitmix64 step; used to derive independent per-job seeds from one root
// seed so results do not depend on worker scheduling.
std::uint64_t mix_seed(std::uint64_t root, std::uint64_t job);

// Standard normals via Box-Muller on top of mt19937_64.
class GaussianGen {
  public:
    explicit GaussianGen(std::uint64_t seed) : eng_(seed) {}
    double operator()();

  private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace wt
