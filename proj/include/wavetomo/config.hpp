#pragma once

#include <string>

#include "wavetomo/grid.hpp"
#include "wavetomo/phantom.hpp"
#include "wavetomo/recon_pointwise.hpp"
#include "wavetomo/recon_radon.hpp"

namespace wt {

struct BadConfig : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Everything one run needs, filled from a JSON file with defaults for
// every key.  Flags may override individual fields after loading.
struct RunConfig {
    Grid grid;
    PhantomSpec phantom;   // defaults to the tilted-ellipse example
    RadonParams radon;
    PointwiseParams pw;
    int fbp_n = 57;
    double fbp_half = 0.2828;
    std::string cache_dir;
    int workers = 1;
    std::string source_path;  // where this config was loaded from
};

RunConfig default_config();
RunConfig load_config(const std::string& path);

// JSON text of the effective configuration (for run manifests).
std::string config_json(const RunConfig& c);

}  // namespace wt
