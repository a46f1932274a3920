#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "wavetomo/config.hpp"
#include "wavetomo/io.hpp"
#include "wavetomo/phantom.hpp"
#include "wavetomo/recon_pointwise.hpp"
#include "wavetomo/recon_radon.hpp"
#include "wavetomo/solver.hpp"
#include "wavetomo/specdiff.hpp"
#include "wavetomo/tomo.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace wt;

namespace {

struct IncompatibleRuns : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// flag overrides shared by the measurement subcommands
struct Overrides {
    std::string config;
    std::string out_dir = "out";
    int workers = 0;
    double sigma = -1;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string cache_dir;
    bool cache_set = false;
};

void add_common(CLI::App* sub, Overrides& o) {
    sub->add_option("--config,-c", o.config, "JSON run configuration");
    sub->add_option("--out-dir,-o", o.out_dir, "output directory");
    sub->add_option("--workers,-j", o.workers, "parallel angle/point workers");
    sub->add_option("--sigma", o.sigma, "relative measurement noise level");
    auto* s = sub->add_option("--seed", o.seed, "noise seed");
    sub->callback([&o, s] { o.seed_set = s->count() > 0; });
    auto* cd = sub->add_option("--cache-dir", o.cache_dir, "boundary trace cache");
    sub->add_flag_callback("--no-cache", [&o] { o.cache_set = true; },
                           "disable trace caching")
        ->excludes(cd);
}

RunConfig effective_config(const Overrides& o) {
    RunConfig c = o.config.empty() ? default_config() : load_config(o.config);
    if (o.workers > 0) c.workers = c.radon.workers = c.pw.workers = o.workers;
    if (o.sigma >= 0) c.radon.sigma = c.pw.sigma = o.sigma;
    if (o.seed_set) c.radon.seed = c.pw.seed = o.seed;
    if (!o.cache_dir.empty()) c.cache_dir = o.cache_dir;
    if (o.cache_set) c.cache_dir.clear();
    c.radon.cache_dir = c.cache_dir;
    return c;
}

void write_manifest(const std::string& dir, const std::string& command,
                    const RunConfig& c, const std::vector<std::string>& outputs) {
    json m;
    m["command"] = command;
    m["config"] = json::parse(config_json(c));
    m["outputs"] = outputs;
    if (!c.source_path.empty()) m["config_path"] = c.source_path;
    std::ofstream f(dir + "/manifest.json");
    if (!f) throw std::runtime_error("cannot write manifest in " + dir);
    f << m.dump(2) << "\n";
}

Image sinogram_as_image(const Sinogram& s) {
    Image im;
    im.nx = s.na();
    im.ny = s.no();
    im.x0 = s.angles_deg.front();
    im.x1 = s.angles_deg.back();
    im.y0 = s.offsets.front();
    im.y1 = s.offsets.back();
    im.v.resize((size_t)im.nx * im.ny);
    for (int ai = 0; ai < im.nx; ++ai)
        for (int oi = 0; oi < im.ny; ++oi) im.v[(size_t)ai * im.ny + oi] = s.at(oi, ai);
    return im;
}

int cmd_forward(const Overrides& o, double theta, double amp, bool noisy) {
    RunConfig c = effective_config(o);
    fs::create_directories(o.out_dir);
    auto q = sample_phantom(c.phantom, c.grid);
    FrameTrace f = radon_probe_trace(c.grid, theta, c.radon.pulse);
    for (double& x : f.v) x *= amp;
    auto bp = boundary_index_set(c.grid);
    SolveOptions opt;
    opt.p = c.radon.p;
    BoundaryTrace dn = solve_dn(c.grid, q, f, bp, opt);
    double s0 = 0;
    if (noisy && c.radon.sigma > 0) s0 = add_noise(dn, c.radon.sigma, c.radon.seed);
    const std::string out = o.out_dir + "/trace.bin";
    write_cache(out, dn.v.data(), {dn.nt, dn.nb}, {c.grid.dt(), 1.0}, c.radon.seed);
    double peak = 0, ss = 0;
    for (double v : dn.v) {
        peak = std::max(peak, std::fabs(v));
        ss += v * v;
    }
    std::printf("trace: %d levels x %d boundary points, max |dn| %.6g, rms %.6g\n",
                dn.nt, dn.nb, peak, std::sqrt(ss / dn.v.size()));
    if (s0 > 0) std::printf("noise: sigma0 %.6g (seed %llu)\n", s0,
                            (unsigned long long)c.radon.seed);
    write_manifest(o.out_dir, "forward", c, {"trace.bin"});
    std::printf("wrote %s\n", out.c_str());
    return 0;
}

int cmd_radon(const Overrides& o, bool png) {
    RunConfig c = effective_config(o);
    fs::create_directories(o.out_dir);
    auto q = sample_phantom(c.phantom, c.grid);
    RadonOutput r = reconstruct_sinogram(c.grid, q, c.radon);
    write_sinogram_csv(o.out_dir + "/sinogram.csv", r.sino);
    write_sinogram_csv(o.out_dir + "/sinogram_fd.csv", r.sino_fd);
    std::vector<std::string> outs{"sinogram.csv", "sinogram_fd.csv"};
    if (png) {
        write_png_gray(o.out_dir + "/sinogram.png", sinogram_as_image(r.sino));
        outs.push_back("sinogram.png");
    }
    write_manifest(o.out_dir, "radon", c, outs);
    std::printf("wrote %s/sinogram.csv (%d offsets x %d angles)\n", o.out_dir.c_str(),
                r.sino.no(), r.sino.na());
    return 0;
}

int cmd_pointwise(const Overrides& o, bool png) {
    RunConfig c = effective_config(o);
    fs::create_directories(o.out_dir);
    auto q = sample_phantom(c.phantom, c.grid);
    Image im = reconstruct_pointwise(c.grid, q, c.pw);
    write_image_csv(o.out_dir + "/pointwise.csv", im);
    std::vector<std::string> outs{"pointwise.csv"};
    if (png) {
        write_png_gray(o.out_dir + "/pointwise.png", im);
        outs.push_back("pointwise.png");
    }
    write_manifest(o.out_dir, "pointwise", c, outs);
    int bad = 0;
    for (double v : im.v) bad += !std::isfinite(v);
    std::printf("wrote %s/pointwise.csv (%d x %d lattice, %d blow-ups)\n",
                o.out_dir.c_str(), im.nx, im.ny, bad);
    return 0;
}

int cmd_fbp(const Overrides& o, const std::string& in, bool fd_route, bool png) {
    RunConfig c = effective_config(o);
    fs::create_directories(o.out_dir);
    std::string src = in;
    if (src.empty())
        src = o.out_dir + (fd_route ? "/sinogram_fd.csv" : "/sinogram.csv");
    Sinogram s = read_sinogram_csv(src);
    Image im = fbp(s, c.fbp_n, c.fbp_half);
    write_image_csv(o.out_dir + "/image.csv", im);
    std::vector<std::string> outs{"image.csv"};
    if (png) {
        write_png_gray(o.out_dir + "/image.png", im);
        outs.push_back("image.png");
    }
    write_manifest(o.out_dir, "fbp", c, outs);
    double lo = im.v[0], hi = im.v[0];
    for (double v : im.v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    std::printf("wrote %s/image.csv (%d x %d, range [%.4g, %.4g]) from %s\n",
                o.out_dir.c_str(), im.nx, im.ny, lo, hi, src.c_str());
    return 0;
}

int cmd_specdiff_demo(int seeds, double sigma, const std::string& out_csv) {
    struct Case {
        const char* name;
        int p;
        SpectralFilter f;
    };
    const std::vector<Case> cases{
        {"d1 cutoff 64pi", 1, Truncation{64 * M_PI}},
        {"d1 gaussian 5e-5", 1, GaussianFilter{5e-5}},
        {"d2 cutoff 40pi", 2, Truncation{40 * M_PI}},
        {"d2 gaussian 8e-5", 2, GaussianFilter{8e-5}},
    };
    std::ofstream csv;
    if (!out_csv.empty()) {
        csv.open(out_csv);
        if (!csv) throw std::runtime_error("cannot write " + out_csv);
        csv << "case,p,sigma,median_rms\n";
    }
    std::printf("noisy differentiation of the demo curve, sigma %.3g, %d seeds\n",
                sigma, seeds);
    for (const auto& cs : cases) {
        std::vector<double> errs;
        for (int s = 1; s <= seeds; ++s)
            errs.push_back(demo_rms_error(cs.p, cs.f, sigma, (std::uint64_t)s));
        std::sort(errs.begin(), errs.end());
        const double med = errs.size() % 2 ? errs[errs.size() / 2]
                                           : 0.5 * (errs[errs.size() / 2 - 1] +
                                                    errs[errs.size() / 2]);
        std::printf("  %-18s median rms %.5f\n", cs.name, med);
        if (csv) csv << cs.name << "," << cs.p << "," << sigma << "," << med << "\n";
    }
    return 0;
}

int cmd_compare(const std::string& a, const std::string& b) {
    auto head = [](const std::string& p) {
        std::ifstream f(p);
        if (!f) throw std::runtime_error("cannot read " + p);
        std::string line;
        std::getline(f, line);
        return line;
    };
    const std::string ha = head(a), hb = head(b);
    std::vector<double> va, vb;
    if (ha.rfind("# image v1", 0) == 0 && hb.rfind("# image v1", 0) == 0) {
        Image ia = read_image_csv(a), ib = read_image_csv(b);
        if (ia.nx != ib.nx || ia.ny != ib.ny || ia.x0 != ib.x0 || ia.x1 != ib.x1 ||
            ia.y0 != ib.y0 || ia.y1 != ib.y1)
            throw IncompatibleRuns("images cover different rasters: " + a + " vs " + b);
        va = ia.v;
        vb = ib.v;
    } else if (ha.rfind("# sinogram v1", 0) == 0 && hb.rfind("# sinogram v1", 0) == 0) {
        Sinogram sa = read_sinogram_csv(a), sb = read_sinogram_csv(b);
        if (sa.angles_deg != sb.angles_deg || sa.offsets != sb.offsets)
            throw IncompatibleRuns("sinograms cover different rays: " + a + " vs " + b);
        va = sa.v;
        vb = sb.v;
    } else {
        throw IncompatibleRuns("cannot compare " + a + " with " + b +
                               ": different or unknown file kinds");
    }
    double num = 0, den = 0, linf = 0;
    for (size_t i = 0; i < va.size(); ++i) {
        const double d = va[i] - vb[i];
        num += d * d;
        den += vb[i] * vb[i];
        linf = std::max(linf, std::fabs(d));
    }
    const double rel = den > 0 ? std::sqrt(num / den) : std::sqrt(num);
    std::printf("rel_l2 %.6g  max_abs %.6g  (%zu values)\n", rel, linf, va.size());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"simulated boundary measurements of a nonlinear wave medium and "
                 "reconstruction of its coefficient"};
    app.require_subcommand(1);

    Overrides o;
    double theta = 0.0, amp = 1.0, demo_sigma = 1e-3;
    int demo_seeds = 20;
    bool png = false, fd_route = false, forward_noise = false;
    std::string fbp_in, demo_csv, cmp_a, cmp_b;

    auto* fw = app.add_subcommand("forward", "one probe solve, boundary trace out");
    add_common(fw, o);
    fw->add_option("--theta", theta, "probe direction in degrees");
    fw->add_option("--amp", amp, "probe amplitude");
    fw->add_flag("--noisy", forward_noise, "apply the configured noise to the trace");

    auto* rd = app.add_subcommand("radon", "measure the full line-integral table");
    add_common(rd, o);
    rd->add_flag("--png", png, "also render grayscale previews");

    auto* pw = app.add_subcommand("pointwise", "scan the coefficient on a point lattice");
    add_common(pw, o);
    pw->add_flag("--png", png, "also render grayscale previews");

    auto* fb = app.add_subcommand("fbp", "filtered backprojection of a measured table");
    add_common(fb, o);
    fb->add_option("--in", fbp_in, "sinogram csv (default: out-dir/sinogram.csv)");
    fb->add_flag("--fd-route", fd_route, "use the finite-difference table by default");
    fb->add_flag("--png", png, "also render grayscale previews");

    auto* sd = app.add_subcommand("specdiff-demo",
                                  "noise study of regularized differentiation");
    sd->add_option("--seeds", demo_seeds, "number of noise draws per case")
        ->check(CLI::PositiveNumber);
    sd->add_option("--sigma", demo_sigma, "noise standard deviation");
    sd->add_option("--out", demo_csv, "optional csv with the medians");

    auto* cp = app.add_subcommand("compare", "relative difference of two csv outputs");
    cp->add_option("a", cmp_a, "first file")->required();
    cp->add_option("b", cmp_b, "second file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (fw->parsed()) return cmd_forward(o, theta, amp, forward_noise);
        if (rd->parsed()) return cmd_radon(o, png);
        if (pw->parsed()) return cmd_pointwise(o, png);
        if (fb->parsed()) return cmd_fbp(o, fbp_in, fd_route, png);
        if (sd->parsed()) return cmd_specdiff_demo(demo_seeds, demo_sigma, demo_csv);
        if (cp->parsed()) return cmd_compare(cmp_a, cmp_b);
    } catch (const BadConfig& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const CflViolation& e) {
        std::fprintf(stderr, "stability error: %s\n", e.what());
        return 2;
    } catch (const BadGrid& e) {
        std::fprintf(stderr, "grid error: %s\n", e.what());
        return 2;
    } catch (const InadmissibleGeometry& e) {
        std::fprintf(stderr, "geometry error: %s\n", e.what());
        return 2;
    } catch (const DegenerateSinogram& e) {
        std::fprintf(stderr, "sinogram error: %s\n", e.what());
        return 2;
    } catch (const IncompatibleRuns& e) {
        std::fprintf(stderr, "compare error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
