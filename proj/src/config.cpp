#include "wavetomo/config.hpp"

#include <json.hpp>

#include <fstream>

namespace wt {

using nlohmann::json;

namespace {

std::vector<double> axis_values(const json& j, const char* what) {
    std::vector<double> out;
    if (j.is_array()) {
        for (const auto& v : j) out.push_back(v.get<double>());
        return out;
    }
    if (j.is_object()) {
        if (j.contains("count")) {
            const int n = j.at("count").get<int>();
            if (n < 1) throw BadConfig(std::string(what) + ": count must be positive");
            if (j.contains("step")) {
                const double a = j.value("start", 0.0), d = j.at("step").get<double>();
                for (int i = 0; i < n; ++i) out.push_back(a + i * d);
                return out;
            }
            if (j.contains("min") && j.contains("max")) {
                const double a = j.at("min").get<double>(), b = j.at("max").get<double>();
                for (int i = 0; i < n; ++i)
                    out.push_back(n == 1 ? a : a + i * (b - a) / (n - 1));
                return out;
            }
        }
    }
    throw BadConfig(std::string(what) +
                    ": expected an array, {start,step,count} or {min,max,count}");
}

PhantomSpec phantom_from_json(const json& j) {
    if (j.is_object() && j.contains("example")) {
        const std::string name = j.at("example").get<std::string>();
        if (name == "bump") return example_bump();
        if (name == "lungs") return example_lungs();
        if (name == "lshape") return example_lshape();
        if (name == "checkerboard") return example_checkerboard(j.value("k", 2));
        throw BadConfig("unknown phantom example: " + name);
    }
    if (!j.is_array()) throw BadConfig("phantom: expected a term list or {example}");
    PhantomSpec p;
    for (const auto& t : j) {
        const std::string type = t.at("type").get<std::string>();
        if (type == "ellipse_bump") {
            EllipseBump e;
            e.cx = t.value("cx", 0.0);
            e.cy = t.value("cy", 0.0);
            e.a = t.value("a", 0.25);
            e.b = t.value("b", 0.25);
            e.rot_deg = t.value("rot_deg", 0.0);
            e.amp = t.value("amp", 1.0);
            p.terms.push_back(e);
        } else if (type == "rect") {
            RectIndicator r{t.at("x0").get<double>(), t.at("x1").get<double>(),
                            t.at("y0").get<double>(), t.at("y1").get<double>(),
                            t.value("amp", 1.0)};
            p.terms.push_back(r);
        } else if (type == "polygon") {
            PolygonIndicator poly;
            for (const auto& v : t.at("verts"))
                poly.verts.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
            poly.amp = t.value("amp", 1.0);
            p.terms.push_back(poly);
        } else if (type == "checkerboard") {
            SinCheckerboard c;
            c.k = t.value("k", 2);
            c.x0 = t.value("x0", -0.25);
            c.x1 = t.value("x1", 0.25);
            c.y0 = t.value("y0", -0.25);
            c.y1 = t.value("y1", 0.25);
            p.terms.push_back(c);
        } else {
            throw BadConfig("unknown phantom term type: " + type);
        }
    }
    return p;
}

json phantom_to_json(const PhantomSpec& p) {
    json arr = json::array();
    for (const auto& term : p.terms) {
        json t;
        std::visit(
            [&](const auto& x) {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, EllipseBump>) {
                    t = {{"type", "ellipse_bump"}, {"cx", x.cx}, {"cy", x.cy},
                         {"a", x.a},  {"b", x.b},  {"rot_deg", x.rot_deg}, {"amp", x.amp}};
                } else if constexpr (std::is_same_v<T, RectIndicator>) {
                    t = {{"type", "rect"}, {"x0", x.x0}, {"x1", x.x1},
                         {"y0", x.y0}, {"y1", x.y1}, {"amp", x.amp}};
                } else if constexpr (std::is_same_v<T, PolygonIndicator>) {
                    json vs = json::array();
                    for (const auto& v : x.verts) vs.push_back({v[0], v[1]});
                    t = {{"type", "polygon"}, {"verts", vs}, {"amp", x.amp}};
                } else {
                    t = {{"type", "checkerboard"}, {"k", x.k}, {"x0", x.x0},
                         {"x1", x.x1}, {"y0", x.y0}, {"y1", x.y1}};
                }
            },
            term);
        arr.push_back(t);
    }
    return arr;
}

}  // namespace

RunConfig default_config() {
    RunConfig c;
    c.phantom = example_bump();
    for (int i = 0; i < 45; ++i) c.radon.angles_deg.push_back(4.0 * i);
    for (int i = 0; i < 31; ++i) c.radon.offsets.push_back(-0.4 + 0.8 * i / 30.0);
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw BadConfig("cannot open config " + path);
    json j;
    try {
        f >> j;
    } catch (const json::exception& e) {
        throw BadConfig("parse error in " + path + ": " + e.what());
    }
    RunConfig c = default_config();
    c.source_path = path;
    try {
        if (j.contains("grid")) {
            const auto& g = j.at("grid");
            c.grid.a1 = g.value("a1", c.grid.a1);
            c.grid.b1 = g.value("b1", c.grid.b1);
            c.grid.a2 = g.value("a2", c.grid.a2);
            c.grid.b2 = g.value("b2", c.grid.b2);
            c.grid.T = g.value("T", c.grid.T);
            c.grid.n1 = g.value("n1", c.grid.n1);
            c.grid.n2 = g.value("n2", c.grid.n2);
            c.grid.nt = g.value("nt", c.grid.nt);
        }
        const int p = j.value("p", 3);
        c.radon.p = c.pw.p = p;
        if (j.contains("phantom")) c.phantom = phantom_from_json(j.at("phantom"));
        if (j.contains("radon")) {
            const auto& r = j.at("radon");
            c.radon.eps = r.value("eps", c.radon.eps);
            c.radon.n_eps = r.value("n_eps", c.radon.n_eps);
            c.radon.pulse.tau = r.value("tau", c.radon.pulse.tau);
            c.radon.pulse.h = r.value("h", c.radon.pulse.h);
            c.radon.alpha = r.value("alpha", c.radon.alpha);
            c.radon.taper_w = r.value("taper_w", c.radon.taper_w);
            if (r.contains("angles")) c.radon.angles_deg = axis_values(r.at("angles"), "angles");
            if (r.contains("offsets")) c.radon.offsets = axis_values(r.at("offsets"), "offsets");
        }
        if (j.contains("pointwise")) {
            const auto& w = j.at("pointwise");
            c.pw.eps = w.value("eps", c.pw.eps);
            c.pw.pulse.tau = w.value("tau", c.pw.pulse.tau);
            c.pw.pulse.h = w.value("h", c.pw.pulse.h);
            c.pw.theta_deg = w.value("theta_deg", c.pw.theta_deg);
            c.pw.t0 = w.value("t0", c.pw.t0);
            c.pw.n = w.value("n", c.pw.n);
            c.pw.half = w.value("half", c.pw.half);
        }
        if (j.contains("fbp")) {
            c.fbp_n = j.at("fbp").value("n", c.fbp_n);
            c.fbp_half = j.at("fbp").value("half", c.fbp_half);
        }
        if (j.contains("noise")) {
            const double sigma = j.at("noise").value("sigma", 0.0);
            const std::uint64_t seed = j.at("noise").value("seed", (std::uint64_t)0);
            c.radon.sigma = c.pw.sigma = sigma;
            c.radon.seed = c.pw.seed = seed;
        }
        c.workers = j.value("workers", c.workers);
        c.cache_dir = j.value("cache_dir", c.cache_dir);
        c.radon.cache_dir = c.cache_dir;
        c.radon.workers = c.pw.workers = c.workers;
    } catch (const json::exception& e) {
        throw BadConfig("bad value in " + path + ": " + e.what());
    }
    return c;
}

std::string config_json(const RunConfig& c) {
    json j;
    j["grid"] = {{"a1", c.grid.a1}, {"b1", c.grid.b1}, {"a2", c.grid.a2},
                 {"b2", c.grid.b2}, {"T", c.grid.T},   {"n1", c.grid.n1},
                 {"n2", c.grid.n2}, {"nt", c.grid.nt}};
    j["p"] = c.radon.p;
    j["phantom"] = phantom_to_json(c.phantom);
    j["radon"] = {{"eps", c.radon.eps},       {"n_eps", c.radon.n_eps},
                  {"tau", c.radon.pulse.tau}, {"h", c.radon.pulse.h},
                  {"alpha", c.radon.alpha},   {"taper_w", c.radon.taper_w},
                  {"angles", c.radon.angles_deg}, {"offsets", c.radon.offsets}};
    j["pointwise"] = {{"eps", c.pw.eps},   {"tau", c.pw.pulse.tau},
                      {"h", c.pw.pulse.h}, {"theta_deg", c.pw.theta_deg},
                      {"t0", c.pw.t0},     {"n", c.pw.n},
                      {"half", c.pw.half}};
    j["fbp"] = {{"n", c.fbp_n}, {"half", c.fbp_half}};
    j["noise"] = {{"sigma", c.radon.sigma}, {"seed", c.radon.seed}};
    j["workers"] = c.workers;
    j["cache_dir"] = c.cache_dir;
    return j.dump(2);
}

}  // namespace wt
