#include "wavetomo/grid.hpp"

#include <cmath>
#include <string>

namespace wt {

void validate(const Grid& g) {
    if (g.n1 < 2 || g.n2 < 2) throw BadGrid("need at least 2 nodes per axis");
    if (g.nt < 3) throw BadGrid("need at least 3 time levels");
    if (!(g.b1 > g.a1) || !(g.b2 > g.a2)) throw BadGrid("empty spatial extent");
    if (!(g.T > 0)) throw BadGrid("nonpositive time extent");
}

double cfl(const Grid& g) {
    return g.dt() / g.dx1() + g.dt() / g.dx2();
}

bool cfl_ok(const Grid& g) {
    return cfl(g) <= 1.0 / std::sqrt(2.0);
}

std::vector<BoundaryPoint> boundary_index_set(const Grid& g) {
    std::vector<BoundaryPoint> out;
    out.reserve(2 * g.n2 + 2 * (g.n1 - 2));
    const double w1 = g.dx1(), w2 = g.dx2();
    for (int j = 1; j <= g.n2; ++j) out.push_back({1, j, w2, -1, 0});
    for (int j = 1; j <= g.n2; ++j) out.push_back({g.n1, j, w2, 1, 0});
    for (int i = 2; i <= g.n1 - 1; ++i) out.push_back({i, 1, w1, 0, -1});
    for (int i = 2; i <= g.n1 - 1; ++i) out.push_back({i, g.n2, w1, 0, 1});
    return out;
}

std::vector<int> frame_index_set(const Grid& g) {
    std::vector<int> out;
    for (int i = 0; i <= g.n1 + 1; ++i) {
        const bool ie = (i <= 1 || i >= g.n1);
        for (int j = 0; j <= g.n2 + 1; ++j) {
            if (ie || j <= 1 || j >= g.n2) out.push_back(g.id(i, j));
        }
    }
    return out;
}

Window admissible_window(const Grid& g, double margin) {
    const double w = g.b1 - g.a1, h = g.b2 - g.a2;
    Window win;
    win.r = 0.5 * std::sqrt(w * w + h * h);
    win.t1 = 2.0 * win.r + margin;
    win.t2 = g.T - 2.0 * win.r - margin;
    if (!(win.t1 < win.t2))
        throw InadmissibleGeometry("T = " + std::to_string(g.T) +
                                   " too short for domain radius " + std::to_string(win.r));
    return win;
}

}  // namespace wt
