#include "wavetomo/phantom.hpp"

#include <cmath>

namespace wt {

namespace {

constexpr double kPi = 3.14159265358979323846;

double bump(const EllipseBump& e, double x, double y) {
    const double th = e.rot_deg * kPi / 180.0;
    const double c = std::cos(th), s = std::sin(th);
    const double px = x - e.cx, py = y - e.cy;
    const double u = (c * px + s * py) / e.a;
    const double v = (-s * px + c * py) / e.b;
    const double r2 = u * u + v * v;
    if (r2 >= 1.0) return 0.0;
    return e.amp * std::exp(1.0 / (r2 - 1.0));
}

bool in_poly(const std::vector<std::array<double, 2>>& v, double x, double y) {
    bool in = false;
    const size_t n = v.size();
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        const double yi = v[i][1], yj = v[j][1];
        if ((yi > y) != (yj > y)) {
            const double xc = v[j][0] + (y - yj) * (v[i][0] - v[j][0]) / (yi - yj);
            if (x < xc) in = !in;
        }
    }
    return in;
}

}  // namespace

double eval_term(const PhantomTerm& t, double x, double y) {
    return std::visit(
        [&](const auto& term) -> double {
            using T = std::decay_t<decltype(term)>;
            if constexpr (std::is_same_v<T, EllipseBump>) {
                return bump(term, x, y);
            } else if constexpr (std::is_same_v<T, RectIndicator>) {
                return (x >= term.x0 && x <= term.x1 && y >= term.y0 && y <= term.y1)
                           ? term.amp : 0.0;
            } else if constexpr (std::is_same_v<T, PolygonIndicator>) {
                return in_poly(term.verts, x, y) ? term.amp : 0.0;
            } else {
                if (x < term.x0 || x > term.x1 || y < term.y0 || y > term.y1) return 0.0;
                return std::sin(4.0 * kPi * term.k * x) * std::sin(4.0 * kPi * term.k * y);
            }
        },
        t);
}

double eval_phantom(const PhantomSpec& p, double x, double y) {
    double s = 0;
    for (const auto& t : p.terms) s += eval_term(t, x, y);
    return s;
}

std::vector<double> sample_phantom(const PhantomSpec& p, const Grid& g) {
    std::vector<double> q(g.nnode(), 0.0);
    for (int i = 1; i <= g.n1; ++i)
        for (int j = 1; j <= g.n2; ++j)
            q[g.id(i, j)] = eval_phantom(p, g.x1(i), g.x2(j));
    return q;
}

PhantomSpec example_bump() {
    PhantomSpec p;
    p.terms.push_back(EllipseBump{0.0, 0.0, 0.28, 0.19, 30.0, 1.0});
    return p;
}

PhantomSpec example_lungs() {
    PhantomSpec p;
    p.terms.push_back(EllipseBump{0.0, 0.0, 0.22, 0.22, 0.0, 1.5});
    p.terms.push_back(EllipseBump{-0.085, -0.01, 0.055, 0.14, 22.5, -2.0});
    p.terms.push_back(EllipseBump{0.085, -0.01, 0.055, 0.14, -22.5, -2.0});
    return p;
}

PhantomSpec example_lshape() {
    PhantomSpec p;
    PolygonIndicator L;
    L.verts = {{-0.24, -0.24}, {0.08, -0.24}, {0.08, -0.12},
               {-0.12, -0.12}, {-0.12, 0.08}, {-0.24, 0.08}};
    L.amp = 1.0;
    p.terms.push_back(L);
    p.terms.push_back(EllipseBump{0.12, 0.12, 0.10, 0.10, 0.0, 1.0});
    return p;
}

PhantomSpec example_checkerboard(int k) {
    PhantomSpec p;
    SinCheckerboard c;
    c.k = k;
    p.terms.push_back(c);
    return p;
}

}  // namespace wt
