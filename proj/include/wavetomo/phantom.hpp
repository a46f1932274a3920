#pragma once

#include <array>
#include <variant>
#include <vector>

#include "wavetomo/grid.hpp"

namespace wt {

// Smooth bump supported on a rotated ellipse: with rho the elliptic radius
// of the point, value = amp * exp(1/(rho^2-1)) inside, 0 outside.
// Peak value at the center is amp/e.
struct EllipseBump {
    double cx = 0, cy = 0;
    double a = 0.25, b = 0.25;   // semi-axes along the rotated frame
    double rot_deg = 0;
    double amp = 1;
};

struct RectIndicator {
    double x0, x1, y0, y1;
    double amp = 1;
};

// Closed polygon, even-odd fill rule.
struct PolygonIndicator {
    std::vector<std::array<double, 2>> verts;
    double amp = 1;
};

// sin(4*pi*k*x1)*sin(4*pi*k*x2) restricted to a box.
struct SinCheckerboard {
    int k = 2;
    double x0 = -0.25, x1 = 0.25, y0 = -0.25, y1 = 0.25;
};

using PhantomTerm = std::variant<EllipseBump, RectIndicator, PolygonIndicator, SinCheckerboard>;

struct PhantomSpec {
    std::vector<PhantomTerm> terms;
};

double eval_term(const PhantomTerm& t, double x, double y);
double eval_phantom(const PhantomSpec& p, double x, double y);

// Samples onto the level layout of g (ghosts included, set to 0).
std::vector<double> sample_phantom(const PhantomSpec& p, const Grid& g);

// Built-in example media, all supported strictly inside the unit square
// and bounded by 1 in absolute value.
PhantomSpec example_bump();           // single tilted ellipse bump
PhantomSpec example_lungs();          // disc bump minus two tilted lobes
PhantomSpec example_lshape();         // L-shaped indicator plus a small bump
PhantomSpec example_checkerboard(int k = 2);

}  // namespace wt
