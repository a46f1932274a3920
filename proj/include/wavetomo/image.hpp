#pragma once

#include <vector>

namespace wt {

// Plain raster on a uniform lattice, x fastest varying by row:
// v[ix*ny + iy] sits at (x(ix), y(iy)).
struct Image {
    int nx = 0, ny = 0;
    double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
    std::vector<double> v;

    double x(int ix) const { return nx > 1 ? x0 + ix * (x1 - x0) / (nx - 1) : x0; }
    double y(int iy) const { return ny > 1 ? y0 + iy * (y1 - y0) / (ny - 1) : y0; }
    double& at(int ix, int iy) { return v[(size_t)ix * ny + iy]; }
    double at(int ix, int iy) const { return v[(size_t)ix * ny + iy]; }
};

}  // namespace wt
