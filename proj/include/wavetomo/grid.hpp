#pragma once

#include <stdexcept>
#include <vector>

namespace wt {

// Uniform space-time grid on [a1,b1] x [a2,b2] x [0,T].
// Node i = 1..n1 sits at x1 = a1 + (i-1)*dx1; i = 0 and i = n1+1 are ghost
// layers used by the wide interior stencil.  Time level k = 0..nt-1 is
// t = k*dt.  Storage for one level is (n1+2)*(n2+2) doubles, x2 fastest.
struct Grid {
    double a1 = -0.5, b1 = 0.5;
    double a2 = -0.5, b2 = 0.5;
    double T = 3.0;
    int n1 = 60, n2 = 60;
    int nt = 900;

    double dx1() const { return (b1 - a1) / (n1 - 1); }
    double dx2() const { return (b2 - a2) / (n2 - 1); }
    double dt() const { return T / (nt - 1); }
    double x1(int i) const { return a1 + (i - 1) * dx1(); }
    double x2(int j) const { return a2 + (j - 1) * dx2(); }
    double t(int k) const { return k * dt(); }

    int ldim1() const { return n1 + 2; }   // leading dims incl. ghosts
    int ldim2() const { return n2 + 2; }
    int nnode() const { return ldim1() * ldim2(); }
    int id(int i, int j) const { return i * ldim2() + j; }
};

struct BadGrid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InadmissibleGeometry : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void validate(const Grid& g);

// dt/dx1 + dt/dx2; the explicit scheme is stable for values <= 1/sqrt(2).
double cfl(const Grid& g);
bool cfl_ok(const Grid& g);

// One point of the discrete boundary with its quadrature weight and the
// outward unit normal.  Corners belong to the x1 = const edges, so the two
// vertical edges carry full columns j = 1..n2 and the horizontal edges the
// remaining i = 2..n1-1.  Weights are the spacing along the edge.
struct BoundaryPoint {
    int i, j;
    double weight;
    int nx, ny;   // outward normal, one of (+-1,0),(0,+-1)
};

std::vector<BoundaryPoint> boundary_index_set(const Grid& g);

// All nodes of the two-layer frame {0,1,n1,n1+1} x {0,1,n2,n2+1} where
// source data is prescribed, as flat ids into a level array.
std::vector<int> frame_index_set(const Grid& g);

// Time window in which a probe centered at T/2 can be fired and the
// response recorded without touching t = 0 or t = T.  r is half the domain
// diagonal; geometry is inadmissible when T <= 4r + 2*margin.
struct Window {
    double r;
    double t1, t2;
};

Window admissible_window(const Grid& g, double margin = 0.0);

}  // namespace wt
