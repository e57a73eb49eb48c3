// quadrature.hpp -- Gauss-Legendre rules, sphere areas, and the radial
// integration / differentiation helpers used on log-uniform grids.
#pragma once

#include <cstddef>
#include <vector>

namespace lanelab::quad {

struct GaussLegendre {
    std::vector<double> x;  // nodes on [-1,1]
    std::vector<double> w;  // weights
};

// Nodes and weights by Newton iteration on the Legendre polynomial.
GaussLegendre gauss_legendre(int n);

// Surface area of the unit sphere S^{dim-1} in R^dim, for real dim >= 1.
double sphere_area(double dim);

// Composite Simpson for samples g_i = g(r_i) on a log-uniform grid,
// integrating g dr from node i0 to node i1.  Works in the log coordinate
// where the spacing is uniform; an odd interval count gets a 3/8 tail.
double integrate_log_nodes(const std::vector<double>& r, const std::vector<double>& g,
                           std::size_t i0, std::size_t i1);

// d/dr of tabulated F at node i via the 4th-order centered stencil in the
// log coordinate.  Requires 2 <= i <= n-3.
double deriv_log_nodes(const std::vector<double>& r, const std::vector<double>& F, std::size_t i,
                       double log_step);

// First/second derivative of a sampled array on a log-uniform grid, all
// nodes; 4th-order centered stencils inside, one-sided at the edges.
std::vector<double> deriv1_all(const std::vector<double>& r, const std::vector<double>& f,
                               double log_step);
std::vector<double> deriv2_all(const std::vector<double>& r, const std::vector<double>& f,
                               double log_step);

}  // namespace lanelab::quad
