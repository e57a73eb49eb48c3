// zonal.hpp -- zonal spherical harmonics for real dimension N.
//
// Zonal harmonics are Gegenbauer polynomials of the polar angle, evaluated
// through the three-term recurrence with real parameter (N-2)/2 and
// L2-normalized on the sphere by quadrature.  Every surface integral in the
// functionals reduces to a 1-D rule in the polar angle against these tables.
#pragma once

#include <vector>

namespace lanelab::zonal {

// Quadrature over S^{N-1} for zonal integrands: Gauss-Legendre in the polar
// angle on [0, pi] with the sin^{N-2} measure and the S^{N-2} area factor
// folded into the weights.
struct AngularRule {
    double N;
    std::vector<double> phi;
    std::vector<double> t;       // cos(phi)
    std::vector<double> weight;  // integrates zonal g: sum_q weight[q] g(phi[q])
    explicit AngularRule(double N, int nodes = 256);
    double integrate(const std::vector<double>& vals) const;
};

// Gegenbauer polynomial C_k^(lam)(t) by the three-term recurrence.
double gegenbauer(int k, double lam, double t);

class ZonalBasis {
  public:
    ZonalBasis(double N, int max_degree, const AngularRule& rule);

    double dimension() const { return N_; }
    int max_degree() const { return max_degree_; }
    // Laplace-Beltrami eigenvalue k(k+N-2).
    double eigenvalue(int k) const;

    // Tables over the rule nodes, normalized so the squared integral is 1.
    const std::vector<double>& value(int k) const { return val_[k]; }
    const std::vector<double>& dphi(int k) const { return dphi_[k]; }
    // Analytic Laplace-Beltrami action from the Gegenbauer differential
    // identity; equals -eigenvalue(k) * value(k) up to roundoff.
    const std::vector<double>& beltrami(int k) const { return bel_[k]; }

  private:
    double N_;
    int max_degree_;
    std::vector<std::vector<double>> val_, dphi_, bel_;
};

// Integral of |Psi_k|^q over S^{N-1} with the 256-node rule; Psi_k the
// normalized zonal harmonic of degree k.  Requires q >= 1.
double sphere_moment(double N, int k, double q);

}  // namespace lanelab::zonal
