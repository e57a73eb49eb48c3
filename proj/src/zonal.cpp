// zonal.cpp

#include "lanelab/zonal.hpp"

#include <cmath>

#include "lanelab/errors.hpp"
#include "lanelab/kernels.hpp"
#include "lanelab/quadrature.hpp"

namespace lanelab::zonal {

AngularRule::AngularRule(double dim, int nodes) : N(dim) {
    if (nodes < 2) throw ParameterError("AngularRule: nodes must be >= 2");
    const quad::GaussLegendre gl = quad::gauss_legendre(nodes);
    phi.resize(nodes);
    t.resize(nodes);
    weight.resize(nodes);
    const double lat_area = quad::sphere_area(N - 1.0);  // |S^{N-2}|
    for (int q = 0; q < nodes; ++q) {
        phi[q] = 0.5 * M_PI * (gl.x[q] + 1.0);
        t[q] = std::cos(phi[q]);
        weight[q] = gl.w[q] * 0.5 * M_PI * std::pow(std::sin(phi[q]), N - 2.0) * lat_area;
    }
}

double AngularRule::integrate(const std::vector<double>& vals) const {
    return kern::dot(weight.data(), vals.data(), vals.size());
}

double gegenbauer(int k, double lam, double t) {
    if (k < 0) return 0.0;
    if (k == 0) return 1.0;
    double prev = 1.0;
    double cur = 2.0 * lam * t;
    for (int j = 2; j <= k; ++j) {
        const double next = (2.0 * t * (j + lam - 1.0) * cur - (j + 2.0 * lam - 2.0) * prev) / j;
        prev = cur;
        cur = next;
    }
    return cur;
}

ZonalBasis::ZonalBasis(double N, int max_degree, const AngularRule& rule)
    : N_(N), max_degree_(max_degree) {
    if (max_degree < 0) throw ParameterError("ZonalBasis: max_degree must be >= 0");
    const double lam = 0.5 * (N - 2.0);
    const std::size_t nq = rule.t.size();
    val_.assign(max_degree + 1, std::vector<double>(nq));
    dphi_.assign(max_degree + 1, std::vector<double>(nq));
    bel_.assign(max_degree + 1, std::vector<double>(nq));

    std::vector<double> raw(nq), d1(nq), d2(nq), sq(nq);
    for (int k = 0; k <= max_degree; ++k) {
        for (std::size_t q = 0; q < nq; ++q) {
            const double t = rule.t[q];
            raw[q] = gegenbauer(k, lam, t);
            // dC_k/dt = 2 lam C_{k-1}^{lam+1},  d2C_k/dt2 = 4 lam (lam+1) C_{k-2}^{lam+2}
            d1[q] = (k >= 1) ? 2.0 * lam * gegenbauer(k - 1, lam + 1.0, t) : 0.0;
            d2[q] = (k >= 2) ? 4.0 * lam * (lam + 1.0) * gegenbauer(k - 2, lam + 2.0, t) : 0.0;
        }
        for (std::size_t q = 0; q < nq; ++q) sq[q] = raw[q] * raw[q];
        const double norm2 = rule.integrate(sq);
        const double c = 1.0 / std::sqrt(norm2);
        for (std::size_t q = 0; q < nq; ++q) {
            const double t = rule.t[q];
            const double s = std::sin(rule.phi[q]);
            val_[k][q] = c * raw[q];
            dphi_[k][q] = -c * s * d1[q];
            bel_[k][q] = c * ((1.0 - t * t) * d2[q] - (N - 1.0) * t * d1[q]);
        }
    }
}

double ZonalBasis::eigenvalue(int k) const { return double(k) * (double(k) + N_ - 2.0); }

double sphere_moment(double N, int k, double q) {
    if (q < 1.0) throw ParameterError("sphere_moment: q must be >= 1");
    const AngularRule rule(N, 256);
    const ZonalBasis basis(N, k, rule);
    std::vector<double> vals(rule.t.size());
    const std::vector<double>& psi = basis.value(k);
    for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = std::pow(std::abs(psi[i]), q);
    return rule.integrate(vals);
}

}  // namespace lanelab::zonal
