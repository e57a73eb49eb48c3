// quadrature.cpp

#include "lanelab/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "lanelab/errors.hpp"
#include "lanelab/kernels.hpp"

namespace lanelab::quad {

GaussLegendre gauss_legendre(int n) {
    if (n < 1) throw ParameterError("gauss_legendre: n must be >= 1");
    GaussLegendre rule;
    rule.x.resize(n);
    rule.w.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // Legendre recurrence up to degree n
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.x[i] = -x;
        rule.x[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.w[i] = w;
        rule.w[n - 1 - i] = w;
    }
    return rule;
}

double sphere_area(double dim) {
    return 2.0 * std::pow(M_PI, 0.5 * dim) / std::tgamma(0.5 * dim);
}

double integrate_log_nodes(const std::vector<double>& r, const std::vector<double>& g,
                           std::size_t i0, std::size_t i1) {
    if (i1 >= r.size() || i0 > i1) throw RangeError("integrate_log_nodes: bad node range");
    const std::size_t m = i1 - i0;
    if (m == 0) return 0.0;
    const double h = std::log(r[i0 + 1] / r[i0]);
    auto G = [&](std::size_t i) { return g[i] * r[i]; };  // dr = r ds
    if (m == 1) return 0.5 * h * (G(i0) + G(i1));

    std::size_t simpson_end = i1;
    double tail = 0.0;
    if (m % 2 != 0) {
        // Simpson needs an even interval count; 3/8 rule on the last three.
        simpson_end = i1 - 3;
        tail = 3.0 * h / 8.0 * (G(i1 - 3) + 3.0 * G(i1 - 2) + 3.0 * G(i1 - 1) + G(i1));
        if (simpson_end == i0) return tail;
    }
    double sum = G(i0) + G(simpson_end);
    for (std::size_t i = i0 + 1; i < simpson_end; ++i) sum += ((i - i0) % 2 ? 4.0 : 2.0) * G(i);
    return h / 3.0 * sum + tail;
}

double deriv_log_nodes(const std::vector<double>& r, const std::vector<double>& F, std::size_t i,
                       double log_step) {
    if (i < 2 || i + 2 >= r.size()) throw StencilError("deriv_log_nodes: stencil out of range");
    const double dFds =
        (-F[i + 2] + 8.0 * F[i + 1] - 8.0 * F[i - 1] + F[i - 2]) / (12.0 * log_step);
    return dFds / r[i];
}

namespace {

// d/ds over the whole array, 4th-order centered inside, one-sided at edges.
std::vector<double> dds(const std::vector<double>& f, double h) {
    const std::size_t n = f.size();
    std::vector<double> out(n, 0.0);
    if (n < 5) throw StencilError("derivative needs at least 5 nodes");
    out[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) / (12.0 * h);
    out[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) / (12.0 * h);
    for (std::size_t i = 2; i + 2 < n; ++i)
        out[i] = (-f[i + 2] + 8.0 * f[i + 1] - 8.0 * f[i - 1] + f[i - 2]) / (12.0 * h);
    out[n - 2] =
        (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] - f[n - 5]) /
        (12.0 * h);
    out[n - 1] = (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] +
                  3.0 * f[n - 5]) /
                 (12.0 * h);
    return out;
}

}  // namespace

std::vector<double> deriv1_all(const std::vector<double>& r, const std::vector<double>& f,
                               double log_step) {
    std::vector<double> fs = dds(f, log_step);
    for (std::size_t i = 0; i < r.size(); ++i) fs[i] /= r[i];
    return fs;
}

std::vector<double> deriv2_all(const std::vector<double>& r, const std::vector<double>& f,
                               double log_step) {
    std::vector<double> fs = dds(f, log_step);
    std::vector<double> fss = dds(fs, log_step);
    std::vector<double> out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) out[i] = (fss[i] - fs[i]) / (r[i] * r[i]);
    return out;
}

}  // namespace lanelab::quad
