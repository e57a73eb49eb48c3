// identities.cpp

#include "lanelab/identities.hpp"

#include <algorithm>
#include <cmath>

#include "lanelab/errors.hpp"
#include "lanelab/quadrature.hpp"

namespace lanelab::identities {

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1 || nvars > kMaxVars) throw ParameterError("MultiPoly: 1 <= nvars <= 4");
}

MultiPoly MultiPoly::monomial(int nvars, const Monomial& exps, double coef) {
    MultiPoly p(nvars);
    p.add_term(exps, coef);
    return p;
}

void MultiPoly::add_term(const Monomial& exps, double coef) {
    if (coef == 0.0) return;
    auto [it, inserted] = terms_.try_emplace(exps, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0.0) terms_.erase(it);
    }
}

int MultiPoly::degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
    return d;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly out(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Monomial e{};
            int total = 0;
            for (int i = 0; i < kMaxVars; ++i) {
                e[i] = ea[i] + eb[i];
                total += e[i];
            }
            if (total > kMaxDegree)
                throw DegreeOverflow("MultiPoly: product degree above bound");
            out.add_term(e, ca * cb);
        }
    return out;
}

MultiPoly MultiPoly::scaled(double s) const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.add_term(e, s * c);
    return out;
}

MultiPoly MultiPoly::partial(int var) const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Monomial d = e;
        d[var] -= 1;
        out.add_term(d, c * e[var]);
    }
    return out;
}

MultiPoly MultiPoly::laplacian() const {
    MultiPoly out(nvars_);
    for (int i = 0; i < nvars_; ++i) {
        MultiPoly second = partial(i).partial(i);
        for (const auto& [e, c] : second.terms()) out.add_term(e, c);
    }
    return out;
}

double MultiPoly::eval(const std::vector<double>& x) const {
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= x[i];
        sum += t;
    }
    return sum;
}

PolyCalculus poly_calculus(const MultiPoly& p) {
    PolyCalculus out{{}, p.laplacian()};
    for (int i = 0; i < p.nvars(); ++i) out.gradient.push_back(p.partial(i));
    return out;
}

MultiPoly product_identity_gap(const MultiPoly& zeta, const MultiPoly& eta) {
    const int n = zeta.nvars();
    auto grad_dot = [&](const MultiPoly& a, const MultiPoly& b) {
        MultiPoly s(n);
        for (int i = 0; i < n; ++i) s = s + a.partial(i) * b.partial(i);
        return s;
    };
    const MultiPoly lap_z = zeta.laplacian();
    const MultiPoly lap_e = eta.laplacian();
    const MultiPoly lhs = lap_z * (zeta * eta * eta).laplacian();

    const MultiPoly lap_ze = (zeta * eta).laplacian();
    const MultiPoly gzge = grad_dot(zeta, eta);
    const MultiPoly ge2 = grad_dot(eta, eta);
    const MultiPoly rhs = lap_ze * lap_ze - (gzge * gzge).scaled(4.0) -
                          zeta * zeta * lap_e * lap_e + (zeta * lap_z * ge2).scaled(2.0) -
                          (zeta * lap_e * gzge).scaled(4.0);
    return lhs - rhs;
}

// ------------------------------------- weighted integral identities

namespace {

// The fixed C^5 bump (1-r^2)^6 on [0,1] and its radial derivatives.
struct Bump {
    double f, d1, d2, d3;
    explicit Bump(double r) {
        const double q = 1.0 - r * r;
        const double q3 = q * q * q, q4 = q3 * q, q5 = q4 * q;
        f = q5 * q;
        d1 = -12.0 * r * q5;
        d2 = 120.0 * r * r * q4 - 12.0 * q5;
        d3 = 360.0 * r * q4 - 960.0 * r * r * r * q3;
    }
};

// Radial polynomial in even powers: value, d/dr, Laplacian, and the
// weighted bilaplacian Lap(Lap zeta / r^beta), all exact power-rule sums.
struct RadialZeta {
    const std::vector<double>& c;
    double N;

    double value(double r) const {
        double s = 0.0, rp = 1.0;
        for (double ck : c) {
            s += ck * rp;
            rp *= r * r;
        }
        return s;
    }
    double d1(double r) const {
        double s = 0.0;
        for (std::size_t k = 1; k < c.size(); ++k)
            s += c[k] * 2.0 * double(k) * std::pow(r, 2.0 * k - 1.0);
        return s;
    }
    double lap(double r) const {
        double s = 0.0;
        for (std::size_t k = 1; k < c.size(); ++k)
            s += c[k] * 2.0 * double(k) * (2.0 * double(k) + N - 2.0) * std::pow(r, 2.0 * k - 2.0);
        return s;
    }
    double lap_weighted_lap(double r, double beta) const {
        // Lap( Lap zeta * r^{-beta} ): termwise r^m -> m (m+N-2) r^{m-2}
        double s = 0.0;
        for (std::size_t k = 1; k < c.size(); ++k) {
            const double d = c[k] * 2.0 * double(k) * (2.0 * double(k) + N - 2.0);
            const double m = 2.0 * double(k) - 2.0 - beta;
            s += d * m * (m + N - 2.0) * std::pow(r, m - 2.0);
        }
        return s;
    }
};

// Composite Simpson on [a,b] with an odd number of uniformly spaced nodes.
template <typename F>
double simpson(F f, double a, double b, int points) {
    if (points < 3 || points % 2 == 0) throw ParameterError("simpson: odd points >= 3");
    const double h = (b - a) / (points - 1);
    double sum = f(a) + f(b);
    for (int i = 1; i < points - 1; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return sum * h / 3.0;
}

}  // namespace

RadialIdentityReport radial_identity_residuals(const std::vector<double>& zeta_even_coeffs,
                            const SystemParams& params, int quad_points) {
    const double N = params.N, beta = params.beta;
    const RadialZeta z{zeta_even_coeffs, N};
    const double area = quad::sphere_area(N);
    const double r_min = 1e-6;

    auto weighted = [&](auto integrand) {
        return area * simpson([&](double r) { return integrand(r) * std::pow(r, N - 1.0); },
                              r_min, 1.0, quad_points);
    };
    // absolute-mass companion: scales the residual even when every signed
    // integral cancels to zero (e.g. constant zeta with beta = 0)
    auto weighted_abs = [&](auto integrand) {
        return area *
               simpson([&](double r) { return std::abs(integrand(r)) * std::pow(r, N - 1.0); },
                       r_min, 1.0, quad_points);
    };

    // identity with the weighted bilaplacian
    auto f_lhs1 = [&](double r) {
        const Bump e(r);
        return z.lap_weighted_lap(r, beta) * z.value(r) * e.f * e.f;
    };
    auto f_r1 = [&](double r) {
        const Bump e(r);
        const double lap_ze = z.value(r) * (e.d2 + (N - 1.0) / r * e.d1) +
                              2.0 * z.d1(r) * e.d1 + e.f * z.lap(r);
        return lap_ze * lap_ze * std::pow(r, -beta);
    };
    auto f_r2 = [&](double r) {
        const Bump e(r);
        const double gzge = z.d1(r) * e.d1;
        return std::pow(r, -beta) *
               (-4.0 * gzge * gzge + 2.0 * z.value(r) * z.lap(r) * e.d1 * e.d1);
    };
    auto f_r3 = [&](double r) {
        const Bump e(r);
        const double lap_e = e.d2 + (N - 1.0) / r * e.d1;
        const double lap_e_d1 = e.d3 + (N - 1.0) * (e.d2 / r - e.d1 / (r * r));
        const double zz = z.value(r) * z.value(r);
        return zz * std::pow(r, -beta) *
               (2.0 * lap_e_d1 * e.d1 + lap_e * lap_e - 2.0 * beta / (r * r) * lap_e * r * e.d1);
    };
    const double lhs1 = weighted(f_lhs1);
    const double rhs1 = weighted(f_r1) + weighted(f_r2) + weighted(f_r3);
    const double scale1 =
        std::max({weighted_abs(f_lhs1), weighted_abs(f_r1), weighted_abs(f_r2),
                  weighted_abs(f_r3)});

    // gradient-product identity
    auto f_lhs2 = [&](double r) {
        const Bump e(r);
        const double zd = z.d1(r);
        return 2.0 * zd * zd * e.d1 * e.d1 * std::pow(r, -beta);
    };
    auto f_s1 = [&](double r) {
        const Bump e(r);
        const double g2 = e.d1 * e.d1;
        const double g2p = 2.0 * e.d1 * e.d2;
        const double g2pp = 2.0 * (e.d2 * e.d2 + e.d1 * e.d3);
        const double lap_g2 = g2pp + (N - 1.0) / r * g2p;
        const double zz = z.value(r) * z.value(r);
        return (2.0 * z.value(r) * (-z.lap(r)) * g2 + zz * lap_g2) * std::pow(r, -beta);
    };
    auto f_s2 = [&](double r) {
        const Bump e(r);
        const double g2 = e.d1 * e.d1;
        const double g2p = 2.0 * e.d1 * e.d2;
        const double zz = z.value(r) * z.value(r);
        return zz * std::pow(r, -beta - 2.0) *
               (beta * (beta + 2.0 - N) * g2 - 2.0 * beta * r * g2p);
    };
    const double lhs2 = weighted(f_lhs2);
    const double rhs2 = weighted(f_s1) + weighted(f_s2);
    const double scale2 =
        std::max({weighted_abs(f_lhs2), weighted_abs(f_s1), weighted_abs(f_s2)});

    RadialIdentityReport out;
    out.bilaplacian_pairing = functionals::make_residual(lhs1, rhs1, scale1);
    out.gradient_product = functionals::make_residual(lhs2, rhs2, scale2);
    return out;
}

}  // namespace lanelab::identities
