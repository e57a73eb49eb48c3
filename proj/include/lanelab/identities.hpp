// identities.hpp -- exact and quadrature checks of the differential
// identities underlying the integral estimates.
//
// The pointwise fourth-order product identity is verified exactly in a
// small multivariate-polynomial arithmetic; the two weighted integral
// identities are verified in the radial setting by quadrature against a
// compactly supported C^5 bump.
#pragma once

#include <array>
#include <map>
#include <vector>

#include "lanelab/functionals.hpp"
#include "lanelab/params.hpp"

namespace lanelab::identities {

// Sparse multivariate polynomial with exact double coefficients (all suite
// inputs have integer coefficients, so arithmetic stays exact).
class MultiPoly {
  public:
    static constexpr int kMaxVars = 4;
    static constexpr int kMaxDegree = 24;
    using Monomial = std::array<int, kMaxVars>;

    explicit MultiPoly(int nvars = 3);
    static MultiPoly monomial(int nvars, const Monomial& exps, double coef);

    int nvars() const { return nvars_; }
    const std::map<Monomial, double>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;  // throws DegreeOverflow past kMaxDegree
    MultiPoly scaled(double s) const;

    MultiPoly partial(int var) const;
    MultiPoly laplacian() const;

    double eval(const std::vector<double>& x) const;

  private:
    void add_term(const Monomial& exps, double coef);
    int nvars_;
    std::map<Monomial, double> terms_;
};

struct PolyCalculus {
    std::vector<MultiPoly> gradient;
    MultiPoly laplacian;
};

PolyCalculus poly_calculus(const MultiPoly& p);

// LHS - RHS of the fourth-order product identity
//   Lap z * Lap(z e^2) = [Lap(z e)]^2 - 4 (grad z . grad e)^2 - z^2 |Lap e|^2
//                        + 2 z Lap z |grad e|^2 - 4 z Lap e (grad z . grad e);
// the zero polynomial for every input.
MultiPoly product_identity_gap(const MultiPoly& zeta, const MultiPoly& eta);

struct RadialIdentityReport {
    functionals::ResidualReport bilaplacian_pairing;  // the identity with the weighted bilaplacian
    functionals::ResidualReport gradient_product;  // the gradient-product identity
};

// Radial verification of the two weighted integral identities with
// zeta = sum_k c_k r^{2k} (coefficients zeta_even_coeffs) and
// eta = (1-r^2)^6 on r <= 1, quadrature on [1e-6, 1] with quad_points
// Simpson nodes (odd count).
RadialIdentityReport radial_identity_residuals(const std::vector<double>& zeta_even_coeffs,
                            const SystemParams& params, int quad_points = 4001);

}  // namespace lanelab::identities
