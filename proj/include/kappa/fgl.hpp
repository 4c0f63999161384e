#pragma once

#include "kappa/poly.hpp"

namespace kappa {

/// The formal group law u (+) v of the theory with coefficient ring Q_{2m}:
///     u (+) v = (u+v) * (1 + al * inner),
///     inner   = sum_{i=1}^{2m-1} gamma_i u^i v^{2m-i}.
/// `sum` is the fully expanded polynomial; `inner` keeps the factored shape
/// (pure integer coefficients) for printing.
struct FormalGroupLaw {
    int m = 1;
    GradedPoly sum;
    GradedPoly inner;

    FormalGroupLaw() : sum(1), inner(1) {}

    /// sum with u -> a, v -> b.
    GradedPoly apply(const GradedPoly& a, const GradedPoly& b) const;
};

/// Builds the law from the gamma table and cross-checks the factored form
/// against the independent expansion
///     u + v + al * (1/d) * sum_{i=1}^{2m} C(2m+1, i) u^i v^{2m+1-i}.
FormalGroupLaw build_fgl(int m);

/// The formal inverse, -u; verifies sum(u, -u) == 0 exactly.
GradedPoly fgl_inverse(const FormalGroupLaw& fgl);

struct FglAxiomReport {
    GradedPoly unit_residual;
    GradedPoly comm_residual;
    GradedPoly assoc_residual;

    FglAxiomReport(int m) : unit_residual(m), comm_residual(m), assoc_residual(m) {}
    bool ok() const {
        return unit_residual.is_zero() && comm_residual.is_zero() && assoc_residual.is_zero();
    }
};

/// Computes F(u,0)-u, F(u,v)-F(v,u) and F(u,F(v,w))-F(F(u,v),w) as exact
/// polynomials (xi plays the role of the third variable).
FglAxiomReport verify_fgl_axioms(int m);

}  // namespace kappa
