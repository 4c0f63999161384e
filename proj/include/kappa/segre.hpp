#pragma once

#include "kappa/fgl.hpp"
#include "kappa/symfn.hpp"

namespace kappa {

/// Binds the gamma table (and the law built from it) to the Segre-class
/// computations for one theory.
struct SegreContext {
    int m;
    const GammaTable& gamma;
    FormalGroupLaw fgl;

    explicit SegreContext(int m_) : m(m_), gamma(gamma_table(m_)), fgl(build_fgl(m_)) {}
};

/// Closed form of the k-th Segre class on explicit roots:
///   S_k(E) = h_k(E) - al * sum_{l=0}^{2m-1} (-1)^l gamma_l p_l(E) h_{2m+k-l}(E).
/// Total in k; identically zero for k < -2m.
GradedPoly segre_formula(int k, const Roots& roots, const SegreContext& ctx);

/// Symmetrization oracle:
///   S_k(E) = sum_i x_i^{k+e-1} / prod_{j != i} (x_i (+) (-x_j)),
/// with every nilpotent factor inverted as (1+al z)^{-1} = 1-al z and the
/// remaining Vandermonde denominator cleared by exact division. Roots must
/// be distinct variables up to sign; requires k+e-1 >= 0.
GradedPoly segre_vishik(int k, const Roots& roots, const SegreContext& ctx);

/// segre_vishik extended below k = 1-e by appending fresh roots and sending
/// them to zero afterwards (rank stability).
GradedPoly segre_vishik_stabilized(int k, const Roots& roots, const SegreContext& ctx);

/// Pushforward of a polynomial g(xi) from the dual projective bundle of the
/// split bundle with the given roots: sum_i g(x_i) / prod_{j != i}(x_i (+) (-x_j)).
GradedPoly vishik_push(const GradedPoly& g, VarId xi_var, const Roots& roots,
                       const SegreContext& ctx);

/// Relative Segre class S_k(E-F). Computed along two routes — the defining
/// series c_{-t}(-E+F) * (1 - al * sum_i (-1)^i gamma_{2m-i} p_{2m-i}(E-F) t^{-i})
/// and the split form c_t(F^dual) S_t(E) [1 + al * sum gamma_{2m-i} p_{2m-i}(F^dual) t^{-i}]
/// — which must agree exactly.
GradedPoly segre_virtual(int k, const Roots& eroots, const Roots& froots,
                         const SegreContext& ctx);

/// Top Chern class of (line with root tau) tensor (bundle with given roots):
///   sum_{l=0}^{e} c_l(E) tau^{e-l} * [1 + al * sum_j gamma_j p_j(E) tau^{2m-j}],
/// self-checked against the direct product prod_i (tau (+) x_i).
GradedPoly top_chern_twist(const Roots& roots, VarId tau, const SegreContext& ctx);

/// pi_*(xi^s c_f(Q tensor F^dual)) over the dual projective bundle of E,
/// computed by Vishik symmetrization. Equals segre_virtual(s+f-e+1, E, F);
/// that contract is verified by tests, not fused here.
GradedPoly push_twisted_top(int s, const Roots& eroots, const Roots& froots,
                            const SegreContext& ctx);

}  // namespace kappa
