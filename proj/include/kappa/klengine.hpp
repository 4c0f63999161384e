#pragma once

#include "kappa/kernels.hpp"
#include "kappa/segre.hpp"

namespace kappa {

/// Grassmann bundle data: E of rank n, tautological subbundle of rank d,
/// partition with lambda_1 <= n-d and at most d positive parts. Zero parts
/// are stripped at construction.
struct GrassmannSetup {
    int n;
    int d;
    int m;
    std::vector<int> lambda;

    GrassmannSetup(int n_, int d_, int m_, std::vector<int> lambda_);

    int r() const { return static_cast<int>(lambda.size()); }
    /// Flag superscript of row i (0-based): lambda_i - (i+1) + d.
    int k(int i) const { return lambda[static_cast<size_t>(i)] - (i + 1) + d; }
};

/// Lagrangian Grassmann bundle data: E symplectic of rank 2n, strict
/// partition with lambda_1 <= n and at most n parts.
struct LagrangianSetup {
    int n;
    int m;
    std::vector<int> lambda;

    LagrangianSetup(int n_, int m_, std::vector<int> lambda_);

    int r() const { return static_cast<int>(lambda.size()); }
};

/// Closed determinantal formula for the degeneracy-locus class kappa_lambda.
ClassPoly kl_A_closed(const GrassmannSetup& setup);

/// The same class via the stagewise pushforward along the resolution tower:
/// at stage i every tau_i^s is traded for
///   sum_p c_p(D_{i-1}) (A_{lambda_i+s-p} + al sum_l gamma_l p_l(D_{i-1})
///                       A_{lambda_i+s-p+2m-l})
/// with D_{i-1} carrying roots -tau_1..-tau_{i-1}.
ClassPoly kl_A_iterated(const GrassmannSetup& setup);

/// Closed Pfaffian formula for the Lagrangian class kappa^C_lambda.
ClassPoly kl_C_closed(const LagrangianSetup& setup);

/// Lagrangian stagewise pushforward; the stage coefficients are
/// c_q(D_{i-1} - D_{i-1}^dual) (the H series) and only odd power sums
/// survive in the al part, with p_a(D - D^dual) = ((-1)^a - 1) p_a(tau...).
ClassPoly kl_C_iterated(const LagrangianSetup& setup);

/// Substitutes every A[l; s] by S_s(S^dual - (E/F^l)^dual) on split roots
///: S^dual = (-x_1..-x_d), (E/F^l)^dual = (-y_1..-y_l).
GradedPoly specialize_split(const ClassPoly& c, const GrassmannSetup& setup);

/// Lagrangian version: L^dual = (-x_1..-x_n), (E/F^l)^dual = (-y_1..-y_{n+l}).
GradedPoly specialize_split(const ClassPoly& c, const LagrangianSetup& setup);

/// All partitions fitting in a d x (n-d) box (positive parts only).
std::vector<std::vector<int>> partitions_in_box(int d, int width);

/// All nonempty strict partitions with parts <= n and length <= n.
std::vector<std::vector<int>> strict_partitions(int n);

}  // namespace kappa
