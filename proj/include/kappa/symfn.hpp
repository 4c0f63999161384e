#pragma once

#include "kappa/poly.hpp"

namespace kappa {

using Roots = std::vector<GradedPoly>;

/// A formal difference of split bundles, each given by its Chern roots.
/// rank = |pos| - |neg| and may be negative.
struct VirtualBundle {
    Roots pos;
    Roots neg;
    int m = 1;

    VirtualBundle(Roots pos_, Roots neg_, int m_)
        : pos(std::move(pos_)), neg(std::move(neg_)), m(m_) {}

    int rank() const { return static_cast<int>(pos.size()) - static_cast<int>(neg.size()); }

    /// Dualization negates every root; an involution, and
    /// (E-F)^dual = E^dual - F^dual.
    VirtualBundle dual() const;
};

// e_k, h_k, p_k on explicit root lists. Conventions: e_0 = h_0 = p_0 = 1
// and any negative index gives 0.
GradedPoly elem_sym(int k, const Roots& roots, int m);
GradedPoly complete_sym(int k, const Roots& roots, int m);
GradedPoly power_sum(int k, const Roots& roots, int m);

/// Residuals of the four Newton identities relating p, e, h:
///   a) p_k = (-1)^{k+1} k e_k - sum_{i=1}^{k-1} (-1)^i p_{k-i} e_i
///   b) k e_k = sum_{i=1}^{k} (-1)^{i+1} p_i e_{k-i}
///   c) p_k = k h_k - sum_{i=1}^{k-1} p_i h_{k-i}
///   d) k h_k = sum_{i=1}^{k} p_i h_{k-i}
struct NewtonReport {
    struct Row {
        int k;
        GradedPoly a, b, c, d;
    };
    std::vector<Row> rows;
    bool ok() const;
};

NewtonReport newton_identity_residuals(int k_max, const Roots& roots, int m);

/// Coefficient of t^k in c_t(E)/c_t(F) = prod(1+r t)|pos / prod(1+r t)|neg.
GradedPoly virtual_chern(int k, const VirtualBundle& vb);
std::vector<GradedPoly> virtual_chern_series(const VirtualBundle& vb, int order);

/// p_k(E-F) = p_k(E) - p_k(F) for k >= 1 (p_0 = 1).
GradedPoly virtual_power_sum(int k, const VirtualBundle& vb);

/// Same value, re-derived through the e-basis recurrence on virtual Chern
/// classes; throws SelfCheckError if the two routes disagree.
GradedPoly virtual_power_sum_checked(int k, const VirtualBundle& vb);

}  // namespace kappa
