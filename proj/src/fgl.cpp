#include "kappa/fgl.hpp"

namespace kappa {

GradedPoly FormalGroupLaw::apply(const GradedPoly& a, const GradedPoly& b) const {
    return sum.substitute({{var_u(), a}, {var_v(), b}});
}

FormalGroupLaw build_fgl(int m) {
    const GammaTable& gt = gamma_table(m);
    FormalGroupLaw fgl;
    fgl.m = m;

    GradedPoly inner(m);
    for (int i = 1; i <= 2 * m - 1; ++i) {
        Monomial mon{{var_u(), i}, {var_v(), 2 * m - i}};
        inner.add_term(mon, DualInt::integer(gt.at(i), m));
    }
    GradedPoly u = GradedPoly::variable(m, var_u());
    GradedPoly v = GradedPoly::variable(m, var_v());
    GradedPoly one = GradedPoly::constant(m, 1);
    GradedPoly factored = (u + v) * (one + GradedPoly::alpha(m) * inner);

    // independent construction from the unfactored definition
    GradedPoly unfactored = u + v;
    for (int i = 1; i <= 2 * m; ++i) {
        Int coeff = exact_div(binomial(2 * m + 1, i), gt.d, "fgl coefficient");
        Monomial mon{{var_u(), i}, {var_v(), 2 * m + 1 - i}};
        unfactored.add_term(mon, DualInt{0, coeff, m});
    }
    if (!(factored == unfactored))
        throw SelfCheckError("build_fgl: factored and unfactored forms disagree for m=" +
                             std::to_string(m));

    Homogeneity h = factored.homogeneity();
    if (h.kind != Homogeneity::Homogeneous || h.degree != 1)
        throw SelfCheckError("build_fgl: law is not homogeneous of degree 1");

    fgl.sum = std::move(factored);
    fgl.inner = std::move(inner);
    return fgl;
}

GradedPoly fgl_inverse(const FormalGroupLaw& fgl) {
    GradedPoly minus_u = -GradedPoly::variable(fgl.m, var_u());
    GradedPoly check = fgl.sum.substitute(var_v(), minus_u);
    if (!check.is_zero()) throw SelfCheckError("fgl_inverse: sum(u, -u) != 0");
    return minus_u;
}

FglAxiomReport verify_fgl_axioms(int m) {
    FormalGroupLaw fgl = build_fgl(m);
    GradedPoly u = GradedPoly::variable(m, var_u());
    GradedPoly v = GradedPoly::variable(m, var_v());
    GradedPoly w = GradedPoly::variable(m, var_xi());

    FglAxiomReport rep(m);
    rep.unit_residual = fgl.apply(u, GradedPoly(m)) - u;
    rep.comm_residual = fgl.sum - fgl.apply(v, u);
    rep.assoc_residual = fgl.apply(u, fgl.apply(v, w)) - fgl.apply(fgl.apply(u, v), w);
    return rep;
}

}  // namespace kappa
