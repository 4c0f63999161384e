#include "kappa/segre.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kappa {

namespace {

struct SignedVar {
    int sign;  // +1 or -1
    VarId var;
};

SignedVar signed_var(const GradedPoly& root) {
    if (root.term_count() != 1)
        throw InvalidInput("vishik symmetrization expects roots of the form +/- variable");
    const auto& [mon, c] = *root.terms().begin();
    if (mon.size() != 1 || mon[0].second != 1 || c.b != 0 || (c.a != 1 && c.a != -1))
        throw InvalidInput("vishik symmetrization expects roots of the form +/- variable");
    return {c.a == 1 ? 1 : -1, mon[0].first};
}

// Exact division of p by (va - sigma*vb), sigma = +/-1; va, vb distinct.
GradedPoly divide_linear(const GradedPoly& p, VarId va, VarId vb, int sigma) {
    int m = p.m();
    int top = p.max_exponent(va);
    GradedPoly quotient(m);
    GradedPoly remainder(m);
    GradedPoly vb_poly = GradedPoly::variable(m, vb);
    if (sigma < 0) vb_poly = -vb_poly;
    // p = sum_k C_k va^k;  p - p|_{va=sigma vb} = (va - sigma vb) * q
    for (int k = 0; k <= top; ++k) {
        GradedPoly ck = p.coefficient_of(va, k);
        if (ck.is_zero()) continue;
        remainder += ck * vb_poly.pow(k);
        for (int j = 0; j <= k - 1; ++j)
            quotient += ck * GradedPoly::variable(m, va, j) * vb_poly.pow(k - 1 - j);
    }
    if (!remainder.is_zero())
        throw DivisibilityError("vishik symmetrization: numerator not divisible by " +
                                var_name(va) + (sigma > 0 ? "-" : "+") + var_name(vb));
    return quotient;
}

}  // namespace

GradedPoly vishik_push(const GradedPoly& g, VarId xi_var, const Roots& roots,
                       const SegreContext& ctx) {
    const int m = ctx.m;
    const size_t e = roots.size();
    if (e == 0) throw InvalidInput("vishik_push: empty root list");
    std::vector<SignedVar> sv;
    sv.reserve(e);
    std::set<VarId> seen;
    for (const auto& r : roots) {
        SignedVar s = signed_var(r);
        if (s.var == xi_var || !seen.insert(s.var).second)
            throw InvalidInput("vishik_push: root variables must be distinct");
        sv.push_back(s);
    }

    const GradedPoly one = GradedPoly::constant(m, 1);
    const GradedPoly al = GradedPoly::alpha(m);

    std::vector<GradedPoly> numerators;
    numerators.reserve(e);
    for (size_t i = 0; i < e; ++i) {
        GradedPoly ni = g.substitute(xi_var, roots[i]);
        for (size_t j = 0; j < e; ++j) {
            if (j == i) continue;
            // x_i (+) (-x_j) = (x_i - x_j)(1 + al w), invert the unit
            GradedPoly w = ctx.fgl.inner.substitute({{var_u(), roots[i]}, {var_v(), -roots[j]}});
            ni *= one - al * w;
        }
        numerators.push_back(std::move(ni));
    }

    if (e == 1) return numerators[0];

    GradedPoly total(m);
    for (size_t i = 0; i < e; ++i) {
        GradedPoly part = numerators[i];
        for (size_t a = 0; a < e; ++a)
            for (size_t b = a + 1; b < e; ++b)
                if (a != i && b != i) part *= roots[a] - roots[b];
        if (i % 2 == 1) part = -part;
        total += part;
    }

    // clear the Vandermonde prod_{a<b}(r_a - r_b) pair by pair
    for (size_t a = 0; a < e; ++a)
        for (size_t b = a + 1; b < e; ++b) {
            // r_a - r_b = s_a (v_a - s_a s_b v_b)
            total = divide_linear(total, sv[a].var, sv[b].var, sv[a].sign * sv[b].sign);
            if (sv[a].sign < 0) total = -total;
        }
    return total;
}

GradedPoly segre_formula(int k, const Roots& roots, const SegreContext& ctx) {
    const int m = ctx.m;
    GradedPoly out = complete_sym(k, roots, m);
    GradedPoly corr(m);
    for (int l = 0; l <= 2 * m - 1; ++l) {
        GradedPoly h = complete_sym(2 * m + k - l, roots, m);
        if (h.is_zero()) continue;
        Int coeff = ctx.gamma.at(l) * (l % 2 == 0 ? 1 : -1);
        corr += power_sum(l, roots, m) * h * coeff;
    }
    out -= GradedPoly::alpha(m) * corr;
    return out;
}

GradedPoly segre_vishik(int k, const Roots& roots, const SegreContext& ctx) {
    const int e = static_cast<int>(roots.size());
    if (k + e - 1 < 0) throw InvalidInput("segre_vishik: requires k + e - 1 >= 0");
    GradedPoly g = GradedPoly::variable(ctx.m, var_xi(), k + e - 1);
    return vishik_push(g, var_xi(), roots, ctx);
}

GradedPoly segre_vishik_stabilized(int k, const Roots& roots, const SegreContext& ctx) {
    const int e = static_cast<int>(roots.size());
    if (k + e - 1 >= 0) return segre_vishik(k, roots, ctx);
    int pad = -(k + e - 1);
    int base = 0;
    for (const auto& r : roots)
        for (const auto& [mon, c] : r.terms())
            for (const auto& [v, exp] : mon)
                if (v.family == Family::Y) base = std::max(base, v.index);
    Roots padded = roots;
    std::vector<VarId> fresh;
    for (int i = 1; i <= pad; ++i) {
        VarId v = var_y(base + i);
        fresh.push_back(v);
        padded.push_back(GradedPoly::variable(ctx.m, v));
    }
    GradedPoly res = segre_vishik(k, padded, ctx);
    std::vector<std::pair<VarId, GradedPoly>> to_zero;
    for (VarId v : fresh) to_zero.emplace_back(v, GradedPoly(ctx.m));
    return res.substitute(to_zero);
}

GradedPoly segre_virtual(int k, const Roots& eroots, const Roots& froots,
                         const SegreContext& ctx) {
    const int m = ctx.m;
    const int f = static_cast<int>(froots.size());
    VirtualBundle vb{eroots, froots, m};

    // route 1: coefficient of t^k in c_{-t}(-E+F) (1 - al sum ...)
    GradedPoly r1(m);
    const int order = k + 2 * m;
    if (order >= 0) {
        VarId t = var_t(0);
        GradedPoly den = GradedPoly::constant(m, 1);
        for (const auto& r : eroots)
            den *= GradedPoly::constant(m, 1) - r * GradedPoly::variable(m, t);
        GradedPoly a_series = series_inverse(den, t, order);
        GradedPoly num(m);
        for (int j = 0; j <= std::min(order, f); ++j) {
            GradedPoly ej = elem_sym(j, froots, m);
            ej *= Int(j % 2 == 0 ? 1 : -1);
            num += ej * GradedPoly::variable(m, t, j);
        }
        a_series *= num;
        std::vector<GradedPoly> a;
        for (int j = 0; j <= order; ++j) a.push_back(a_series.coefficient_of(t, j));
        auto a_at = [&](int j) { return (j < 0 || j > order) ? GradedPoly(m) : a[size_t(j)]; };

        r1 = a_at(k);
        for (int i = 1; i <= 2 * m; ++i) {
            GradedPoly p = virtual_power_sum(2 * m - i, vb);
            if (p.is_zero()) continue;
            Int coeff = ctx.gamma.at(2 * m - i) * (i % 2 == 0 ? -1 : 1);  // from -(-1)^i
            r1 += GradedPoly::alpha(m) * p * a_at(k + i) * coeff;
        }
    }

    // route 2: c_t(F^dual) S_t(E) [1 + al sum gamma_{2m-i} p_{2m-i}(F^dual) t^{-i}]
    Roots fdual;
    fdual.reserve(froots.size());
    for (const auto& r : froots) fdual.push_back(-r);
    std::map<int, GradedPoly> scache;
    auto s_at = [&](int j) {
        auto it = scache.find(j);
        if (it == scache.end()) it = scache.emplace(j, segre_formula(j, eroots, ctx)).first;
        return it->second;
    };
    GradedPoly r2(m);
    for (int l = 0; l <= f; ++l) {
        GradedPoly cl = elem_sym(l, fdual, m);
        if (cl.is_zero()) continue;
        GradedPoly inner = s_at(k - l);
        for (int i = 1; i <= 2 * m - 1; ++i) {
            GradedPoly p = power_sum(2 * m - i, fdual, m);
            if (p.is_zero()) continue;
            inner += GradedPoly::alpha(m) * p * s_at(k - l + i) * ctx.gamma.at(2 * m - i);
        }
        r2 += cl * inner;
    }

    if (!(r1 == r2))
        throw SelfCheckError("segre_virtual: defining series and split form disagree at k=" +
                             std::to_string(k));
    return r1;
}

GradedPoly top_chern_twist(const Roots& roots, VarId tau, const SegreContext& ctx) {
    const int m = ctx.m;
    const int e = static_cast<int>(roots.size());
    GradedPoly head(m);
    for (int l = 0; l <= e; ++l)
        head += elem_sym(l, roots, m) * GradedPoly::variable(m, tau, e - l);
    GradedPoly corr = GradedPoly::constant(m, 1);
    for (int j = 1; j <= 2 * m - 1; ++j) {
        GradedPoly p = power_sum(j, roots, m);
        if (p.is_zero()) continue;
        corr += GradedPoly::alpha(m) * p * GradedPoly::variable(m, tau, 2 * m - j) *
                ctx.gamma.at(j);
    }
    GradedPoly out = head * corr;

    GradedPoly direct = GradedPoly::constant(m, 1);
    GradedPoly tau_poly = GradedPoly::variable(m, tau);
    for (const auto& r : roots) direct *= ctx.fgl.apply(tau_poly, r);
    if (!(out == direct))
        throw SelfCheckError("top_chern_twist: expansion disagrees with the FGL product");
    return out;
}

GradedPoly push_twisted_top(int s, const Roots& eroots, const Roots& froots,
                            const SegreContext& ctx) {
    if (s < 0) throw InvalidInput("push_twisted_top: s must be >= 0");
    const int m = ctx.m;
    Roots fdual;
    fdual.reserve(froots.size());
    for (const auto& r : froots) fdual.push_back(-r);
    GradedPoly g = GradedPoly::variable(m, var_xi(), s);
    if (!fdual.empty()) g *= top_chern_twist(fdual, var_xi(), ctx);
    return vishik_push(g, var_xi(), eroots, ctx);
}

}  // namespace kappa
