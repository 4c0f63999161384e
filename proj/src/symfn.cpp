#include "kappa/symfn.hpp"

#include <algorithm>

namespace kappa {

VirtualBundle VirtualBundle::dual() const {
    Roots p, n;
    p.reserve(pos.size());
    n.reserve(neg.size());
    for (const auto& r : pos) p.push_back(-r);
    for (const auto& r : neg) n.push_back(-r);
    return VirtualBundle{std::move(p), std::move(n), m};
}

GradedPoly elem_sym(int k, const Roots& roots, int m) {
    if (k < 0 || k > static_cast<int>(roots.size())) return GradedPoly(m);
    // e[j] after absorbing each root in turn
    std::vector<GradedPoly> e(static_cast<size_t>(k) + 1, GradedPoly(m));
    e[0] = GradedPoly::constant(m, 1);
    for (size_t i = 0; i < roots.size(); ++i)
        for (int j = std::min(k, static_cast<int>(i) + 1); j >= 1; --j)
            e[static_cast<size_t>(j)] += e[static_cast<size_t>(j - 1)] * roots[i];
    return e[static_cast<size_t>(k)];
}

GradedPoly complete_sym(int k, const Roots& roots, int m) {
    if (k < 0) return GradedPoly(m);
    if (k == 0) return GradedPoly::constant(m, 1);
    // h_j(r_1..r_i) = h_j(r_1..r_{i-1}) + r_i h_{j-1}(r_1..r_i)
    std::vector<GradedPoly> h(static_cast<size_t>(k) + 1, GradedPoly(m));
    h[0] = GradedPoly::constant(m, 1);
    for (const auto& r : roots)
        for (int j = 1; j <= k; ++j)
            h[static_cast<size_t>(j)] += r * h[static_cast<size_t>(j - 1)];
    return h[static_cast<size_t>(k)];
}

GradedPoly power_sum(int k, const Roots& roots, int m) {
    if (k < 0) return GradedPoly(m);
    if (k == 0) return GradedPoly::constant(m, 1);
    GradedPoly out(m);
    for (const auto& r : roots) out += r.pow(k);
    return out;
}

bool NewtonReport::ok() const {
    for (const auto& row : rows)
        if (!row.a.is_zero() || !row.b.is_zero() || !row.c.is_zero() || !row.d.is_zero())
            return false;
    return true;
}

NewtonReport newton_identity_residuals(int k_max, const Roots& roots, int m) {
    if (k_max < 1) throw InvalidInput("newton_identity_residuals: k_max must be >= 1");
    NewtonReport rep;
    auto e = [&](int k) { return elem_sym(k, roots, m); };
    auto h = [&](int k) { return complete_sym(k, roots, m); };
    auto p = [&](int k) { return power_sum(k, roots, m); };
    for (int k = 1; k <= k_max; ++k) {
        Int sign_k = (k % 2 == 0) ? -1 : 1;  // (-1)^{k+1}
        GradedPoly ra = p(k) - e(k) * (sign_k * Int(k));
        for (int i = 1; i <= k - 1; ++i) ra += p(k - i) * e(i) * Int(i % 2 == 0 ? 1 : -1);

        GradedPoly rb = e(k) * Int(k);
        for (int i = 1; i <= k; ++i) rb -= p(i) * e(k - i) * Int(i % 2 == 0 ? -1 : 1);

        GradedPoly rc = p(k) - h(k) * Int(k);
        for (int i = 1; i <= k - 1; ++i) rc += p(i) * h(k - i);

        GradedPoly rd = h(k) * Int(k);
        for (int i = 1; i <= k; ++i) rd -= p(i) * h(k - i);

        rep.rows.push_back({k, std::move(ra), std::move(rb), std::move(rc), std::move(rd)});
    }
    return rep;
}

std::vector<GradedPoly> virtual_chern_series(const VirtualBundle& vb, int order) {
    if (order < 0) return {};
    int m = vb.m;
    std::vector<GradedPoly> out;
    out.reserve(static_cast<size_t>(order) + 1);
    if (vb.neg.empty()) {
        for (int k = 0; k <= order; ++k) out.push_back(elem_sym(k, vb.pos, m));
        return out;
    }
    VarId t = var_t(0);
    GradedPoly den = GradedPoly::constant(m, 1);
    for (const auto& r : vb.neg)
        den *= GradedPoly::constant(m, 1) + r * GradedPoly::variable(m, t);
    GradedPoly inv = series_inverse(den, t, order);
    GradedPoly num(m);
    for (int k = 0; k <= std::min<int>(order, static_cast<int>(vb.pos.size())); ++k)
        num += elem_sym(k, vb.pos, m) * GradedPoly::variable(m, t, k);
    GradedPoly prod = num * inv;
    for (int k = 0; k <= order; ++k) out.push_back(prod.coefficient_of(t, k));
    return out;
}

GradedPoly virtual_chern(int k, const VirtualBundle& vb) {
    if (k < 0) return GradedPoly(vb.m);
    return virtual_chern_series(vb, k)[static_cast<size_t>(k)];
}

GradedPoly virtual_power_sum(int k, const VirtualBundle& vb) {
    if (k == 0) return GradedPoly::constant(vb.m, 1);
    if (k < 0) return GradedPoly(vb.m);
    return power_sum(k, vb.pos, vb.m) - power_sum(k, vb.neg, vb.m);
}

GradedPoly virtual_power_sum_checked(int k, const VirtualBundle& vb) {
    GradedPoly direct = virtual_power_sum(k, vb);
    if (k <= 0) return direct;
    // p_k out of the e-basis recurrence, with e_i evaluated as c_i(E-F)
    std::vector<GradedPoly> c, p;
    c.reserve(static_cast<size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) c.push_back(virtual_chern(i, vb));
    p.push_back(GradedPoly::constant(vb.m, 1));
    for (int j = 1; j <= k; ++j) {
        Int sign_j = (j % 2 == 0) ? -1 : 1;
        GradedPoly pj = c[static_cast<size_t>(j)] * (sign_j * Int(j));
        for (int i = 1; i <= j - 1; ++i)
            pj -= p[static_cast<size_t>(j - i)] * c[static_cast<size_t>(i)] *
                  Int(i % 2 == 0 ? 1 : -1);
        p.push_back(std::move(pj));
    }
    if (!(p[static_cast<size_t>(k)] == direct))
        throw SelfCheckError("virtual_power_sum: e-basis route disagrees with p(E)-p(F)");
    return direct;
}

}  // namespace kappa
