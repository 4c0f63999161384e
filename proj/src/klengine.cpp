#include "kappa/klengine.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace kappa {

namespace {

std::vector<int> strip_zeros(std::vector<int> lambda) {
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    return lambda;
}

}  // namespace

GrassmannSetup::GrassmannSetup(int n_, int d_, int m_, std::vector<int> lambda_)
    : n(n_), d(d_), m(m_), lambda(strip_zeros(std::move(lambda_))) {
    if (n < 1 || d < 1 || d > n) throw InvalidInput("GrassmannSetup: need 1 <= d <= n");
    if (m < 1) throw InvalidInput("GrassmannSetup: m must be >= 1");
    if (static_cast<int>(lambda.size()) > d)
        throw InvalidInput("GrassmannSetup: partition longer than d");
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 1 || lambda[i] > n - d)
            throw InvalidInput("GrassmannSetup: parts must lie in 1..n-d");
        if (i + 1 < lambda.size() && lambda[i] < lambda[i + 1])
            throw InvalidInput("GrassmannSetup: parts must be weakly decreasing");
    }
    if (lambda.empty()) throw InvalidInput("GrassmannSetup: empty partition");
}

LagrangianSetup::LagrangianSetup(int n_, int m_, std::vector<int> lambda_)
    : n(n_), m(m_), lambda(strip_zeros(std::move(lambda_))) {
    if (n < 1) throw InvalidInput("LagrangianSetup: n must be >= 1");
    if (m < 1) throw InvalidInput("LagrangianSetup: m must be >= 1");
    if (static_cast<int>(lambda.size()) > n)
        throw InvalidInput("LagrangianSetup: partition longer than n");
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 1 || lambda[i] > n)
            throw InvalidInput("LagrangianSetup: parts must lie in 1..n");
        if (i + 1 < lambda.size() && lambda[i] <= lambda[i + 1])
            throw InvalidInput("LagrangianSetup: parts must be strictly decreasing");
    }
    if (lambda.empty()) throw InvalidInput("LagrangianSetup: empty partition");
}

ClassPoly kl_A_closed(const GrassmannSetup& setup) {
    std::vector<SymbolRow> rows;
    for (int i = 0; i < setup.r(); ++i)
        rows.emplace_back(setup.k(i), setup.lambda[static_cast<size_t>(i)]);
    return multischur_det_corrected(rows, setup.m);
}

ClassPoly kl_C_closed(const LagrangianSetup& setup) {
    std::vector<SymbolRow> rows;
    for (int i = 0; i < setup.r(); ++i)
        rows.emplace_back(setup.lambda[static_cast<size_t>(i)] - 1,
                          setup.lambda[static_cast<size_t>(i)]);
    return multischur_pf_corrected(rows, setup.m);
}

namespace {

// Splits the state along powers of tau_i; entries keyed by the exponent,
// with tau_i removed from the monomials.
std::map<int, ClassPoly> group_by_tau(const ClassPoly& state, int i) {
    std::map<int, ClassPoly> groups;
    for (const auto& [mon, c] : state.terms()) {
        int s = 0;
        ClassMonomial rest = mon;
        for (auto it = rest.taus.begin(); it != rest.taus.end(); ++it)
            if (it->first == i) {
                s = it->second;
                rest.taus.erase(it);
                break;
            }
        if (s < 0) throw Error("stage pushforward: negative tau exponent");
        auto gi = groups.try_emplace(s, state.m()).first;
        gi->second.add_term(rest, c);
    }
    return groups;
}

Roots tau_roots(int m, int count, int sign) {
    Roots out;
    out.reserve(static_cast<size_t>(count));
    for (int j = 1; j <= count; ++j) {
        GradedPoly v = GradedPoly::variable(m, var_tau(j));
        out.push_back(sign > 0 ? v : -v);
    }
    return out;
}

}  // namespace

ClassPoly kl_A_iterated(const GrassmannSetup& setup) {
    const int m = setup.m;
    const GammaTable& gt = gamma_table(m);
    ClassPoly state = ClassPoly::constant(m, 1);
    for (int i = setup.r(); i >= 1; --i) {
        const int li = setup.lambda[static_cast<size_t>(i - 1)];
        const int ki = setup.k(i - 1);
        Roots d_roots = tau_roots(m, i - 1, -1);  // D_{i-1} has roots -tau_j

        std::vector<ClassPoly> cp;  // c_p(D_{i-1}) embedded in symbol land
        for (int p = 0; p <= i - 1; ++p)
            cp.push_back(ClassPoly::from_tau_poly(elem_sym(p, d_roots, m)));
        std::vector<ClassPoly> pl;  // p_l(D_{i-1}) for the al part
        pl.push_back(ClassPoly::constant(m, 1));
        for (int l = 1; l <= 2 * m - 1; ++l)
            pl.push_back(ClassPoly::from_tau_poly(power_sum(l, d_roots, m)));

        ClassPoly next(m);
        for (auto& [s, part] : group_by_tau(state, i)) {
            ClassPoly repl(m);
            for (int p = 0; p <= i - 1; ++p) {
                if (cp[static_cast<size_t>(p)].is_zero()) continue;
                ClassPoly bracket = ClassPoly::symbol(m, SymbolKind::A, ki, li + s - p);
                for (int l = 1; l <= 2 * m - 1; ++l) {
                    ClassPoly term =
                        pl[static_cast<size_t>(l)] *
                        ClassPoly::symbol(m, SymbolKind::A, ki, li + s - p + 2 * m - l);
                    term *= DualInt{0, gt.at(l), m};
                    bracket += term;
                }
                repl += cp[static_cast<size_t>(p)] * bracket;
            }
            next += part * repl;
        }
        state = std::move(next);
    }
    if (state.involves_tau()) throw Error("kl_A_iterated: tau variables survived the tower");
    return state;
}

ClassPoly kl_C_iterated(const LagrangianSetup& setup) {
    const int m = setup.m;
    const GammaTable& gt = gamma_table(m);
    ClassPoly state = ClassPoly::constant(m, 1);
    for (int i = setup.r(); i >= 1; --i) {
        const int li = setup.lambda[static_cast<size_t>(i - 1)];
        const int sup = li - 1;
        // D_{i-1} - D_{i-1}^dual: roots -tau against +tau
        VirtualBundle ddiff{tau_roots(m, i - 1, -1), tau_roots(m, i - 1, +1), m};
        Roots taus = tau_roots(m, i - 1, +1);

        auto groups = group_by_tau(state, i);
        int s_max = groups.empty() ? 0 : groups.rbegin()->first;
        const int q_max = li + s_max + 4 * m - 1;
        std::vector<GradedPoly> h = virtual_chern_series(ddiff, std::max(q_max, 0));

        std::vector<ClassPoly> podd;  // p_{2q'-1}(tau_1..tau_{i-1})
        for (int qq = 1; qq <= m; ++qq)
            podd.push_back(ClassPoly::from_tau_poly(power_sum(2 * qq - 1, taus, m)));

        ClassPoly next(m);
        for (auto& [s, part] : groups) {
            ClassPoly repl(m);
            for (int q = 0; q <= li + s + 4 * m - 1; ++q) {
                const GradedPoly& hq = h[static_cast<size_t>(q)];
                if (hq.is_zero()) continue;
                ClassPoly bracket = ClassPoly::symbol(m, SymbolKind::C, sup, li + s - q);
                for (int qq = 1; qq <= m; ++qq) {
                    // al * gamma_{2q'-1} * p(D-D^dual) with only odd powers
                    // alive: ((-1)^a - 1) p_a(tau) = -2 p_a(tau)
                    ClassPoly term = podd[static_cast<size_t>(qq - 1)] *
                                     ClassPoly::symbol(m, SymbolKind::C, sup,
                                                       li + s - q + 2 * m - (2 * qq - 1));
                    term *= DualInt{0, -2 * gt.at(2 * qq - 1), m};
                    bracket += term;
                }
                repl += ClassPoly::from_tau_poly(hq) * bracket;
            }
            next += part * repl;
        }
        state = std::move(next);
    }
    if (state.involves_tau()) throw Error("kl_C_iterated: tau variables survived the tower");
    return state;
}

namespace {

GradedPoly specialize(const ClassPoly& c, int m, int x_count,
                      const std::function<int(const ClassSymbol&)>& y_count,
                      int max_sup, SymbolKind expected_kind) {
    SegreContext ctx(m);
    Roots xdual;
    for (int i = 1; i <= x_count; ++i) xdual.push_back(-GradedPoly::variable(m, var_x(i)));
    std::map<std::pair<int, int>, GradedPoly> cache;
    GradedPoly out(m);
    for (const auto& [mon, coeff] : c.terms()) {
        if (!mon.taus.empty())
            throw InvalidInput("specialize_split: tau variables present");
        GradedPoly term = GradedPoly::constant(coeff);
        for (const auto& sym : mon.syms) {
            if (sym.kind != expected_kind)
                throw InvalidInput("specialize_split: unexpected symbol kind");
            if (sym.sup < 0 || sym.sup > max_sup)
                throw InvalidInput("specialize_split: superscript out of range");
            auto key = std::make_pair(sym.sup, sym.idx);
            auto it = cache.find(key);
            if (it == cache.end()) {
                Roots ydual;
                int yc = y_count(sym);
                for (int j = 1; j <= yc; ++j)
                    ydual.push_back(-GradedPoly::variable(m, var_y(j)));
                it = cache.emplace(key, segre_virtual(sym.idx, xdual, ydual, ctx)).first;
            }
            term *= it->second;
        }
        out += term;
    }
    return out;
}

}  // namespace

GradedPoly specialize_split(const ClassPoly& c, const GrassmannSetup& setup) {
    return specialize(
        c, setup.m, setup.d, [](const ClassSymbol& s) { return s.sup; }, setup.n,
        SymbolKind::A);
}

GradedPoly specialize_split(const ClassPoly& c, const LagrangianSetup& setup) {
    return specialize(
        c, setup.m, setup.n, [&](const ClassSymbol& s) { return setup.n + s.sup; },
        setup.n - 1, SymbolKind::C);
}

std::vector<std::vector<int>> partitions_in_box(int d, int width) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rows_left, int max_part) {
        if (!cur.empty()) out.push_back(cur);
        if (rows_left == 0) return;
        for (int p = std::min(max_part, width); p >= 1; --p) {
            cur.push_back(p);
            rec(rows_left - 1, p);
            cur.pop_back();
        }
    };
    rec(d, width);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> strict_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int max_part) {
        if (!cur.empty()) out.push_back(cur);
        for (int p = max_part; p >= 1; --p) {
            cur.push_back(p);
            rec(p - 1);
            cur.pop_back();
        }
    };
    rec(n);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace kappa
