#include "kappa/kernels.hpp"

#include "kappa/coeffs.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace kappa {

std::vector<int> cone_shift(const ConeSeries& f) {
    std::vector<long> minpref(static_cast<size_t>(f.r), 0);
    for (const auto& [mon, c] : f.poly.terms()) {
        long pref = 0;
        size_t pos = 0;
        for (int j = 1; j <= f.r; ++j) {
            int e = 0;
            while (pos < mon.size() && mon[pos].first < var_t(j)) ++pos;
            if (pos < mon.size() && mon[pos].first == var_t(j)) e = mon[pos].second;
            pref += e;
            minpref[static_cast<size_t>(j - 1)] =
                std::min(minpref[static_cast<size_t>(j - 1)], pref);
        }
    }
    std::vector<int> shift(static_cast<size_t>(f.r), 0);
    long prev = 0;
    for (int j = 0; j < f.r; ++j) {
        long need = std::max(0L, -minpref[static_cast<size_t>(j)]);
        shift[static_cast<size_t>(j)] = static_cast<int>(need - prev);
        prev = need;
    }
    return shift;
}

bool operator<(const ClassMonomial& x, const ClassMonomial& y) {
    long dx = x.degree(), dy = y.degree();
    if (dx != dy) return dx < dy;
    if (x.taus != y.taus) return x.taus < y.taus;
    return std::lexicographical_compare(x.syms.begin(), x.syms.end(), y.syms.begin(),
                                        y.syms.end());
}

long ClassMonomial::degree() const {
    long d = 0;
    for (const auto& s : syms) d += s.idx;
    for (const auto& [i, e] : taus) d += e;
    return d;
}

ClassPoly ClassPoly::constant(int m, long value) {
    return constant(DualInt::integer(value, m));
}

ClassPoly ClassPoly::constant(const DualInt& c) {
    ClassPoly p(c.m);
    p.add_term({}, c);
    return p;
}

ClassPoly ClassPoly::symbol(int m, SymbolKind kind, int sup, int idx) {
    ClassPoly p(m);
    if (idx < -2 * m) return p;  // the zero class
    ClassMonomial mon;
    mon.syms.push_back({kind, sup, idx});
    p.add_term(mon, DualInt::one(m));
    return p;
}

ClassPoly ClassPoly::tau_power(int m, int tau_index, int exp) {
    ClassPoly p(m);
    ClassMonomial mon;
    if (exp != 0) mon.taus.emplace_back(tau_index, exp);
    p.add_term(mon, DualInt::one(m));
    return p;
}

ClassPoly ClassPoly::from_tau_poly(const GradedPoly& p) {
    ClassPoly out(p.m());
    for (const auto& [mon, c] : p.terms()) {
        ClassMonomial cm;
        for (const auto& [v, e] : mon) {
            if (v.family != Family::Tau)
                throw InvalidInput("from_tau_poly: non-tau variable " + var_name(v));
            cm.taus.emplace_back(v.index, e);
        }
        std::sort(cm.taus.begin(), cm.taus.end());
        out.add_term(cm, c);
    }
    return out;
}

void ClassPoly::add_term(const ClassMonomial& mon, const DualInt& c) {
    if (c.is_zero()) return;
    require_same_m(m_, c.m, "ClassPoly::add_term");
    for (const auto& [i, e] : mon.taus)
        if (e < 0) throw InvalidInput("ClassPoly: negative tau exponent");
    auto [it, fresh] = terms_.emplace(mon, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ClassPoly& ClassPoly::operator+=(const ClassPoly& o) {
    require_same_m(m_, o.m_, "ClassPoly+");
    for (const auto& [mon, c] : o.terms_) add_term(mon, c);
    return *this;
}

ClassPoly& ClassPoly::operator-=(const ClassPoly& o) {
    require_same_m(m_, o.m_, "ClassPoly-");
    for (const auto& [mon, c] : o.terms_) add_term(mon, -c);
    return *this;
}

ClassPoly ClassPoly::operator-() const {
    ClassPoly out(m_);
    for (const auto& [mon, c] : terms_) out.terms_.emplace(mon, -c);
    return out;
}

namespace {

ClassMonomial class_mon_mul(const ClassMonomial& x, const ClassMonomial& y) {
    ClassMonomial out;
    out.syms.reserve(x.syms.size() + y.syms.size());
    std::merge(x.syms.begin(), x.syms.end(), y.syms.begin(), y.syms.end(),
               std::back_inserter(out.syms));
    auto i = x.taus.begin();
    auto j = y.taus.begin();
    while (i != x.taus.end() && j != y.taus.end()) {
        if (i->first < j->first)
            out.taus.push_back(*i++);
        else if (j->first < i->first)
            out.taus.push_back(*j++);
        else {
            out.taus.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    out.taus.insert(out.taus.end(), i, x.taus.end());
    out.taus.insert(out.taus.end(), j, y.taus.end());
    return out;
}

}  // namespace

ClassPoly operator*(const ClassPoly& x, const ClassPoly& y) {
    require_same_m(x.m(), y.m(), "ClassPoly*");
    ClassPoly out(x.m());
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) out.add_term(class_mon_mul(mx, my), cx * cy);
    return out;
}

ClassPoly& ClassPoly::operator*=(const DualInt& c) {
    require_same_m(m_, c.m, "ClassPoly*coeff");
    TermMap out;
    if (!c.is_zero())
        for (const auto& [mon, k] : terms_) {
            DualInt v = k * c;
            if (!v.is_zero()) out.emplace(mon, std::move(v));
        }
    terms_ = std::move(out);
    return *this;
}

ClassPoly& ClassPoly::operator*=(const Int& k) {
    if (k == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [mon, c] : terms_) c *= k;
    return *this;
}

ClassPoly ClassPoly::alpha0_part() const {
    ClassPoly out(m_);
    for (const auto& [mon, c] : terms_)
        if (c.a != 0) out.terms_.emplace(mon, DualInt::integer(c.a, m_));
    return out;
}

bool ClassPoly::involves_tau() const {
    for (const auto& [mon, c] : terms_)
        if (!mon.taus.empty()) return true;
    return false;
}

Homogeneity ClassPoly::homogeneity() const {
    Homogeneity h;
    bool have = false;
    for (const auto& [mon, c] : terms_) {
        long base = mon.degree();
        if (c.a != 0) {
            if (have && h.degree != base) return {Homogeneity::Inhomogeneous, 0};
            h.degree = base;
            have = true;
        }
        if (c.b != 0) {
            long d = base - 2L * m_;
            if (have && h.degree != d) return {Homogeneity::Inhomogeneous, 0};
            h.degree = d;
            have = true;
        }
    }
    h.kind = have ? Homogeneity::Homogeneous : Homogeneity::Zero;
    return h;
}

std::string ClassPoly::text() const {
    if (terms_.empty()) return "0";
    auto mon_text = [](const ClassMonomial& mon) {
        std::string s;
        for (const auto& [i, e] : mon.taus) {
            if (!s.empty()) s += "*";
            s += "tau" + std::to_string(i);
            if (e != 1) s += "^" + std::to_string(e);
        }
        for (const auto& sym : mon.syms) {
            if (!s.empty()) s += "*";
            s += static_cast<char>(sym.kind);
            s += "[" + std::to_string(sym.sup) + ";" + std::to_string(sym.idx) + "]";
        }
        return s;
    };
    std::string out;
    for (const auto& [mon, c] : terms_) {
        std::string mon_s = mon_text(mon);
        bool neg = false;
        std::string body;
        if (c.b == 0) {
            neg = c.a < 0;
            Int abs_a = neg ? Int(-c.a) : c.a;
            body = (abs_a == 1 && !mon_s.empty()) ? mon_s
                                                  : abs_a.str() + (mon_s.empty() ? "" : "*" + mon_s);
        } else if (c.a == 0) {
            neg = c.b < 0;
            Int abs_b = neg ? Int(-c.b) : c.b;
            body = (abs_b == 1) ? "al" : abs_b.str() + "*al";
            if (!mon_s.empty()) body += "*" + mon_s;
        } else {
            body = "(" + c.a.str();
            Int abs_b = c.b < 0 ? Int(-c.b) : c.b;
            body += (c.b < 0) ? "-" : "+";
            body += (abs_b == 1) ? "al" : abs_b.str() + "*al";
            body += ")";
            if (!mon_s.empty()) body += "*" + mon_s;
        }
        if (out.empty())
            out = neg ? "-" + body : body;
        else
            out += (neg ? "-" : "+") + body;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Kernels

namespace {

GradedPoly t_monomial(int m, const std::vector<int>& ell) {
    Monomial mon;
    for (size_t j = 0; j < ell.size(); ++j)
        if (ell[j] != 0) mon.emplace_back(var_t(static_cast<int>(j) + 1), ell[j]);
    GradedPoly p(m);
    p.add_term(mon, DualInt::one(m));
    return p;
}

int exponent_of(const Monomial& mon, VarId v) {
    for (const auto& [w, e] : mon)
        if (w == v) return e;
    return 0;
}

// Expansion of prod t^ell prod_{i<j} (1-t_i/t_j)/(1+t_i/t_j). Pair factors
// are geometric; the per-variable decrement bounds D_j are propagated
// backwards from t_r so that every monomial whose exponents can still end
// at or above `lower` survives, and nothing below is ever needed.
GradedPoly expand_pf_kernel(const std::vector<int>& ell, int m, int lower) {
    const int r = static_cast<int>(ell.size());
    std::vector<long> D(static_cast<size_t>(r) + 1, 0);
    long tail = 0;
    for (int j = r; j >= 1; --j) {
        D[static_cast<size_t>(j)] = ell[static_cast<size_t>(j - 1)] - lower + tail;
        if (D[static_cast<size_t>(j)] < 0) return GradedPoly(m);  // var j can never recover
        tail += D[static_cast<size_t>(j)];
    }

    GradedPoly acc = t_monomial(m, ell);
    for (int j = 2; j <= r; ++j) {
        long later = 0;  // gains still available from groups beyond j
        for (int j2 = j + 1; j2 <= r; ++j2) later += D[static_cast<size_t>(j2)];
        for (int i = 1; i < j; ++i) {
            // multiply by 1 + sum_{k>=1} 2(-1)^k (t_i/t_j)^k up to k = D_j
            GradedPoly factor(m);
            factor.add_term({}, DualInt::one(m));
            for (int k = 1; k <= D[static_cast<size_t>(j)]; ++k) {
                Monomial mon{{var_t(i), k}, {var_t(j), -k}};
                factor.add_term(mon, DualInt::integer(k % 2 == 0 ? 2 : -2, m));
            }
            GradedPoly pruned(m);
            for (const auto& [mx, cx] : acc.terms())
                for (const auto& [my, cy] : factor.terms()) {
                    Monomial mon = mon_mul(mx, my);
                    // vars i+1..j-1 can still gain D_j within this group,
                    // everything else only from later groups
                    bool dead = false;
                    for (int v = 1; v <= j && !dead; ++v) {
                        long gain = later + ((v > i && v < j) ? D[static_cast<size_t>(j)] : 0);
                        if (exponent_of(mon, var_t(v)) + gain < lower) dead = true;
                    }
                    if (!dead) pruned.add_term(mon, cx * cy);
                }
            acc = std::move(pruned);
        }
    }
    return acc;
}

GradedPoly drop_below(const GradedPoly& p, int r, int lower) {
    GradedPoly out(p.m());
    for (const auto& [mon, c] : p.terms()) {
        bool dead = false;
        for (int v = 1; v <= r && !dead; ++v)
            if (exponent_of(mon, var_t(v)) < lower) dead = true;
        if (!dead) out.add_term(mon, c);
    }
    return out;
}

void check_rows(const std::vector<int>& ell) {
    if (ell.empty()) throw InvalidInput("kernel: need at least one row");
}

}  // namespace

ConeSeries kernel_A(const std::vector<int>& lambda, int m) {
    check_rows(lambda);
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 1) throw InvalidInput("kernel_A: parts must be positive");
        if (i + 1 < lambda.size() && lambda[i] < lambda[i + 1])
            throw InvalidInput("kernel_A: parts must be weakly decreasing");
    }
    const int r = static_cast<int>(lambda.size());
    const GammaTable& gt = gamma_table(m);
    GradedPoly acc = t_monomial(m, lambda);
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) {
            GradedPoly factor = GradedPoly::constant(m, 1);
            factor.add_term({{var_t(i), 1}, {var_t(j), -1}}, DualInt::integer(-1, m));
            acc *= factor;
        }
    GradedPoly alpha_factor = GradedPoly::constant(m, 1);
    for (int l = -m + 1; l <= m - 1; ++l) {
        Int coeff = gt.at(m + l) * ((m + l) % 2 == 0 ? 1 : -1);
        for (int i = 1; i <= r; ++i)
            for (int j = i + 1; j <= r; ++j) {
                Monomial mon;
                if (m + l != 0) mon.emplace_back(var_t(i), m + l);
                if (m - l != 0) mon.emplace_back(var_t(j), m - l);
                alpha_factor.add_term(mon, DualInt{0, coeff, m});
            }
    }
    acc *= alpha_factor;
    return ConeSeries(r, std::move(acc));
}

ConeSeries kernel_C(const std::vector<int>& lambda, int m, int margin) {
    check_rows(lambda);
    if (margin < 0) throw InvalidInput("kernel_C: negative margin");
    const int r = static_cast<int>(lambda.size());
    for (size_t i = 0; i + 1 < lambda.size(); ++i)
        if (lambda[i] <= lambda[i + 1])
            throw InvalidInput("kernel_C: parts must be strictly decreasing");
    if (lambda.back() < 1) throw InvalidInput("kernel_C: parts must be positive");
    const GammaTable& gt = gamma_table(m);

    // the al factor raises pair exponents by at most 2m-1, so expand that
    // much deeper than the final cutoff
    const int cutoff = -2 * m - margin;
    GradedPoly acc = expand_pf_kernel(lambda, m, cutoff - (2 * m - 1));

    GradedPoly alpha_factor = GradedPoly::constant(m, 1);
    for (int q = 1; q <= m; ++q) {
        Int coeff = -2 * gt.at(2 * q - 1);
        for (int i = 1; i <= r; ++i)
            for (int j = i + 1; j <= r; ++j) {
                Monomial mon{{var_t(i), 2 * q - 1}, {var_t(j), 2 * m - 2 * q + 1}};
                alpha_factor.add_term(mon, DualInt{0, coeff, m});
            }
    }
    acc *= alpha_factor;
    return ConeSeries(r, drop_below(acc, r, cutoff));
}

ConeSeries pfaffian_kernel(const std::vector<int>& ell, int m, int margin) {
    check_rows(ell);
    if (margin < 0) throw InvalidInput("pfaffian_kernel: negative margin");
    const int r = static_cast<int>(ell.size());
    const int cutoff = -2 * m - margin;
    return ConeSeries(r, drop_below(expand_pf_kernel(ell, m, cutoff), r, cutoff));
}

ClassPoly phi(const ConeSeries& f, SymbolKind kind, const std::vector<int>& sups,
              int prefix_tau) {
    const int m = f.poly.m();
    if (prefix_tau < 0 || prefix_tau > f.r) throw InvalidInput("phi: bad tau prefix");
    if (static_cast<int>(sups.size()) != f.r - prefix_tau)
        throw InvalidInput("phi: superscript count does not match variable count");
    ClassPoly out(m);
    for (const auto& [mon, c] : f.poly.terms()) {
        ClassMonomial cm;
        bool dead = false;
        for (int j = 1; j <= f.r && !dead; ++j) {
            int e = exponent_of(mon, var_t(j));
            if (j <= prefix_tau) {
                if (e < 0) throw InvalidInput("phi: negative exponent on tau-prefix variable");
                if (e > 0) cm.taus.emplace_back(j, e);
            } else {
                if (e < -2 * m) {
                    dead = true;
                    break;
                }
                cm.syms.push_back({kind, sups[static_cast<size_t>(j - prefix_tau - 1)], e});
            }
        }
        if (dead) continue;
        std::sort(cm.syms.begin(), cm.syms.end());
        out.add_term(cm, c);
    }
    return out;
}

namespace {

void foreach_permutation(int r, const std::function<void(const std::vector<int>&, int)>& fn) {
    std::vector<int> perm(static_cast<size_t>(r));
    std::iota(perm.begin(), perm.end(), 0);
    // iterate in lexicographic order, tracking parity by inversion count
    do {
        int inv = 0;
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inv;
        fn(perm, inv % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

ClassPoly multischur_det(SymbolKind kind, const std::vector<SymbolRow>& rows, int m) {
    const int r = static_cast<int>(rows.size());
    if (r == 0) throw InvalidInput("multischur_det: need at least one row");
    ClassPoly out(m);
    foreach_permutation(r, [&](const std::vector<int>& perm, int sign) {
        ClassMonomial mon;
        for (int i = 0; i < r; ++i) {
            int idx = rows[static_cast<size_t>(i)].second + perm[static_cast<size_t>(i)] - i;
            if (idx < -2 * m) return;  // zero class kills the product
            mon.syms.push_back({kind, rows[static_cast<size_t>(i)].first, idx});
        }
        std::sort(mon.syms.begin(), mon.syms.end());
        out.add_term(mon, DualInt::integer(sign, m));
    });
    return out;
}

ClassPoly multischur_pf(const std::vector<SymbolRow>& rows, int m) {
    std::vector<int> ell, sups;
    for (const auto& [sup, idx] : rows) {
        sups.push_back(sup);
        ell.push_back(idx);
    }
    return phi(pfaffian_kernel(ell, m), SymbolKind::C, sups, 0);
}

ClassPoly multischur_pf_recursion(const std::vector<SymbolRow>& rows, int m) {
    const size_t r = rows.size();
    if (r % 2 != 0) throw InvalidInput("multischur_pf_recursion: even number of rows required");
    if (r == 0) return ClassPoly::constant(m, 1);
    if (r == 2) return multischur_pf(rows, m);
    ClassPoly out(m);
    for (size_t j = 1; j < r; ++j) {
        ClassPoly head = multischur_pf({rows[0], rows[j]}, m);
        std::vector<SymbolRow> rest;
        for (size_t i = 1; i < r; ++i)
            if (i != j) rest.push_back(rows[i]);
        ClassPoly tail = multischur_pf_recursion(rest, m);
        ClassPoly prod = head * tail;
        if (j % 2 == 0) prod = -prod;  // (-1)^j with 1-based column j+1
        out += prod;
    }
    return out;
}

ClassPoly multischur_det_corrected(const std::vector<SymbolRow>& rows, int m) {
    const GammaTable& gt = gamma_table(m);
    const size_t r = rows.size();
    ClassPoly out = multischur_det(SymbolKind::A, rows, m);
    for (int l = -m + 1; l <= m - 1; ++l) {
        Int coeff = gt.at(m + l) * ((m + l) % 2 == 0 ? 1 : -1);
        for (size_t a = 0; a < r; ++a)
            for (size_t b = a + 1; b < r; ++b) {
                std::vector<SymbolRow> shifted = rows;
                shifted[a].second += m + l;
                shifted[b].second += m - l;
                ClassPoly det = multischur_det(SymbolKind::A, shifted, m);
                det *= DualInt{0, coeff, m};
                out += det;
            }
    }
    return out;
}

ClassPoly multischur_pf_corrected(const std::vector<SymbolRow>& rows, int m) {
    const GammaTable& gt = gamma_table(m);
    const size_t r = rows.size();
    ClassPoly out = multischur_pf(rows, m);
    for (int q = 1; q <= m; ++q) {
        Int coeff = -2 * gt.at(2 * q - 1);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = i + 1; j < r; ++j) {
                std::vector<SymbolRow> shifted = rows;
                shifted[i].second += 2 * q - 1;
                shifted[j].second += 2 * m - 2 * q + 1;
                ClassPoly pf = multischur_pf(shifted, m);
                pf *= DualInt{0, coeff, m};
                out += pf;
            }
    }
    return out;
}

GradedPoly det_t(const std::vector<int>& ell, int m) {
    const int r = static_cast<int>(ell.size());
    GradedPoly out(m);
    foreach_permutation(r, [&](const std::vector<int>& perm, int sign) {
        Monomial mon;
        for (int i = 0; i < r; ++i) {
            int e = ell[static_cast<size_t>(i)] + perm[static_cast<size_t>(i)] - i;
            if (e != 0) mon.emplace_back(var_t(i + 1), e);
        }
        out.add_term(mon, DualInt::integer(sign, m));
    });
    return out;
}

GradedPoly vandermonde_identity_residual(const std::vector<int>& lambda, int m) {
    const GammaTable& gt = gamma_table(m);
    const size_t r = lambda.size();
    GradedPoly lhs = kernel_A(lambda, m).poly;
    GradedPoly rhs = det_t(lambda, m);
    for (int l = -m + 1; l <= m - 1; ++l) {
        Int coeff = gt.at(m + l) * ((m + l) % 2 == 0 ? 1 : -1);
        for (size_t a = 0; a < r; ++a)
            for (size_t b = a + 1; b < r; ++b) {
                std::vector<int> shifted = lambda;
                shifted[a] += m + l;
                shifted[b] += m - l;
                GradedPoly det = det_t(shifted, m);
                det *= DualInt{0, coeff, m};
                rhs += det;
            }
    }
    return lhs - rhs;
}

}  // namespace kappa
