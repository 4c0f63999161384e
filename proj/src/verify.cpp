#include "kappa/verify.hpp"

#include "kappa/emit.hpp"
#include "kappa/klengine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

namespace kappa {

namespace {

using Check = std::function<std::optional<std::string>()>;

struct Case {
    std::string id;
    Check fn;
};

std::optional<std::string> expect_zero(const GradedPoly& residual, const std::string& label) {
    if (residual.is_zero()) return std::nullopt;
    return label + ": residual " + residual.text();
}

std::optional<std::string> expect_eq(const GradedPoly& a, const GradedPoly& b,
                                     const std::string& label) {
    return expect_zero(a - b, label);
}

std::optional<std::string> expect_eq(const ClassPoly& a, const ClassPoly& b,
                                     const std::string& label) {
    ClassPoly diff = a - b;
    if (diff.is_zero()) return std::nullopt;
    return label + ": residual " + diff.text();
}

Roots x_roots(int m, int e) {
    Roots out;
    for (int i = 1; i <= e; ++i) out.push_back(GradedPoly::variable(m, var_x(i)));
    return out;
}

Roots y_roots(int m, int f) {
    Roots out;
    for (int j = 1; j <= f; ++j) out.push_back(GradedPoly::variable(m, var_y(j)));
    return out;
}

GradedPoly random_poly(std::mt19937_64& rng, int m, int max_terms = 4) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> exp(0, 3);
    std::uniform_int_distribution<int> pick(0, 2);
    const VarId vars[3] = {var_x(1), var_x(2), var_u()};
    GradedPoly p(m);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Monomial mon;
        for (VarId v : vars)
            if (pick(rng) == 0) {
                int e = exp(rng);
                if (e > 0) mon.emplace_back(v, e);
            }
        p.add_term(mon, DualInt{coeff(rng), coeff(rng), m});
    }
    return p;
}

// --------------------------------------------------------------- coeffs

void suite_coeffs(std::vector<Case>& cases, const VerifyOptions& opts) {
    int max_m = opts.max_m ? opts.max_m : 8;
    for (int m = 1; m <= max_m; ++m)
        cases.push_back({"coeffs/gamma-m" + std::to_string(m), [m]() -> std::optional<std::string> {
                             const GammaTable& t = gamma_table(m);  // throws on bad division
                             for (int l = 1; l <= 2 * m - 1; ++l)
                                 if (t.at(l) != t.at(2 * m - l))
                                     return "palindromy fails at l=" + std::to_string(l);
                             Int alt = 0;
                             for (int l = 0; l <= 2 * m - 1; ++l)
                                 alt += (l % 2 == 0 ? 1 : -1) * t.at(l);
                             if (alt != 0) return "alternating sum " + alt.str();
                             return std::nullopt;
                         }});
    cases.push_back({"coeffs/nontriviality-oracle", []() -> std::optional<std::string> {
                         for (long i = 1; i <= 10000; ++i) {
                             long n = i + 1;
                             long expect = 1;
                             for (long p = 2; p <= n; ++p) {
                                 bool prime = true;
                                 for (long q = 2; q * q <= p; ++q)
                                     if (p % q == 0) prime = false;
                                 if (!prime) continue;
                                 long pw = p;
                                 while (pw < n && pw <= n / p) pw *= p;
                                 if (pw == n) {
                                     expect = p;
                                     break;
                                 }
                                 if (p * p > n) break;
                             }
                             if (n > 1 && expect == 1) {
                                 // n may itself be prime
                                 bool prime = true;
                                 for (long q = 2; q * q <= n; ++q)
                                     if (n % q == 0) prime = false;
                                 if (prime) expect = n;
                             }
                             if (nontriviality_index(i) != expect)
                                 return "mismatch at i=" + std::to_string(i);
                         }
                         return std::nullopt;
                     }});
    cases.push_back({"coeffs/dualint-axioms", [opts]() -> std::optional<std::string> {
                         std::mt19937_64 rng(opts.seed);
                         std::uniform_int_distribution<long> d(-1000, 1000);
                         for (int t = 0; t < 500; ++t) {
                             DualInt a{d(rng), d(rng), 2}, b{d(rng), d(rng), 2},
                                 c{d(rng), d(rng), 2};
                             if (!(a * b == b * a)) return "commutativity";
                             if (!((a * b) * c == a * (b * c))) return "associativity";
                             if (!(a * (b + c) == a * b + a * c)) return "distributivity";
                             if (!(DualInt::one(2) * a == a)) return "identity";
                             DualInt pa{0, a.b, 2}, pb{0, b.b, 2};
                             if (!(pa * pb == DualInt::zero(2))) return "al^2 != 0";
                         }
                         return std::nullopt;
                     }});
}

// --------------------------------------------------------------- poly

void suite_poly(std::vector<Case>& cases, const VerifyOptions& opts) {
    cases.push_back({"poly/ring-axioms", [opts]() -> std::optional<std::string> {
                         std::mt19937_64 rng(opts.seed + 1);
                         for (int t = 0; t < 60; ++t) {
                             GradedPoly a = random_poly(rng, 1), b = random_poly(rng, 1),
                                        c = random_poly(rng, 1);
                             if (!(a * b == b * a)) return "commutativity";
                             if (!((a * b) * c == a * (b * c))) return "associativity";
                             if (!(a * (b + c) == a * b + a * c)) return "distributivity";
                         }
                         return std::nullopt;
                     }});
    cases.push_back({"poly/text-roundtrip", [opts]() -> std::optional<std::string> {
                         std::mt19937_64 rng(opts.seed + 2);
                         for (int t = 0; t < 200; ++t) {
                             GradedPoly p = random_poly(rng, 2);
                             if (!(parse_poly(p.text(), 2) == p))
                                 return "roundtrip failed for " + p.text();
                         }
                         // Laurent exponents and mixed coefficients
                         GradedPoly q(1);
                         q.add_term({{var_t(1), -3}, {var_t(2), 2}}, DualInt{4, -7, 1});
                         q.add_term({{var_xi(), -1}}, DualInt{0, 1, 1});
                         q.add_term({}, DualInt{-2, 0, 1});
                         if (!(parse_poly(q.text(), 1) == q))
                             return "roundtrip failed for " + q.text();
                         return std::nullopt;
                     }});
    cases.push_back({"poly/json-roundtrip", [opts]() -> std::optional<std::string> {
                         std::mt19937_64 rng(opts.seed + 3);
                         for (int t = 0; t < 100; ++t) {
                             GradedPoly p = random_poly(rng, 2);
                             if (!(poly_from_json(to_json(p)) == p)) return "json roundtrip";
                         }
                         return std::nullopt;
                     }});
    cases.push_back({"poly/series-inverse", []() -> std::optional<std::string> {
                         int m = 1;
                         VarId t = var_t(0);
                         GradedPoly p = GradedPoly::constant(m, 1) -
                                        GradedPoly::variable(m, var_x(1)) *
                                            GradedPoly::variable(m, t);
                         GradedPoly inv = series_inverse(p, t, 6);
                         GradedPoly prod = p * inv;
                         for (int k = 0; k <= 6; ++k) {
                             GradedPoly ck = prod.coefficient_of(t, k);
                             GradedPoly want =
                                 k == 0 ? GradedPoly::constant(m, 1) : GradedPoly(m);
                             if (!(ck == want)) return "p * inv(p) != 1 mod t^7";
                         }
                         return std::nullopt;
                     }});
}

// --------------------------------------------------------------- fgl

void suite_fgl(std::vector<Case>& cases, const VerifyOptions& opts) {
    int max_m = opts.max_m ? opts.max_m : 4;
    for (int m = 1; m <= max_m; ++m)
        cases.push_back({"fgl/axioms-m" + std::to_string(m), [m]() -> std::optional<std::string> {
                             FglAxiomReport rep = verify_fgl_axioms(m);  // build cross-checks too
                             if (!rep.unit_residual.is_zero())
                                 return "unit residual " + rep.unit_residual.text();
                             if (!rep.comm_residual.is_zero())
                                 return "commutativity residual " + rep.comm_residual.text();
                             if (!rep.assoc_residual.is_zero())
                                 return "associativity residual " + rep.assoc_residual.text();
                             FormalGroupLaw fgl = build_fgl(m);
                             fgl_inverse(fgl);  // throws when sum(u,-u) != 0
                             Homogeneity h = fgl.sum.homogeneity();
                             if (h.kind != Homogeneity::Homogeneous || h.degree != 1)
                                 return "law not homogeneous of degree 1";
                             return std::nullopt;
                         }});
}

// --------------------------------------------------------------- symfn

void suite_symfn(std::vector<Case>& cases, const VerifyOptions& opts) {
    for (int nv = 1; nv <= 4; ++nv)
        cases.push_back(
            {"symfn/newton-" + std::to_string(nv) + "vars", [nv]() -> std::optional<std::string> {
                 NewtonReport rep = newton_identity_residuals(8, x_roots(1, nv), 1);
                 if (!rep.ok()) return "newton identity residual nonzero";
                 return std::nullopt;
             }});
    cases.push_back({"symfn/eh-duality", []() -> std::optional<std::string> {
                         int m = 1;
                         for (int e = 1; e <= 4; ++e) {
                             Roots roots = x_roots(m, e);
                             if (e >= 2) roots[1] = -roots[1];  // a negated root too
                             for (int k = 1; k <= 6; ++k) {
                                 GradedPoly acc(m);
                                 for (int i = 0; i <= k; ++i)
                                     acc += elem_sym(i, roots, m) *
                                            complete_sym(k - i, roots, m) *
                                            Int(i % 2 == 0 ? 1 : -1);
                                 if (!acc.is_zero()) return "e/h duality fails";
                             }
                         }
                         return std::nullopt;
                     }});
    cases.push_back({"symfn/vps-two-path", [opts]() -> std::optional<std::string> {
                         std::mt19937_64 rng(opts.seed + 4);
                         std::uniform_int_distribution<int> size(0, 3);
                         for (int t = 0; t < 10; ++t) {
                             int e = size(rng), f = size(rng);
                             VirtualBundle vb{x_roots(1, e), y_roots(1, f), 1};
                             for (int k = 1; k <= 6; ++k)
                                 virtual_power_sum_checked(k, vb);  // throws on mismatch
                         }
                         return std::nullopt;
                     }});
    cases.push_back({"symfn/dual-involution", []() -> std::optional<std::string> {
                         VirtualBundle vb{x_roots(1, 3), y_roots(1, 2), 1};
                         VirtualBundle dd = vb.dual().dual();
                         for (size_t i = 0; i < vb.pos.size(); ++i)
                             if (!(dd.pos[i] == vb.pos[i])) return "dual not involutive";
                         for (size_t i = 0; i < vb.neg.size(); ++i)
                             if (!(dd.neg[i] == vb.neg[i])) return "dual not involutive";
                         return std::nullopt;
                     }});
}

// --------------------------------------------------------------- segre

void suite_segre(std::vector<Case>& cases, const VerifyOptions& opts) {
    int max_m = opts.max_m ? opts.max_m : 3;
    for (int m = 1; m <= max_m; ++m)
        for (int e = 1; e <= 4; ++e) {
            cases.push_back({"segre/two-path-e" + std::to_string(e) + "-m" + std::to_string(m),
                             [e, m]() -> std::optional<std::string> {
                                 SegreContext ctx(m);
                                 Roots roots = x_roots(m, e);
                                 for (int k = -2 * m; k <= 5; ++k) {
                                     GradedPoly a = segre_formula(k, roots, ctx);
                                     GradedPoly b = segre_vishik_stabilized(k, roots, ctx);
                                     if (auto err = expect_eq(a, b, "k=" + std::to_string(k)))
                                         return err;
                                     if (!(a.alpha0_part() ==
                                           complete_sym(k, roots, m).alpha0_part()))
                                         return std::string("alpha0 part is not h_k");
                                     Homogeneity h = a.homogeneity();
                                     if (h.kind == Homogeneity::Homogeneous && h.degree != k)
                                         return std::string("S_k not homogeneous of degree k");
                                     if (h.kind == Homogeneity::Inhomogeneous)
                                         return std::string("S_k inhomogeneous");
                                 }
                                 return std::nullopt;
                             }});
            cases.push_back({"segre/stability-e" + std::to_string(e) + "-m" + std::to_string(m),
                             [e, m]() -> std::optional<std::string> {
                                 SegreContext ctx(m);
                                 Roots roots = x_roots(m, e);
                                 Roots padded = roots;
                                 padded.push_back(GradedPoly(m));  // a zero root
                                 for (int k = -2 * m; k <= 5; ++k)
                                     if (auto err = expect_eq(segre_formula(k, padded, ctx),
                                                              segre_formula(k, roots, ctx),
                                                              "k=" + std::to_string(k)))
                                         return err;
                                 return std::nullopt;
                             }});
        }
    for (int m = 1; m <= std::min(max_m, 2); ++m)
        for (int e = 1; e <= 4; ++e)
            cases.push_back({"segre/prop-r-e" + std::to_string(e) + "-m" + std::to_string(m),
                             [e, m]() -> std::optional<std::string> {
                                 SegreContext ctx(m);
                                 Roots roots = x_roots(m, e);
                                 // R_i = sum_q (-1)^q c_q S_{i-q}; compare with
                                 // 1 - al sum_{i=1}^{2m} (-1)^i gamma_{2m-i} p_{2m-i} t^{-i}
                                 for (int i = -2 * m - 3; i <= e + 2 * m + 3; ++i) {
                                     GradedPoly ri(m);
                                     for (int q = 0; q <= e; ++q) {
                                         GradedPoly cq = elem_sym(q, roots, m);
                                         if (cq.is_zero()) continue;
                                         cq *= Int(q % 2 == 0 ? 1 : -1);
                                         ri += cq * segre_formula(i - q, roots, ctx);
                                     }
                                     GradedPoly want(m);
                                     if (i == 0) want = GradedPoly::constant(m, 1);
                                     if (i >= -2 * m && i <= -1) {
                                         int ii = -i;
                                         want = GradedPoly::alpha(m) *
                                                power_sum(2 * m - ii, roots, m) *
                                                (ctx.gamma.at(2 * m - ii) *
                                                 Int(ii % 2 == 0 ? -1 : 1));
                                     }
                                     if (auto err =
                                             expect_eq(ri, want, "R at i=" + std::to_string(i)))
                                         return err;
                                 }
                                 return std::nullopt;
                             }});
    for (int m = 1; m <= std::min(max_m, 2); ++m)
        for (int e = 1; e <= 3; ++e)
            for (int f = 0; f <= 3; ++f)
                cases.push_back(
                    {"segre/push-contract-e" + std::to_string(e) + "-f" + std::to_string(f) +
                         "-m" + std::to_string(m),
                     [e, f, m]() -> std::optional<std::string> {
                         SegreContext ctx(m);
                         Roots eroots = x_roots(m, e), froots = y_roots(m, f);
                         for (int s = 0; s <= 3; ++s) {
                             GradedPoly lhs = push_twisted_top(s, eroots, froots, ctx);
                             GradedPoly rhs =
                                 segre_virtual(s + f - e + 1, eroots, froots, ctx);
                             if (auto err = expect_eq(lhs, rhs, "s=" + std::to_string(s)))
                                 return err;
                             Homogeneity h = rhs.homogeneity();
                             if (h.kind == Homogeneity::Homogeneous &&
                                 h.degree != s + f - e + 1)
                                 return std::string("S_k(E-F) has the wrong degree");
                         }
                         return std::nullopt;
                     }});
}

// --------------------------------------------------------------- kernels

void suite_kernels(std::vector<Case>& cases, const VerifyOptions& opts) {
    int max_m = opts.max_m ? opts.max_m : 3;
    for (int m = 1; m <= max_m; ++m)
        for (int r = 1; r <= 4; ++r)
            cases.push_back(
                {"kernels/vandermonde-r" + std::to_string(r) + "-m" + std::to_string(m),
                 [r, m]() -> std::optional<std::string> {
                     for (const auto& lambda : partitions_in_box(r, 4)) {
                         if (static_cast<int>(lambda.size()) != r) continue;
                         GradedPoly res = vandermonde_identity_residual(lambda, m);
                         if (!res.is_zero()) return "residual nonzero for a partition";
                         ConeSeries ker = kernel_A(lambda, m);
                         Homogeneity h = ker.poly.homogeneity();
                         long want = 0;
                         for (int p : lambda) want += p;
                         if (h.kind != Homogeneity::Homogeneous || h.degree != want)
                             return "kernel not homogeneous of degree |lambda|";
                         cone_shift(ker);  // must exist
                     }
                     return std::nullopt;
                 }});
    for (int m = 1; m <= std::min(max_m, 2); ++m) {
        for (int r = 1; r <= 4; ++r)
            cases.push_back(
                {"kernels/typeC-tlevel-r" + std::to_string(r) + "-m" + std::to_string(m),
                 [r, m]() -> std::optional<std::string> {
                     for (const auto& lambda : strict_partitions(5)) {
                         if (static_cast<int>(lambda.size()) != r) continue;
                         std::vector<int> sups;
                         std::vector<SymbolRow> rows;
                         for (int p : lambda) {
                             sups.push_back(p - 1);
                             rows.emplace_back(p - 1, p);
                         }
                         ClassPoly lhs = phi(kernel_C(lambda, m), SymbolKind::C, sups, 0);
                         ClassPoly rhs = multischur_pf_corrected(rows, m);
                         if (auto err = expect_eq(lhs, rhs, "t-level identity")) return err;
                     }
                     return std::nullopt;
                 }});
        for (int r = 1; r <= 3; ++r)
            cases.push_back(
                {"kernels/kernelC-margin-r" + std::to_string(r) + "-m" + std::to_string(m),
                 [r, m]() -> std::optional<std::string> {
                     for (const auto& lambda : strict_partitions(4)) {
                         if (static_cast<int>(lambda.size()) != r) continue;
                         std::vector<int> sups;
                         for (int p : lambda) sups.push_back(p - 1);
                         ClassPoly a = phi(kernel_C(lambda, m, 0), SymbolKind::C, sups, 0);
                         ClassPoly b = phi(kernel_C(lambda, m, 2), SymbolKind::C, sups, 0);
                         if (auto err = expect_eq(a, b, "margin stability")) return err;
                     }
                     return std::nullopt;
                 }});
        cases.push_back({"kernels/pf-recursion-m" + std::to_string(m),
                         [m]() -> std::optional<std::string> {
                             std::vector<std::vector<SymbolRow>> tests = {
                                 {{3, 4}, {2, 3}},
                                 {{4, 5}, {2, 2}},
                                 {{3, 4}, {2, 3}, {1, 2}, {0, 1}},
                                 {{4, 5}, {3, 3}, {1, 2}, {0, 1}},
                             };
                             for (const auto& rows : tests)
                                 if (auto err = expect_eq(multischur_pf(rows, m),
                                                          multischur_pf_recursion(rows, m),
                                                          "pfaffian recursion"))
                                     return err;
                             return std::nullopt;
                         }});
    }
    cases.push_back({"kernels/phi-module", [opts]() -> std::optional<std::string> {
                         // phi(g(t_1) f) = g(tau_1) phi(f) over the tau prefix
                         std::mt19937_64 rng(opts.seed + 5);
                         std::uniform_int_distribution<int> c(-4, 4), e(0, 3);
                         int m = 1;
                         for (int t = 0; t < 20; ++t) {
                             GradedPoly g(m);
                             for (int i = 0; i < 3; ++i) {
                                 Monomial mon;
                                 int ex = e(rng);
                                 if (ex > 0) mon.emplace_back(var_t(1), ex);
                                 g.add_term(mon, DualInt{c(rng), c(rng), m});
                             }
                             GradedPoly f(m);
                             f.add_term({{var_t(2), 2}, {var_t(3), -1}}, DualInt::one(m));
                             f.add_term({{var_t(2), 1}}, DualInt{0, 1, m});
                             ConeSeries gf(3, g * f);
                             ClassPoly lhs = phi(gf, SymbolKind::A, {5, 4}, 1);
                             GradedPoly g_tau(m);
                             for (const auto& [mon, cc] : g.terms()) {
                                 Monomial tm;
                                 for (const auto& [v, ex] : mon)
                                     tm.emplace_back(var_tau(1), ex);
                                 g_tau.add_term(tm, cc);
                             }
                             ClassPoly rhs = ClassPoly::from_tau_poly(g_tau) *
                                             phi(ConeSeries(3, f), SymbolKind::A, {5, 4}, 1);
                             if (auto err = expect_eq(lhs, rhs, "phi module structure"))
                                 return err;
                         }
                         return std::nullopt;
                     }});
    cases.push_back({"kernels/jacobi-trudi", []() -> std::optional<std::string> {
                         // alpha = 0: Det[h_2 h_1] over one family equals the
                         // Schur polynomial s_(2,1) on explicit roots
                         int m = 1;
                         ClassPoly det =
                             multischur_det(SymbolKind::A, {{0, 2}, {0, 1}}, m).alpha0_part();
                         // substitute A[0;s] -> h_s(x_1..x_3)
                         GradedPoly value(m);
                         Roots roots = x_roots(m, 3);
                         for (const auto& [mon, c] : det.terms()) {
                             GradedPoly term = GradedPoly::constant(c);
                             for (const auto& sym : mon.syms)
                                 term *= complete_sym(sym.idx, roots, m);
                             value += term;
                         }
                         // SSYT expansion of s_(2,1) in three variables
                         GradedPoly want(m);
                         auto add = [&](int e1, int e2, int e3, long k) {
                             Monomial mon;
                             if (e1) mon.emplace_back(var_x(1), e1);
                             if (e2) mon.emplace_back(var_x(2), e2);
                             if (e3) mon.emplace_back(var_x(3), e3);
                             want.add_term(mon, DualInt::integer(k, m));
                         };
                         add(2, 1, 0, 1);
                         add(2, 0, 1, 1);
                         add(1, 2, 0, 1);
                         add(0, 2, 1, 1);
                         add(1, 0, 2, 1);
                         add(0, 1, 2, 1);
                         add(1, 1, 1, 2);
                         return expect_eq(value, want, "jacobi-trudi");
                     }});
}

// --------------------------------------------------------------- kl

void suite_kl(std::vector<Case>& cases, const VerifyOptions& opts) {
    int max_m = opts.max_m ? opts.max_m : 2;
    for (int m = 1; m <= max_m; ++m) {
        for (int d = 1; d <= 2; ++d)
            for (int n = d + 1; n <= 4; ++n)
                cases.push_back({"kl/A-two-path-d" + std::to_string(d) + "-n" +
                                     std::to_string(n) + "-m" + std::to_string(m),
                                 [d, n, m]() -> std::optional<std::string> {
                                     for (const auto& lambda : partitions_in_box(d, n - d)) {
                                         GrassmannSetup setup(n, d, m, lambda);
                                         ClassPoly a = kl_A_closed(setup);
                                         ClassPoly b = kl_A_iterated(setup);
                                         if (auto err = expect_eq(a, b, "two-path")) return err;
                                         long want = 0;
                                         for (int p : lambda) want += p;
                                         Homogeneity h = a.homogeneity();
                                         if (h.kind != Homogeneity::Homogeneous ||
                                             h.degree != want)
                                             return std::string("kappa not homogeneous");
                                     }
                                     return std::nullopt;
                                 }});
        for (int n = 1; n <= 3; ++n)
            cases.push_back(
                {"kl/C-two-path-n" + std::to_string(n) + "-m" + std::to_string(m),
                 [n, m]() -> std::optional<std::string> {
                     for (const auto& lambda : strict_partitions(n)) {
                         LagrangianSetup setup(n, m, lambda);
                         ClassPoly a = kl_C_closed(setup);
                         ClassPoly b = kl_C_iterated(setup);
                         if (auto err = expect_eq(a, b, "two-path")) return err;
                         long want = 0;
                         for (int p : lambda) want += p;
                         Homogeneity h = a.homogeneity();
                         if (h.kind != Homogeneity::Homogeneous || h.degree != want)
                             return std::string("kappa^C not homogeneous");
                     }
                     return std::nullopt;
                 }});
        cases.push_back({"kl/A-specialized-d3-n5-m" + std::to_string(m),
                         [m]() -> std::optional<std::string> {
                             std::vector<std::vector<int>> sample = {
                                 {1}, {2, 1}, {2, 2, 1}, {1, 1, 1}};
                             for (const auto& lambda : sample) {
                                 GrassmannSetup setup(5, 3, m, lambda);
                                 GradedPoly a = specialize_split(kl_A_closed(setup), setup);
                                 GradedPoly b = specialize_split(kl_A_iterated(setup), setup);
                                 if (auto err = expect_eq(a, b, "specialized two-path"))
                                     return err;
                             }
                             return std::nullopt;
                         }});
        cases.push_back({"kl/C-specialized-n2-m" + std::to_string(m),
                         [m]() -> std::optional<std::string> {
                             for (const auto& lambda : strict_partitions(2)) {
                                 LagrangianSetup setup(2, m, lambda);
                                 GradedPoly a = specialize_split(kl_C_closed(setup), setup);
                                 GradedPoly b = specialize_split(kl_C_iterated(setup), setup);
                                 if (auto err = expect_eq(a, b, "specialized two-path"))
                                     return err;
                             }
                             return std::nullopt;
                         }});
    }
    cases.push_back({"kl/alpha0-reduction", []() -> std::optional<std::string> {
                         GrassmannSetup setup(4, 2, 1, {2, 1});
                         std::vector<SymbolRow> rows;
                         for (int i = 0; i < setup.r(); ++i)
                             rows.emplace_back(setup.k(i), setup.lambda[size_t(i)]);
                         ClassPoly det = multischur_det(SymbolKind::A, rows, 1);
                         if (auto err = expect_eq(kl_A_closed(setup).alpha0_part(), det,
                                                  "A alpha0 reduction"))
                             return err;
                         LagrangianSetup lag(3, 1, {2, 1});
                         ClassPoly pf = multischur_pf({{1, 2}, {0, 1}}, 1).alpha0_part();
                         if (auto err = expect_eq(kl_C_closed(lag).alpha0_part(), pf,
                                                  "C alpha0 reduction"))
                             return err;
                         return std::nullopt;
                     }});
    cases.push_back({"kl/zero-parts", []() -> std::optional<std::string> {
                         GrassmannSetup a(4, 2, 1, {2, 1});
                         GrassmannSetup b(4, 2, 1, {2, 1, 0, 0});
                         return expect_eq(kl_A_closed(a), kl_A_closed(b), "zero parts");
                     }});
    cases.push_back({"kl/specialize-symmetry", []() -> std::optional<std::string> {
                         GrassmannSetup setup(4, 2, 1, {2, 1});
                         GradedPoly p = specialize_split(kl_A_closed(setup), setup);
                         GradedPoly swapped = p.substitute(
                             {{var_x(1), GradedPoly::variable(1, var_x(2))},
                              {var_x(2), GradedPoly::variable(1, var_x(1))}});
                         if (auto err = expect_eq(p, swapped, "x symmetry")) return err;
                         // each symbol value is symmetric in its own y prefix
                         SegreContext ctx(1);
                         Roots xdual = {-GradedPoly::variable(1, var_x(1)),
                                        -GradedPoly::variable(1, var_x(2))};
                         Roots ydual = {-GradedPoly::variable(1, var_y(1)),
                                        -GradedPoly::variable(1, var_y(2))};
                         GradedPoly v = segre_virtual(2, xdual, ydual, ctx);
                         GradedPoly vs = v.substitute(
                             {{var_y(1), GradedPoly::variable(1, var_y(2))},
                              {var_y(2), GradedPoly::variable(1, var_y(1))}});
                         return expect_eq(v, vs, "y symmetry");
                     }});
}

std::vector<Case> build_cases(const std::string& name, const VerifyOptions& opts) {
    std::vector<Case> cases;
    bool all = name == "all";
    bool known = all;
    if (all || name == "coeffs") suite_coeffs(cases, opts), known = true;
    if (all || name == "poly") suite_poly(cases, opts), known = true;
    if (all || name == "fgl") suite_fgl(cases, opts), known = true;
    if (all || name == "symfn") suite_symfn(cases, opts), known = true;
    if (all || name == "segre") suite_segre(cases, opts), known = true;
    if (all || name == "kernels") suite_kernels(cases, opts), known = true;
    if (all || name == "kl") suite_kl(cases, opts), known = true;
    if (!known) throw InvalidInput("unknown suite '" + name + "'");
    return cases;
}

}  // namespace

int SuiteReport::failures() const {
    int n = 0;
    for (const auto& r : results)
        if (!r.passed) ++n;
    return n;
}

std::vector<std::string> suite_names() {
    return {"coeffs", "poly", "fgl", "symfn", "segre", "kernels", "kl"};
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opts) {
    std::vector<Case> cases = build_cases(name, opts);
    SuiteReport report;
    report.suite = name;
    report.results.resize(cases.size());

    int workers = opts.workers;
    if (workers <= 0) {
        if (const char* env = std::getenv("KAPPA_WORKERS")) workers = std::atoi(env);
        if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
        if (workers <= 0) workers = 1;
    }
    workers = std::min<int>(workers, static_cast<int>(cases.size()));
    workers = std::max(workers, 1);

    auto t0 = std::chrono::steady_clock::now();
    std::atomic<size_t> next{0};
    std::mutex out_mutex;
    auto run_one = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= cases.size()) return;
            auto c0 = std::chrono::steady_clock::now();
            CaseResult res;
            res.id = cases[i].id;
            try {
                auto failure = cases[i].fn();
                res.passed = !failure.has_value();
                if (failure) res.detail = *failure;
            } catch (const std::exception& e) {
                res.passed = false;
                res.detail = std::string("exception: ") + e.what();
            }
            res.ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - c0)
                         .count();
            if (opts.stream) {
                std::lock_guard<std::mutex> lock(out_mutex);
                (*opts.stream) << (res.passed ? "ok   " : "FAIL ") << res.id;
                if (!res.passed) (*opts.stream) << "  [" << res.detail << "]";
                (*opts.stream) << "  (" << static_cast<long>(res.ms) << " ms)" << std::endl;
            }
            report.results[i] = std::move(res);
        }
    };
    if (workers == 1) {
        run_one();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run_one);
        for (auto& th : pool) th.join();
    }
    report.total_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::sort(report.results.begin(), report.results.end(),
              [](const CaseResult& a, const CaseResult& b) { return a.id < b.id; });
    return report;
}

}  // namespace kappa
