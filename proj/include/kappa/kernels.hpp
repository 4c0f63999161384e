#pragma once

#include "kappa/poly.hpp"

#include <iosfwd>

namespace kappa {

/// A degree-homogeneous Laurent polynomial in t_1..t_r whose shifted support
/// sits in the cone s_1 >= 0, s_1+s_2 >= 0, ..., s_1+...+s_r >= 0 (finite
/// truncation of the cone Laurent series module).
struct ConeSeries {
    int r = 0;
    GradedPoly poly;

    ConeSeries(int r_, GradedPoly p) : r(r_), poly(std::move(p)) {}
};

/// A shift witness m with m + supp(f) inside the cone.
std::vector<int> cone_shift(const ConeSeries& f);

enum class SymbolKind : char { A = 'A', C = 'C' };

/// Inert class symbol A[sup; idx] or C[sup; idx]. The only relation imposed
/// anywhere is index-vanishing: idx < -2m is the zero class.
struct ClassSymbol {
    SymbolKind kind = SymbolKind::A;
    int sup = 0;
    int idx = 0;

    friend bool operator==(const ClassSymbol&, const ClassSymbol&) = default;
    // superscripts sort descending, matching the row order of determinants
    friend bool operator<(const ClassSymbol& x, const ClassSymbol& y) {
        if (x.kind != y.kind) return x.kind < y.kind;
        if (x.sup != y.sup) return x.sup > y.sup;
        return x.idx < y.idx;
    }
};

struct ClassMonomial {
    std::vector<ClassSymbol> syms;            // sorted
    std::vector<std::pair<int, int>> taus;    // (tau index, exponent>0), sorted

    friend bool operator==(const ClassMonomial&, const ClassMonomial&) = default;
    friend bool operator<(const ClassMonomial& x, const ClassMonomial& y);
    long degree() const;  // sum of symbol indices plus tau degree
};

/// Polynomial in inert class symbols and tau variables over Z[al]/(al^2);
/// the codomain of phi before split specialization.
class ClassPoly {
public:
    using TermMap = std::map<ClassMonomial, DualInt>;

    explicit ClassPoly(int m) : m_(m) {}

    static ClassPoly constant(int m, long value);
    static ClassPoly constant(const DualInt& c);
    /// The symbol as a one-term polynomial; zero when idx < -2m.
    static ClassPoly symbol(int m, SymbolKind kind, int sup, int idx);
    static ClassPoly tau_power(int m, int tau_index, int exp);
    /// Embeds a polynomial in tau variables (no other families allowed).
    static ClassPoly from_tau_poly(const GradedPoly& p);

    int m() const { return m_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const ClassMonomial& mon, const DualInt& c);

    ClassPoly& operator+=(const ClassPoly& o);
    ClassPoly& operator-=(const ClassPoly& o);
    ClassPoly operator-() const;
    friend ClassPoly operator+(ClassPoly x, const ClassPoly& y) { return x += y; }
    friend ClassPoly operator-(ClassPoly x, const ClassPoly& y) { return x -= y; }
    friend ClassPoly operator*(const ClassPoly& x, const ClassPoly& y);
    ClassPoly& operator*=(const ClassPoly& o) { return *this = *this * o; }
    ClassPoly& operator*=(const DualInt& c);
    ClassPoly& operator*=(const Int& k);
    friend ClassPoly operator*(ClassPoly x, const Int& k) { return x *= k; }
    friend ClassPoly operator*(const Int& k, ClassPoly x) { return x *= k; }
    friend ClassPoly operator*(ClassPoly x, const DualInt& c) { return x *= c; }
    friend ClassPoly operator*(const DualInt& c, ClassPoly x) { return x *= c; }

    friend bool operator==(const ClassPoly& x, const ClassPoly& y) {
        return x.m_ == y.m_ && x.terms_ == y.terms_;
    }

    ClassPoly alpha0_part() const;
    bool involves_tau() const;
    Homogeneity homogeneity() const;
    std::string text() const;

private:
    int m_;
    TermMap terms_;
};

/// The type A kernel: prod t_i^{lambda_i} prod_{i<j}(1 - t_i/t_j) *
/// (1 + al sum_{l=-m+1}^{m-1} (-1)^{m+l} gamma_{m+l} sum_{i<j} t_i^{m+l} t_j^{m-l}),
/// a finite Laurent polynomial.
ConeSeries kernel_A(const std::vector<int>& lambda, int m);

/// The type C kernel: prod t_i^{lambda_i} prod_{i<j} (1-t_i/t_j)/(1+t_i/t_j) *
/// (1 - 2 al sum_{q=1}^{m} gamma_{2q-1} sum_{i<j} t_i^{2q-1} t_j^{2m-2q+1}).
/// The pair factors are geometric series; expansion is truncated so that
/// every monomial with all exponents >= -2m - margin is exact, terms below
/// that are dropped.
ConeSeries kernel_C(const std::vector<int>& lambda, int m, int margin = 0);

/// prod t_i^{ell_i} prod_{i<j} (1-t_i/t_j)/(1+t_i/t_j), truncated the same way.
ConeSeries pfaffian_kernel(const std::vector<int>& ell, int m, int margin = 0);

/// The substitution homomorphism: t_j^{s_j} goes to tau_j^{s_j} for
/// j <= prefix_tau (exponents must be nonnegative) and to the class symbol
/// of sups[j - prefix_tau - 1] at index s_j beyond that; symbols with index
/// below -2m vanish. Missing variables substitute at exponent 0 (the index-0
/// class, which is not 1).
ClassPoly phi(const ConeSeries& f, SymbolKind kind, const std::vector<int>& sups,
              int prefix_tau);

using SymbolRow = std::pair<int, int>;  // (superscript, index)

/// det(c^{(i)}_{idx_i + j - i})_{1<=i,j<=r} over the class symbols.
ClassPoly multischur_det(SymbolKind kind, const std::vector<SymbolRow>& rows, int m);

/// The multi-Schur Pfaffian, defined as the phi-image of the expanded kernel
/// prod t^{idx} prod_{i<j} (1-t_i/t_j)/(1+t_i/t_j) with C symbols. Any r >= 1.
ClassPoly multischur_pf(const std::vector<SymbolRow>& rows, int m);

/// Pfaffian volume expansion along the first row, even r:
///   sum_{j=2}^{r} (-1)^j Pf[row_1, row_j] * Pf[remaining rows].
ClassPoly multischur_pf_recursion(const std::vector<SymbolRow>& rows, int m);

/// Determinant plus its al-correction (the closed type A shape):
///   Det[rows] + al sum_l (-1)^{m+l} gamma_{m+l}
///                  sum_{a<b} Det[rows with idx_a += m+l, idx_b += m-l].
ClassPoly multischur_det_corrected(const std::vector<SymbolRow>& rows, int m);

/// Pfaffian plus its al-correction (the closed type C shape):
///   Pf[rows] - 2 al sum_{q=1}^{m} gamma_{2q-1}
///                  sum_{i<j} Pf[rows with idx_i += 2q-1, idx_j += 2m-2q+1].
ClassPoly multischur_pf_corrected(const std::vector<SymbolRow>& rows, int m);

/// Det[t_1^{ell_1} ... t_r^{ell_r}] as a Laurent polynomial in the t's.
GradedPoly det_t(const std::vector<int>& ell, int m);

/// Exact residual of the Vandermonde determinant identity behind the type A
/// theorem: kernel_A(lambda) minus the determinant side, both expanded in t.
GradedPoly vandermonde_identity_residual(const std::vector<int>& lambda, int m);

}  // namespace kappa
