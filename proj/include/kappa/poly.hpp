#pragma once

#include "kappa/coeffs.hpp"

#include <compare>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kappa {

/// Variable families, in global order. x, y, tau exponents must stay
/// nonnegative; t and xi may go negative (Laurent).
enum class Family : unsigned char { X, Y, T, Tau, U, V, Xi };

struct VarId {
    Family family = Family::X;
    int index = 0;

    friend auto operator<=>(const VarId&, const VarId&) = default;
};

bool family_allows_negative(Family f);
std::string var_name(VarId v);

inline VarId var_x(int i) { return {Family::X, i}; }
inline VarId var_y(int i) { return {Family::Y, i}; }
inline VarId var_t(int i) { return {Family::T, i}; }
inline VarId var_tau(int i) { return {Family::Tau, i}; }
inline VarId var_u() { return {Family::U, 0}; }
inline VarId var_v() { return {Family::V, 0}; }
inline VarId var_xi() { return {Family::Xi, 0}; }

/// Sorted (variable, exponent) pairs, exponents nonzero.
using Monomial = std::vector<std::pair<VarId, int>>;

long mon_degree(const Monomial& mon);
Monomial mon_mul(const Monomial& x, const Monomial& y);

/// Graded-lexicographic order: total degree first, then the first variable
/// (in global order) whose exponents differ, smaller exponent first.
struct GrlexLess {
    bool operator()(const Monomial& x, const Monomial& y) const;
};

struct Homogeneity {
    enum Kind { Zero, Homogeneous, Inhomogeneous } kind = Zero;
    long degree = 0;  // meaningful only when Homogeneous
};

/// Exact multivariate Laurent polynomial over Z[al]/(al^2). Terms map from
/// canonical monomials to coefficients; no zero coefficient is ever stored.
class GradedPoly {
public:
    using TermMap = std::map<Monomial, DualInt, GrlexLess>;

    explicit GradedPoly(int m) : m_(m) {}

    static GradedPoly constant(const DualInt& c);
    static GradedPoly constant(int m, long value);
    static GradedPoly alpha(int m) { return constant(DualInt::alpha(m)); }
    static GradedPoly variable(int m, VarId v, int exp = 1);

    int m() const { return m_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& mon, const DualInt& c);
    DualInt coeff(const Monomial& mon) const;

    GradedPoly& operator+=(const GradedPoly& o);
    GradedPoly& operator-=(const GradedPoly& o);
    GradedPoly operator-() const;
    friend GradedPoly operator+(GradedPoly x, const GradedPoly& y) { return x += y; }
    friend GradedPoly operator-(GradedPoly x, const GradedPoly& y) { return x -= y; }
    friend GradedPoly operator*(const GradedPoly& x, const GradedPoly& y);
    GradedPoly& operator*=(const GradedPoly& o) { return *this = *this * o; }
    GradedPoly& operator*=(const DualInt& c);
    GradedPoly& operator*=(const Int& k);
    friend GradedPoly operator*(GradedPoly x, const Int& k) { return x *= k; }
    friend GradedPoly operator*(const Int& k, GradedPoly x) { return x *= k; }
    friend GradedPoly operator*(GradedPoly x, const DualInt& c) { return x *= c; }
    friend GradedPoly operator*(const DualInt& c, GradedPoly x) { return x *= c; }
    GradedPoly pow(int e) const;

    friend bool operator==(const GradedPoly& x, const GradedPoly& y) {
        return x.m_ == y.m_ && x.terms_ == y.terms_;
    }

    /// Simultaneous substitution. Substituted variables must occur with
    /// nonnegative exponents; images may be arbitrary polynomials.
    GradedPoly substitute(const std::vector<std::pair<VarId, GradedPoly>>& assignment) const;
    GradedPoly substitute(VarId v, const GradedPoly& image) const;

    /// Coefficient of v^k, as a polynomial not involving v.
    GradedPoly coefficient_of(VarId v, int k) const;
    int min_exponent(VarId v) const;  // 0 when v absent
    int max_exponent(VarId v) const;
    bool involves(VarId v) const;
    bool involves_family(Family f) const;

    /// Drops al: keeps the a-part of every coefficient.
    GradedPoly alpha0_part() const;

    Homogeneity homogeneity() const;

    std::string text() const;

private:
    int m_;
    TermMap terms_;
};

/// Inverse of p as a power series in var, truncated at var^order.
/// The var^0 coefficient must be 1 + al*g (a unit); the inverse of such a
/// unit is 1 - al*g since al^2 = 0.
GradedPoly series_inverse(const GradedPoly& p, VarId var, int order);

/// Parses the canonical text form produced by GradedPoly::text().
GradedPoly parse_poly(const std::string& text, int m);

}  // namespace kappa
