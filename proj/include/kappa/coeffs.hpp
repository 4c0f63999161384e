#pragma once

#include "kappa/common.hpp"

#include <iosfwd>
#include <vector>

namespace kappa {

/// Element a + b*al of Z[al]/(al^2), graded with deg al = -2m.
///
/// The half-degree parameter m travels with every value so that sweeps over
/// several theories can coexist in one process; combining values with
/// different m throws MixedMError.
struct DualInt {
    Int a;
    Int b;
    int m = 1;

    DualInt() = default;
    DualInt(Int a_, Int b_, int m_) : a(std::move(a_)), b(std::move(b_)), m(m_) {}

    static DualInt zero(int m) { return DualInt{0, 0, m}; }
    static DualInt one(int m) { return DualInt{1, 0, m}; }
    static DualInt integer(Int v, int m) { return DualInt{std::move(v), 0, m}; }
    static DualInt alpha(int m) { return DualInt{0, 1, m}; }

    bool is_zero() const { return a == 0 && b == 0; }
    bool pure_a() const { return b == 0; }
    bool pure_alpha() const { return a == 0; }

    DualInt operator-() const { return DualInt{-a, -b, m}; }
    DualInt& operator+=(const DualInt& o);
    DualInt& operator-=(const DualInt& o);
    // (a1 + b1 al)(a2 + b2 al) = a1 a2 + (a1 b2 + a2 b1) al, al^2 = 0.
    DualInt& operator*=(const DualInt& o);
    DualInt& operator*=(const Int& k);

    friend DualInt operator+(DualInt x, const DualInt& y) { return x += y; }
    friend DualInt operator-(DualInt x, const DualInt& y) { return x -= y; }
    friend DualInt operator*(DualInt x, const DualInt& y) { return x *= y; }
    friend DualInt operator*(DualInt x, const Int& k) { return x *= k; }
    friend DualInt operator*(const Int& k, DualInt x) { return x *= k; }

    friend bool operator==(const DualInt& x, const DualInt& y) {
        return x.m == y.m && x.a == y.a && x.b == y.b;
    }

    friend std::ostream& operator<<(std::ostream& os, const DualInt& x);
};

void require_same_m(int m1, int m2, const char* where);

/// The arithmetic constants of Q_{2m}: d = d_{2m} and the list
/// gamma[l] = gamma_l for l = 0 .. 2m-1, with gamma_l = (C(2m,l) - (-1)^l)/d
/// for l >= 1 and gamma_0 = (2m+1)/d. Every division is checked exact.
struct GammaTable {
    int m = 0;
    Int d;
    std::vector<Int> gamma;

    const Int& at(int l) const;
};

/// Returns p when i+1 = p^e for a prime p, and 1 otherwise.
long nontriviality_index(long i);

/// Builds (and caches) the gamma table for Q_{2m}. Asserts exact
/// divisibility of every entry and the alternating-sum identity
/// sum_{l=0}^{2m-1} (-1)^l gamma_l = 0.
const GammaTable& gamma_table(int m);

}  // namespace kappa
