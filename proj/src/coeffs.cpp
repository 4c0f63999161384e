#include "kappa/coeffs.hpp"

#include <map>
#include <mutex>
#include <ostream>

namespace kappa {

void require_same_m(int m1, int m2, const char* where) {
    if (m1 != m2)
        throw MixedMError(std::string(where) + ": operands carry m=" + std::to_string(m1) +
                          " and m=" + std::to_string(m2));
}

DualInt& DualInt::operator+=(const DualInt& o) {
    require_same_m(m, o.m, "DualInt+");
    a += o.a;
    b += o.b;
    return *this;
}

DualInt& DualInt::operator-=(const DualInt& o) {
    require_same_m(m, o.m, "DualInt-");
    a -= o.a;
    b -= o.b;
    return *this;
}

DualInt& DualInt::operator*=(const DualInt& o) {
    require_same_m(m, o.m, "DualInt*");
    b = a * o.b + o.a * b;
    a *= o.a;
    return *this;
}

DualInt& DualInt::operator*=(const Int& k) {
    a *= k;
    b *= k;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const DualInt& x) {
    os << x.a;
    if (x.b != 0) os << (x.b > 0 ? "+" : "") << x.b << "*al";
    return os;
}

long nontriviality_index(long i) {
    if (i < 1) throw InvalidInput("nontriviality_index: i must be >= 1");
    long n = i + 1;
    long p = 0;
    for (long q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            p = q;
            break;
        }
    }
    if (p == 0) return n;  // n itself prime
    while (n % p == 0) n /= p;
    return n == 1 ? p : 1;
}

const Int& GammaTable::at(int l) const {
    if (l < 0 || l >= static_cast<int>(gamma.size()))
        throw InvalidInput("GammaTable: index " + std::to_string(l) + " out of range");
    return gamma[static_cast<size_t>(l)];
}

namespace {

GammaTable build_gamma_table(int m) {
    if (m < 1) throw InvalidInput("gamma_table: m must be >= 1");
    GammaTable t;
    t.m = m;
    t.d = nontriviality_index(2L * m);
    t.gamma.resize(static_cast<size_t>(2 * m));
    t.gamma[0] = exact_div(Int(2 * m + 1), t.d, "gamma_0");
    for (int l = 1; l <= 2 * m - 1; ++l) {
        Int num = binomial(2 * m, l) - (l % 2 == 0 ? 1 : -1);
        t.gamma[static_cast<size_t>(l)] = exact_div(num, t.d, "gamma_" + std::to_string(l));
    }
    Int alt = 0;
    for (int l = 0; l <= 2 * m - 1; ++l)
        alt += (l % 2 == 0 ? 1 : -1) * t.gamma[static_cast<size_t>(l)];
    if (alt != 0)
        throw DivisibilityError("gamma_table: alternating sum nonzero for m=" + std::to_string(m));
    return t;
}

}  // namespace

const GammaTable& gamma_table(int m) {
    static std::mutex mu;
    static std::map<int, GammaTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, build_gamma_table(m)).first;
    return it->second;
}

}  // namespace kappa
