#include "kappa/common.hpp"

namespace kappa {

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return r;
}

Int exact_div(const Int& a, const Int& d, const std::string& what) {
    if (d == 0) throw DivisibilityError("division by zero in " + what);
    Int q, r;
    boost::multiprecision::divide_qr(a, d, q, r);
    if (r != 0)
        throw DivisibilityError("non-exact division in " + what + ": " + a.str() + " / " + d.str());
    return q;
}

}  // namespace kappa
