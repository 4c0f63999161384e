#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace kappa {

// All coefficient arithmetic is exact; binomials and determinant expansions
// outgrow 64 bits quickly, so everything integer goes through cpp_int.
using Int = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands built over different coefficient rings Q_{2m}.
struct MixedMError : Error {
    using Error::Error;
};

// An exact integer or polynomial division left a remainder. The quantities
// divided here are divisible by theorem, so this signals a bug.
struct DivisibilityError : Error {
    using Error::Error;
};

// Two independently computed routes to the same value disagreed.
struct SelfCheckError : Error {
    using Error::Error;
};

// Bad user-facing input; the CLI maps this to exit code 2.
struct InvalidInput : Error {
    using Error::Error;
};

Int binomial(long n, long k);

// Quotient a/d, throwing DivisibilityError when d does not divide a.
Int exact_div(const Int& a, const Int& d, const std::string& what);

}  // namespace kappa
