#include "kappa/poly.hpp"

#include <doctest.h>

using namespace kappa;

namespace {

GradedPoly U(int m = 1) { return GradedPoly::variable(m, var_u()); }
GradedPoly V(int m = 1) { return GradedPoly::variable(m, var_v()); }

}  // namespace

TEST_CASE("basic arithmetic") {
    GradedPoly p = (U() + V()).pow(2);
    GradedPoly want(1);
    want.add_term({{var_u(), 2}}, DualInt::one(1));
    want.add_term({{var_u(), 1}, {var_v(), 1}}, DualInt::integer(2, 1));
    want.add_term({{var_v(), 2}}, DualInt::one(1));
    CHECK(p == want);

    CHECK((U() + V()).substitute(var_v(), -U()).is_zero());
    CHECK((GradedPoly::alpha(1) * U() * (GradedPoly::alpha(1) * V())).is_zero());
}

TEST_CASE("mixed m is rejected") {
    CHECK_THROWS_AS(U(1) + U(2), MixedMError);
    CHECK_THROWS_AS(U(1) * U(2), MixedMError);
}

TEST_CASE("laurent exponents only in t and xi") {
    GradedPoly ok(1);
    ok.add_term({{var_t(1), -2}}, DualInt::one(1));
    GradedPoly bad(1);
    CHECK_THROWS_AS(bad.add_term({{var_x(1), -1}}, DualInt::one(1)), InvalidInput);
    CHECK_THROWS_AS(bad.add_term({{var_tau(1), -1}}, DualInt::one(1)), InvalidInput);
}

TEST_CASE("series inverse") {
    int m = 1;
    VarId t = var_t(0);
    GradedPoly x = GradedPoly::variable(m, var_x(1));
    GradedPoly y = GradedPoly::variable(m, var_y(1));
    GradedPoly tp = GradedPoly::variable(m, t);

    GradedPoly inv = series_inverse(GradedPoly::constant(m, 1) - x * tp, t, 3);
    GradedPoly want = GradedPoly::constant(m, 1) + x * tp + x.pow(2) * tp.pow(2) +
                      x.pow(3) * tp.pow(3);
    CHECK(inv == want);

    // (1 + al z)^{-1} = 1 - al z for any monomial z
    GradedPoly z = GradedPoly::variable(m, var_u(), 2);
    GradedPoly unit = GradedPoly::constant(m, 1) + GradedPoly::alpha(m) * z * tp;
    GradedPoly uinv = series_inverse(unit, t, 2);
    CHECK(uinv == GradedPoly::constant(m, 1) - GradedPoly::alpha(m) * z * tp);

    // (1 - y t)/(1 - x t): the t^1 coefficient is x - y
    GradedPoly q = (GradedPoly::constant(m, 1) - y * tp) *
                   series_inverse(GradedPoly::constant(m, 1) - x * tp, t, 3);
    CHECK(q.coefficient_of(t, 1) == x - y);

    CHECK_THROWS_AS(series_inverse(x * tp, t, 2), InvalidInput);
}

TEST_CASE("homogeneity report") {
    int m = 1;
    // x1 x2 + al x1^2 x2^2 x3 x4: degrees 2 and 6-2 = 4, inhomogeneous
    GradedPoly p(m);
    p.add_term({{var_x(1), 1}, {var_x(2), 1}}, DualInt::one(m));
    p.add_term({{var_x(1), 2}, {var_x(2), 2}, {var_x(3), 1}, {var_x(4), 1}}, DualInt{0, 1, m});
    CHECK(p.homogeneity().kind == Homogeneity::Inhomogeneous);

    GradedPoly fgl_like = (U() + V()) * (GradedPoly::constant(m, 1) +
                                         GradedPoly::alpha(m) * U() * V());
    Homogeneity h = fgl_like.homogeneity();
    CHECK(h.kind == Homogeneity::Homogeneous);
    CHECK(h.degree == 1);

    CHECK(GradedPoly(m).homogeneity().kind == Homogeneity::Zero);
}

TEST_CASE("canonical text and parse round trip") {
    int m = 1;
    GradedPoly p = (U() + V()) * (GradedPoly::constant(m, 1) +
                                  GradedPoly::alpha(m) * U() * V());
    CHECK(p.text() == "u+v+al*u^2*v+al*u*v^2");
    CHECK(parse_poly(p.text(), m) == p);

    GradedPoly q(m);
    q.add_term({{var_t(1), -3}, {var_t(2), 2}}, DualInt{4, -7, m});
    q.add_term({{var_x(1), 1}}, DualInt{-1, 0, m});
    q.add_term({}, DualInt{0, -2, m});
    CHECK(parse_poly(q.text(), m) == q);

    CHECK(GradedPoly(m).text() == "0");
    CHECK(parse_poly("0", m).is_zero());

    GradedPoly r(m);
    r.add_term({{var_y(1), 1}}, DualInt::one(m));
    r.add_term({{var_x(1), 1}}, DualInt::integer(-1, m));
    CHECK(r.text() == "-x1+y1");
}

TEST_CASE("coefficient extraction") {
    int m = 2;
    GradedPoly x = GradedPoly::variable(m, var_x(1));
    GradedPoly t = GradedPoly::variable(m, var_t(4));
    GradedPoly p = x * t.pow(2) + GradedPoly::constant(m, 3) * t.pow(2) + x;
    CHECK(p.coefficient_of(var_t(4), 2) == x + GradedPoly::constant(m, 3));
    CHECK(p.coefficient_of(var_t(4), 0) == x);
    CHECK(p.max_exponent(var_t(4)) == 2);
    CHECK(p.min_exponent(var_t(4)) == 0);
}
