#include "kappa/symfn.hpp"

#include <doctest.h>

using namespace kappa;

namespace {

Roots xs(int e, int m = 1) {
    Roots out;
    for (int i = 1; i <= e; ++i) out.push_back(GradedPoly::variable(m, var_x(i)));
    return out;
}

GradedPoly X(int i, int m = 1) { return GradedPoly::variable(m, var_x(i)); }
GradedPoly Y(int j, int m = 1) { return GradedPoly::variable(m, var_y(j)); }

}  // namespace

TEST_CASE("elementary, complete, power sums") {
    int m = 1;
    Roots r = xs(2);
    CHECK(complete_sym(2, r, m) == X(1).pow(2) + X(1) * X(2) + X(2).pow(2));
    CHECK(elem_sym(3, r, m).is_zero());
    CHECK(power_sum(2, r, m) == X(1).pow(2) + X(2).pow(2));
    CHECK(elem_sym(0, r, m) == GradedPoly::constant(m, 1));
    CHECK(complete_sym(0, r, m) == GradedPoly::constant(m, 1));
    CHECK(power_sum(0, r, m) == GradedPoly::constant(m, 1));
    CHECK(elem_sym(-1, r, m).is_zero());
    CHECK(complete_sym(-2, r, m).is_zero());
    // zero roots leave values unchanged
    Roots padded = r;
    padded.push_back(GradedPoly(m));
    CHECK(complete_sym(3, padded, m) == complete_sym(3, r, m));
}

TEST_CASE("newton identities") {
    int m = 1;
    // k = 2 on two variables: p2 = -2 e2 + p1 e1
    Roots r = xs(2);
    GradedPoly lhs = power_sum(2, r, m);
    GradedPoly rhs = elem_sym(2, r, m) * Int(-2) + power_sum(1, r, m) * elem_sym(1, r, m);
    CHECK(lhs == rhs);

    // k = 3 identity c): p3 = 3 h3 - p1 h2 - p2 h1, three variables
    Roots r3 = xs(3);
    GradedPoly c_lhs = power_sum(3, r3, m);
    GradedPoly c_rhs = complete_sym(3, r3, m) * Int(3) -
                       power_sum(1, r3, m) * complete_sym(2, r3, m) -
                       power_sum(2, r3, m) * complete_sym(1, r3, m);
    CHECK(c_lhs == c_rhs);

    for (int e = 1; e <= 4; ++e) CHECK(newton_identity_residuals(8, xs(e), m).ok());
    // k = 1: all four reduce to p1 = e1 = h1
    NewtonReport rep = newton_identity_residuals(1, xs(3), m);
    CHECK(rep.ok());
}

TEST_CASE("virtual chern classes") {
    int m = 1;
    VirtualBundle v1{{X(1)}, {Y(1)}, m};
    CHECK(virtual_chern(1, v1) == X(1) - Y(1));
    VirtualBundle v0{{X(1)}, {X(1)}, m};
    CHECK(virtual_chern(1, v0).is_zero());

    // c2(E - F) for E = (x1,x2), F = (y): e2 - e1 y + y^2
    VirtualBundle v2{xs(2), {Y(1)}, m};
    GradedPoly want = elem_sym(2, xs(2), m) - elem_sym(1, xs(2), m) * Y(1) + Y(1).pow(2);
    CHECK(virtual_chern(2, v2) == want);

    // genuine bundle: reduces to e_k
    VirtualBundle vplain{xs(3), {}, m};
    for (int k = 0; k <= 4; ++k) CHECK(virtual_chern(k, vplain) == elem_sym(k, xs(3), m));
}

TEST_CASE("virtual power sums") {
    int m = 1;
    VirtualBundle v{{X(1)}, {Y(1)}, m};
    CHECK(virtual_power_sum(1, v) == X(1) - Y(1));
    CHECK(virtual_power_sum(2, v) == X(1).pow(2) - Y(1).pow(2));
    VirtualBundle same{xs(2), xs(2), m};
    for (int k = 1; k <= 5; ++k) CHECK(virtual_power_sum(k, same).is_zero());
    // two-path agreement
    VirtualBundle mixed{xs(3), {Y(1), Y(2)}, m};
    for (int k = 1; k <= 6; ++k) CHECK_NOTHROW(virtual_power_sum_checked(k, mixed));
}

TEST_CASE("dual bundle") {
    int m = 1;
    VirtualBundle v{{X(1), X(2)}, {Y(1)}, m};
    VirtualBundle d = v.dual();
    CHECK(d.pos[0] == -X(1));
    CHECK(d.neg[0] == -Y(1));
    CHECK(d.dual().pos[0] == X(1));
    CHECK(v.rank() == 1);
    VirtualBundle neg_rank{{}, xs(2), m};
    CHECK(neg_rank.rank() == -2);
}
