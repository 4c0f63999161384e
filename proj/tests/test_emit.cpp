#include "kappa/emit.hpp"

#include <doctest.h>

using namespace kappa;

TEST_CASE("factored fgl strings") {
    CHECK(fgl_text_factored(build_fgl(1)) == "(u+v)*(1+al*u*v)");
    CHECK(fgl_text_factored(build_fgl(2)) == "(u+v)*(1+al*(u^3*v+u^2*v^2+u*v^3))");
    CHECK(fgl_text_factored(build_fgl(3)) ==
          "(u+v)*(1+al*(u^5*v+2*u^4*v^2+3*u^3*v^3+2*u^2*v^4+u*v^5))");
}

TEST_CASE("json emission") {
    GradedPoly zero(1);
    nlohmann::json jz = to_json(zero);
    CHECK(jz["terms"].empty());
    CHECK(jz["degree"] == "zero");

    // (u+v)(1+al uv): four entries, the al-parts on u^2 v and u v^2
    FormalGroupLaw fgl = build_fgl(1);
    nlohmann::json j = to_json(fgl.sum);
    CHECK(j["m"] == 1);
    CHECK(j["degree"] == 1);
    REQUIRE(j["terms"].size() == 4);
    int alpha_terms = 0;
    for (const auto& t : j["terms"])
        if (t["coeff_b"] == "1" && t["coeff_a"] == "0") ++alpha_terms;
    CHECK(alpha_terms == 2);
}

TEST_CASE("json round trip") {
    GradedPoly p(2);
    p.add_term({{var_x(1), 2}, {var_y(3), 1}}, DualInt{3, -4, 2});
    p.add_term({{var_t(1), -2}}, DualInt{0, 7, 2});
    p.add_term({}, DualInt{-1, 0, 2});
    CHECK(poly_from_json(to_json(p)) == p);

    ClassPoly c(1);
    ClassMonomial mon;
    mon.syms.push_back({SymbolKind::A, 2, 1});
    mon.syms.push_back({SymbolKind::A, 1, -2});
    mon.taus.emplace_back(1, 2);
    c.add_term(mon, DualInt{5, 1, 1});
    CHECK(class_poly_from_json(to_json(c)) == c);
}

TEST_CASE("class poly text") {
    int m = 1;
    ClassPoly p = ClassPoly::symbol(m, SymbolKind::A, 2, 1) *
                  ClassPoly::symbol(m, SymbolKind::A, 1, 1);
    CHECK(p.text() == "A[2;1]*A[1;1]");
    CHECK(parse_class_poly(p.text(), m) == p);

    ClassPoly q = ClassPoly::tau_power(m, 1, 2) * ClassPoly::symbol(m, SymbolKind::C, 0, -1);
    q *= DualInt{0, -2, m};
    CHECK(q.text() == "-2*al*tau1^2*C[0;-1]");
    CHECK(parse_class_poly(q.text(), m) == q);
}

TEST_CASE("latex emission") {
    CHECK(latex(build_fgl(1).sum) ==
          "u+v+\\alpha_{2}u^{2}v+\\alpha_{2}uv^{2}");
    ClassPoly p = ClassPoly::symbol(1, SymbolKind::A, 2, 1) *
                  ClassPoly::symbol(1, SymbolKind::A, 1, 1);
    CHECK(latex(p) == "\\mathcal{A}^{(2)}_{1}\\mathcal{A}^{(1)}_{1}");
    CHECK(fgl_latex_factored(build_fgl(1)) ==
          "(u+v)\\left[1+\\alpha_{2} uv\\right]");
}
