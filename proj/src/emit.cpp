#include "kappa/emit.hpp"

#include <cctype>
#include <sstream>

namespace kappa {

namespace {

std::string latex_var(VarId v) {
    switch (v.family) {
        case Family::X: return "x_{" + std::to_string(v.index) + "}";
        case Family::Y: return "y_{" + std::to_string(v.index) + "}";
        case Family::T: return "t_{" + std::to_string(v.index) + "}";
        case Family::Tau: return "\\tau_{" + std::to_string(v.index) + "}";
        case Family::U: return "u";
        case Family::V: return "v";
        case Family::Xi: return "\\xi";
    }
    return "?";
}

std::string latex_coeff(const DualInt& c, bool leading, bool has_mon) {
    std::string al = "\\alpha_{" + std::to_string(2 * c.m) + "}";
    std::ostringstream os;
    if (c.b == 0) {
        bool neg = c.a < 0;
        Int abs_a = neg ? Int(-c.a) : c.a;
        os << (neg ? "-" : (leading ? "" : "+"));
        if (abs_a != 1 || !has_mon) os << abs_a.str();
        return os.str();
    }
    if (c.a == 0) {
        bool neg = c.b < 0;
        Int abs_b = neg ? Int(-c.b) : c.b;
        os << (neg ? "-" : (leading ? "" : "+"));
        if (abs_b != 1) os << abs_b.str();
        os << al;
        return os.str();
    }
    os << (leading ? "" : "+") << "(" << c.a.str();
    Int abs_b = c.b < 0 ? Int(-c.b) : c.b;
    os << (c.b < 0 ? "-" : "+");
    if (abs_b != 1) os << abs_b.str();
    os << al << ")";
    return os.str();
}

std::string latex_exp(int e) {
    if (e == 1) return "";
    return "^{" + std::to_string(e) + "}";
}

}  // namespace

std::string latex(const GradedPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [mon, c] : p.terms()) {
        std::string mon_s;
        for (const auto& [v, e] : mon) mon_s += latex_var(v) + latex_exp(e);
        out += latex_coeff(c, out.empty(), !mon_s.empty());
        out += mon_s;
    }
    return out;
}

std::string latex(const ClassPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [mon, c] : p.terms()) {
        std::string mon_s;
        for (const auto& [i, e] : mon.taus) mon_s += "\\tau_{" + std::to_string(i) + "}" + latex_exp(e);
        for (const auto& sym : mon.syms) {
            mon_s += (sym.kind == SymbolKind::A) ? "\\mathcal{A}" : "\\mathcal{C}";
            mon_s += "^{(" + std::to_string(sym.sup) + ")}_{" + std::to_string(sym.idx) + "}";
        }
        out += latex_coeff(c, out.empty(), !mon_s.empty());
        out += mon_s;
    }
    return out;
}

namespace {

nlohmann::json degree_json(const Homogeneity& h) {
    switch (h.kind) {
        case Homogeneity::Zero: return "zero";
        case Homogeneity::Homogeneous: return h.degree;
        case Homogeneity::Inhomogeneous: return "inhomogeneous";
    }
    return nullptr;
}

std::string mon_text_plain(const Monomial& mon) {
    std::string s;
    for (const auto& [v, e] : mon) {
        if (!s.empty()) s += "*";
        s += var_name(v);
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

}  // namespace

nlohmann::json to_json(const GradedPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mon, c] : p.terms())
        terms.push_back({{"coeff_a", c.a.str()},
                         {"coeff_b", c.b.str()},
                         {"monomial", mon_text_plain(mon)}});
    return {{"m", p.m()}, {"degree", degree_json(p.homogeneity())}, {"terms", terms}};
}

nlohmann::json to_json(const ClassPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mon, c] : p.terms()) {
        std::string mon_s;
        for (const auto& [i, e] : mon.taus) {
            if (!mon_s.empty()) mon_s += "*";
            mon_s += "tau" + std::to_string(i);
            if (e != 1) mon_s += "^" + std::to_string(e);
        }
        for (const auto& sym : mon.syms) {
            if (!mon_s.empty()) mon_s += "*";
            mon_s += static_cast<char>(sym.kind);
            mon_s += "[" + std::to_string(sym.sup) + ";" + std::to_string(sym.idx) + "]";
        }
        terms.push_back(
            {{"coeff_a", c.a.str()}, {"coeff_b", c.b.str()}, {"monomial", mon_s}});
    }
    return {{"m", p.m()}, {"degree", degree_json(p.homogeneity())}, {"terms", terms}};
}

GradedPoly poly_from_json(const nlohmann::json& j) {
    int m = j.at("m").get<int>();
    GradedPoly out(m);
    for (const auto& t : j.at("terms")) {
        DualInt c{Int(t.at("coeff_a").get<std::string>()),
                  Int(t.at("coeff_b").get<std::string>()), m};
        std::string mon_s = t.at("monomial").get<std::string>();
        GradedPoly mon = mon_s.empty() ? GradedPoly::constant(m, 1) : parse_poly(mon_s, m);
        mon *= c;
        out += mon;
    }
    return out;
}

ClassPoly class_poly_from_json(const nlohmann::json& j) {
    int m = j.at("m").get<int>();
    ClassPoly out(m);
    for (const auto& t : j.at("terms")) {
        DualInt c{Int(t.at("coeff_a").get<std::string>()),
                  Int(t.at("coeff_b").get<std::string>()), m};
        std::string mon_s = t.at("monomial").get<std::string>();
        ClassPoly mon = mon_s.empty() ? ClassPoly::constant(m, 1) : parse_class_poly(mon_s, m);
        mon *= c;
        out += mon;
    }
    return out;
}

ClassPoly parse_class_poly(const std::string& text, int m) {
    // term := factor ('*' factor)*; factor := int | 'al' | tauN['^'e] | K '[' sup ';' idx ']'
    size_t pos = 0;
    auto fail = [&](const std::string& why) -> void {
        throw InvalidInput("parse_class_poly: " + why + " at offset " + std::to_string(pos) +
                           " in '" + text + "'");
    };
    auto peek = [&]() -> char { return pos < text.size() ? text[pos] : '\0'; };
    auto read_int = [&]() -> long {
        bool neg = peek() == '-';
        if (neg) ++pos;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digit");
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (text[pos++] - '0');
        return neg ? -v : v;
    };

    ClassPoly out(m);
    if (text == "0") return out;
    bool lead_neg = false;
    if (peek() == '-') {
        lead_neg = true;
        ++pos;
    }
    bool first = true;
    while (pos < text.size() || first) {
        bool neg = first ? lead_neg : false;
        if (!first) {
            if (peek() == '+')
                ++pos;
            else if (peek() == '-') {
                neg = true;
                ++pos;
            } else
                fail("expected '+' or '-'");
        }
        first = false;
        DualInt coeff = DualInt::one(m);
        ClassMonomial mon;
        bool more = true;
        while (more) {
            if (text.compare(pos, 3, "tau") == 0) {
                pos += 3;
                int idx = static_cast<int>(read_int());
                int e = 1;
                if (peek() == '^') {
                    ++pos;
                    e = static_cast<int>(read_int());
                }
                mon.taus.emplace_back(idx, e);
            } else if (text.compare(pos, 2, "al") == 0) {
                pos += 2;
                coeff *= DualInt::alpha(m);
            } else if (peek() == 'A' || peek() == 'C') {
                SymbolKind kind = peek() == 'A' ? SymbolKind::A : SymbolKind::C;
                ++pos;
                if (peek() != '[') fail("expected '['");
                ++pos;
                int sup = static_cast<int>(read_int());
                if (peek() != ';') fail("expected ';'");
                ++pos;
                int idx = static_cast<int>(read_int());
                if (peek() != ']') fail("expected ']'");
                ++pos;
                mon.syms.push_back({kind, sup, idx});
            } else if (peek() == '(') {
                ++pos;
                Int a{read_int()};
                DualInt c{a, 0, m};
                if (peek() == '+' || peek() == '-') {
                    bool bneg = peek() == '-';
                    ++pos;
                    Int b = 1;
                    if (std::isdigit(static_cast<unsigned char>(peek()))) {
                        b = Int(read_int());
                        if (peek() != '*') fail("expected '*'");
                        ++pos;
                    }
                    if (text.compare(pos, 2, "al") != 0) fail("expected 'al'");
                    pos += 2;
                    c.b = bneg ? Int(-b) : b;
                }
                if (peek() != ')') fail("expected ')'");
                ++pos;
                coeff *= c;
            } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff *= DualInt::integer(read_int(), m);
            } else {
                fail("unexpected character");
            }
            more = peek() == '*';
            if (more) ++pos;
        }
        if (neg) coeff = -coeff;
        std::sort(mon.syms.begin(), mon.syms.end());
        std::sort(mon.taus.begin(), mon.taus.end());
        out.add_term(mon, coeff);
    }
    return out;
}

std::string fgl_text_factored(const FormalGroupLaw& fgl) {
    std::string inner = fgl.inner.text();
    bool wrap = fgl.inner.term_count() > 1;
    return "(u+v)*(1+al*" + (wrap ? "(" + inner + ")" : inner) + ")";
}

std::string fgl_latex_factored(const FormalGroupLaw& fgl) {
    std::string al = "\\alpha_{" + std::to_string(2 * fgl.m) + "}";
    std::string inner = latex(fgl.inner);
    bool wrap = fgl.inner.term_count() > 1;
    return "(u+v)\\left[1+" + al + (wrap ? "\\left(" + inner + "\\right)" : " " + inner) +
           "\\right]";
}

}  // namespace kappa
