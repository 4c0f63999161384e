#include "kappa/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <sstream>

namespace kappa {

bool family_allows_negative(Family f) {
    return f == Family::T || f == Family::Xi;
}

std::string var_name(VarId v) {
    const char* stem = nullptr;
    bool singleton = false;
    switch (v.family) {
        case Family::X: stem = "x"; break;
        case Family::Y: stem = "y"; break;
        case Family::T: stem = "t"; break;
        case Family::Tau: stem = "tau"; break;
        case Family::U: stem = "u"; singleton = true; break;
        case Family::V: stem = "v"; singleton = true; break;
        case Family::Xi: stem = "xi"; singleton = true; break;
    }
    if (singleton && v.index == 0) return stem;
    return stem + std::to_string(v.index);
}

long mon_degree(const Monomial& mon) {
    long d = 0;
    for (const auto& [v, e] : mon) d += e;
    return d;
}

Monomial mon_mul(const Monomial& x, const Monomial& y) {
    Monomial out;
    out.reserve(x.size() + y.size());
    auto i = x.begin();
    auto j = y.begin();
    while (i != x.end() && j != y.end()) {
        if (i->first < j->first)
            out.push_back(*i++);
        else if (j->first < i->first)
            out.push_back(*j++);
        else {
            int e = i->second + j->second;
            if (e != 0) out.emplace_back(i->first, e);
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), i, x.end());
    out.insert(out.end(), j, y.end());
    return out;
}

// x sorts before y when its exponent at the first differing variable (in
// global order) is larger; total degree dominates.
bool GrlexLess::operator()(const Monomial& x, const Monomial& y) const {
    long dx = mon_degree(x), dy = mon_degree(y);
    if (dx != dy) return dx < dy;
    auto i = x.begin();
    auto j = y.begin();
    while (i != x.end() && j != y.end()) {
        if (i->first == j->first) {
            if (i->second != j->second) return i->second > j->second;
            ++i;
            ++j;
        } else if (i->first < j->first) {
            return i->second > 0;  // x's exponent vs y's implicit 0
        } else {
            return j->second < 0;  // y's exponent vs x's implicit 0
        }
    }
    if (i != x.end()) return i->second > 0;
    if (j != y.end()) return j->second < 0;
    return false;
}

GradedPoly GradedPoly::constant(const DualInt& c) {
    GradedPoly p(c.m);
    p.add_term({}, c);
    return p;
}

GradedPoly GradedPoly::constant(int m, long value) {
    return constant(DualInt::integer(value, m));
}

GradedPoly GradedPoly::variable(int m, VarId v, int exp) {
    GradedPoly p(m);
    if (exp == 0) return constant(m, 1);
    p.add_term({{v, exp}}, DualInt::one(m));
    return p;
}

void GradedPoly::add_term(const Monomial& mon, const DualInt& c) {
    if (c.is_zero()) return;
    require_same_m(m_, c.m, "GradedPoly::add_term");
    for (const auto& [v, e] : mon)
        if (e < 0 && !family_allows_negative(v.family))
            throw InvalidInput("negative exponent on non-Laurent variable " + var_name(v));
    auto [it, fresh] = terms_.emplace(mon, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DualInt GradedPoly::coeff(const Monomial& mon) const {
    auto it = terms_.find(mon);
    return it == terms_.end() ? DualInt::zero(m_) : it->second;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
    require_same_m(m_, o.m_, "GradedPoly+");
    for (const auto& [mon, c] : o.terms_) add_term(mon, c);
    return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
    require_same_m(m_, o.m_, "GradedPoly-");
    for (const auto& [mon, c] : o.terms_) add_term(mon, -c);
    return *this;
}

GradedPoly GradedPoly::operator-() const {
    GradedPoly out(m_);
    for (const auto& [mon, c] : terms_) out.terms_.emplace(mon, -c);
    return out;
}

GradedPoly operator*(const GradedPoly& x, const GradedPoly& y) {
    require_same_m(x.m_, y.m_, "GradedPoly*");
    GradedPoly out(x.m_);
    for (const auto& [mx, cx] : x.terms_)
        for (const auto& [my, cy] : y.terms_) out.add_term(mon_mul(mx, my), cx * cy);
    return out;
}

GradedPoly& GradedPoly::operator*=(const DualInt& c) {
    require_same_m(m_, c.m, "GradedPoly*coeff");
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    TermMap out;
    for (const auto& [mon, k] : terms_) {
        DualInt v = k * c;
        if (!v.is_zero()) out.emplace(mon, std::move(v));
    }
    terms_ = std::move(out);
    return *this;
}

GradedPoly& GradedPoly::operator*=(const Int& k) {
    if (k == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [mon, c] : terms_) c *= k;
    return *this;
}

GradedPoly GradedPoly::pow(int e) const {
    if (e < 0) throw InvalidInput("GradedPoly::pow: negative exponent");
    GradedPoly acc = constant(m_, 1);
    GradedPoly base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

GradedPoly GradedPoly::substitute(
    const std::vector<std::pair<VarId, GradedPoly>>& assignment) const {
    auto image = [&](VarId v) -> const GradedPoly* {
        for (const auto& [w, p] : assignment)
            if (w == v) return &p;
        return nullptr;
    };
    GradedPoly out(m_);
    std::map<std::pair<VarId, int>, GradedPoly> pow_cache;
    for (const auto& [mon, c] : terms_) {
        GradedPoly term = constant(c);
        Monomial untouched;
        for (const auto& [v, e] : mon) {
            const GradedPoly* img = image(v);
            if (!img) {
                untouched.emplace_back(v, e);
                continue;
            }
            if (e < 0) throw InvalidInput("substitute: negative exponent on substituted variable");
            auto key = std::make_pair(v, e);
            auto it = pow_cache.find(key);
            if (it == pow_cache.end()) it = pow_cache.emplace(key, img->pow(e)).first;
            term *= it->second;
        }
        if (!untouched.empty()) {
            GradedPoly shift(m_);
            shift.add_term(untouched, DualInt::one(m_));
            term *= shift;
        }
        out += term;
    }
    return out;
}

GradedPoly GradedPoly::substitute(VarId v, const GradedPoly& image) const {
    return substitute({{v, image}});
}

GradedPoly GradedPoly::coefficient_of(VarId v, int k) const {
    GradedPoly out(m_);
    for (const auto& [mon, c] : terms_) {
        int e = 0;
        Monomial rest;
        rest.reserve(mon.size());
        for (const auto& [w, ew] : mon) {
            if (w == v)
                e = ew;
            else
                rest.emplace_back(w, ew);
        }
        if (e == k) out.add_term(rest, c);
    }
    return out;
}

int GradedPoly::min_exponent(VarId v) const {
    int best = 0;
    for (const auto& [mon, c] : terms_)
        for (const auto& [w, e] : mon)
            if (w == v) best = std::min(best, e);
    return best;
}

int GradedPoly::max_exponent(VarId v) const {
    int best = 0;
    for (const auto& [mon, c] : terms_)
        for (const auto& [w, e] : mon)
            if (w == v) best = std::max(best, e);
    return best;
}

bool GradedPoly::involves(VarId v) const {
    for (const auto& [mon, c] : terms_)
        for (const auto& [w, e] : mon)
            if (w == v) return true;
    return false;
}

bool GradedPoly::involves_family(Family f) const {
    for (const auto& [mon, c] : terms_)
        for (const auto& [w, e] : mon)
            if (w.family == f) return true;
    return false;
}

GradedPoly GradedPoly::alpha0_part() const {
    GradedPoly out(m_);
    for (const auto& [mon, c] : terms_)
        if (c.a != 0) out.terms_.emplace(mon, DualInt::integer(c.a, m_));
    return out;
}

Homogeneity GradedPoly::homogeneity() const {
    Homogeneity h;
    bool have = false;
    for (const auto& [mon, c] : terms_) {
        long base = mon_degree(mon);
        // the a-part sits in degree |mon|, the b-part in |mon| - 2m
        if (c.a != 0) {
            if (have && h.degree != base) return {Homogeneity::Inhomogeneous, 0};
            h.degree = base;
            have = true;
        }
        if (c.b != 0) {
            long d = base - 2L * m_;
            if (have && h.degree != d) return {Homogeneity::Inhomogeneous, 0};
            h.degree = d;
            have = true;
        }
    }
    h.kind = have ? Homogeneity::Homogeneous : Homogeneity::Zero;
    return h;
}

namespace {

std::string mon_text(const Monomial& mon) {
    std::string s;
    for (const auto& [v, e] : mon) {
        if (!s.empty()) s += "*";
        s += var_name(v);
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

// One term, sign split off for the joiner; mixed coefficients keep their
// sign inside parentheses and report positive.
std::pair<bool, std::string> term_text(const Monomial& mon, const DualInt& c) {
    std::string mon_s = mon_text(mon);
    if (c.b == 0) {
        bool neg = c.a < 0;
        Int abs_a = neg ? Int(-c.a) : c.a;
        if (mon_s.empty()) return {neg, abs_a.str()};
        if (abs_a == 1) return {neg, mon_s};
        return {neg, abs_a.str() + "*" + mon_s};
    }
    if (c.a == 0) {
        bool neg = c.b < 0;
        Int abs_b = neg ? Int(-c.b) : c.b;
        std::string s = (abs_b == 1) ? "al" : abs_b.str() + "*al";
        if (!mon_s.empty()) s += "*" + mon_s;
        return {neg, s};
    }
    std::string s = "(" + c.a.str();
    Int abs_b = c.b < 0 ? Int(-c.b) : c.b;
    s += (c.b < 0) ? "-" : "+";
    s += (abs_b == 1) ? "al" : abs_b.str() + "*al";
    s += ")";
    if (!mon_s.empty()) s += "*" + mon_s;
    return {false, s};
}

}  // namespace

std::string GradedPoly::text() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mon, c] : terms_) {
        auto [neg, s] = term_text(mon, c);
        if (out.empty())
            out = neg ? "-" + s : s;
        else
            out += (neg ? "-" : "+") + s;
    }
    return out;
}

GradedPoly series_inverse(const GradedPoly& p, VarId var, int order) {
    if (order < 0) throw InvalidInput("series_inverse: negative order");
    if (p.min_exponent(var) < 0)
        throw InvalidInput("series_inverse: negative powers of the series variable");
    int top = std::min(order, p.max_exponent(var));
    std::vector<GradedPoly> c;
    c.reserve(static_cast<size_t>(top) + 1);
    for (int k = 0; k <= top; ++k) c.push_back(p.coefficient_of(var, k));

    // unit check: constant term must be 1 + al*g
    GradedPoly delta = c[0] - GradedPoly::constant(p.m(), 1);
    if (!delta.alpha0_part().is_zero())
        throw InvalidInput("series_inverse: constant term is not 1 + al*(...)");
    GradedPoly inv0 = GradedPoly::constant(p.m(), 1) - delta;

    std::vector<GradedPoly> q;
    q.reserve(static_cast<size_t>(order) + 1);
    q.push_back(inv0);
    for (int n = 1; n <= order; ++n) {
        GradedPoly acc(p.m());
        for (int j = 1; j <= std::min(n, top); ++j)
            acc += c[static_cast<size_t>(j)] * q[static_cast<size_t>(n - j)];
        q.push_back(-(inv0 * acc));
    }
    GradedPoly out(p.m());
    for (int n = 0; n <= order; ++n)
        out += q[static_cast<size_t>(n)] * GradedPoly::variable(p.m(), var, n);
    return out;
}

// ---------------------------------------------------------------------------
// Canonical text parser (strict: accepts exactly what text() produces).

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    int m;

    explicit Parser(const std::string& str, int m_) : s(str), m(m_) {}

    [[noreturn]] void fail(const std::string& why) const {
        throw InvalidInput("parse_poly: " + why + " at offset " + std::to_string(pos) + " in '" +
                           s + "'");
    }
    bool eof() const { return pos >= s.size(); }
    char peek() const { return eof() ? '\0' : s[pos]; }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Int integer() {
        bool neg = accept('-');
        if (!neg) accept('+');
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digit");
        Int v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        return neg ? Int(-v) : v;
    }

    int small_int() {
        bool neg = accept('-');
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digit");
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        return static_cast<int>(neg ? -v : v);
    }

    bool lookahead_word(const char* w) const {
        size_t n = std::strlen(w);
        return s.compare(pos, n, w) == 0;
    }

    bool at_alpha() const {
        // "al" not followed by a letter (var names never contain 'l')
        return lookahead_word("al");
    }

    VarId variable() {
        Family f;
        if (lookahead_word("tau")) {
            pos += 3;
            f = Family::Tau;
        } else if (lookahead_word("xi")) {
            pos += 2;
            f = Family::Xi;
        } else if (accept('x')) {
            f = Family::X;
        } else if (accept('y')) {
            f = Family::Y;
        } else if (accept('t')) {
            f = Family::T;
        } else if (accept('u')) {
            f = Family::U;
        } else if (accept('v')) {
            f = Family::V;
        } else {
            fail("expected variable");
        }
        int idx = 0;
        if (std::isdigit(static_cast<unsigned char>(peek()))) idx = small_int();
        return {f, idx};
    }

    // factor := "al" | int ["*al"] | variable ["^" int]
    // term   := ["("coeff")" "*"] factor ("*" factor)*
    void term(GradedPoly& out, bool negate) {
        DualInt coeff = DualInt::one(m);
        Monomial mon;
        bool want_factor = true;
        while (want_factor) {
            if (accept('(')) {
                Int a = integer();
                DualInt c{a, 0, m};
                if (peek() == '+' || peek() == '-') {
                    bool bneg = s[pos] == '-';
                    ++pos;
                    Int b = 1;
                    if (std::isdigit(static_cast<unsigned char>(peek()))) {
                        b = integer();
                        if (!accept('*')) fail("expected '*' before al");
                    }
                    if (!lookahead_word("al")) fail("expected 'al'");
                    pos += 2;
                    c.b = bneg ? Int(-b) : b;
                }
                if (!accept(')')) fail("expected ')'");
                coeff *= c;
            } else if (at_alpha()) {
                pos += 2;
                coeff *= DualInt::alpha(m);
            } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
                Int v = integer();
                coeff *= DualInt::integer(v, m);
            } else {
                VarId var = variable();
                int e = 1;
                if (accept('^')) e = small_int();
                mon = mon_mul(mon, Monomial{{var, e}});
            }
            want_factor = accept('*');
        }
        if (negate) coeff = -coeff;
        out.add_term(mon, coeff);
    }

    GradedPoly poly() {
        GradedPoly out(m);
        if (lookahead_word("0") && pos + 1 == s.size()) return out;
        bool neg = accept('-');
        term(out, neg);
        while (!eof()) {
            if (accept('+'))
                term(out, false);
            else if (accept('-'))
                term(out, true);
            else
                fail("expected '+' or '-'");
        }
        return out;
    }
};

}  // namespace

GradedPoly parse_poly(const std::string& text, int m) {
    Parser p(text, m);
    return p.poly();
}

}  // namespace kappa
