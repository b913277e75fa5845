#include "plectic/polynomial.hpp"

#include "expr_parser.hpp"

#include <algorithm>
#include <numeric>

namespace plectic {

bool ExponentLess::operator()(const Exponent& a, const Exponent& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    // among equal degree, x1 > x2 > ... so that x1 sorts last (printed first)
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial::Polynomial(int nvars, const Rational& c) : nvars_(nvars) {
    if (c != 0) terms_.emplace(Exponent(static_cast<std::size_t>(nvars), 0), c);
}

Polynomial Polynomial::variable(int nvars, int i) {
    if (i < 1 || i > nvars) throw std::out_of_range("variable index out of range");
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    return monomial(nvars, e, 1);
}

Polynomial Polynomial::monomial(int nvars, const Exponent& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars) throw std::invalid_argument("exponent length mismatch");
    Polynomial p(nvars);
    if (c != 0) p.terms_.emplace(e, c);
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

Rational Polynomial::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial variable-count mismatch");
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::add_scaled(const Polynomial& b, const Rational& c) {
    check_compatible(b);
    if (c == 0) return;
    for (const auto& [e, v] : b.terms_) add_term(e, v * c);
}

void Polynomial::add_product(const Polynomial& a, const Polynomial& b, const Rational& c) {
    check_compatible(a);
    check_compatible(b);
    if (c == 0) return;
    Exponent e(static_cast<std::size_t>(nvars_));
    for (const auto& [ea, va] : a.terms_) {
        Rational vac = va * c;
        for (const auto& [eb, vb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            add_term(e, vac * vb);
        }
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    add_scaled(o, 1);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    add_scaled(o, -1);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& kv : terms_) kv.second *= c;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r(a.nvars_);
    r.add_product(a, b, 1);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    Polynomial r(nvars_, 1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

std::string rational_str(const Rational& r) {
    return r.get_str();
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out += rational_str(a);
        else if (a == 1)
            out += mono;
        else
            out += rational_str(a) + "*" + mono;
    }
    return out;
}

namespace {

struct PolyOps {
    int nvars;
    Polynomial constant(const Rational& r) const { return Polynomial(nvars, r); }
    Polynomial var(long i, int col) const {
        if (i < 1 || i > nvars)
            throw ParseError(col, "column " + std::to_string(col) + ": variable x" + std::to_string(i) +
                                      " out of range");
        return Polynomial::variable(nvars, static_cast<int>(i));
    }
    Polynomial basis(detail::Tok, const std::vector<long>&, int col) const {
        throw ParseError(col, "column " + std::to_string(col) + ": basis symbol in polynomial");
    }
    Polynomial mul(const Polynomial& a, const Polynomial& b) const { return a * b; }
    Polynomial add(const Polynomial& a, const Polynomial& b) const { return a + b; }
    Polynomial neg(const Polynomial& a) const { return -a; }
    Polynomial pow(const Polynomial& a, int e) const { return a.pow(e); }
};

}  // namespace

Polynomial Polynomial::parse(int nvars, std::string_view text) {
    PolyOps ops{nvars};
    return detail::ExprParser<Polynomial, PolyOps>(text, ops).parse();
}

Polynomial partial(const Polynomial& p, int i) {
    if (i < 1 || i > p.nvars()) throw std::out_of_range("partial: variable index out of range");
    auto k = static_cast<std::size_t>(i - 1);
    Polynomial r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[k] == 0) continue;
        Exponent f = e;
        --f[k];
        r.add_scaled(Polynomial::monomial(p.nvars(), f, c * e[k]), 1);
    }
    return r;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }
Polynomial poly_scale(const Polynomial& a, const Rational& c) { return a * c; }

}  // namespace plectic
