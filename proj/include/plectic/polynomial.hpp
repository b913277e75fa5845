#ifndef PLECTIC_POLYNOMIAL_HPP
#define PLECTIC_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace plectic {

// Exact rationals; mpq_class keeps num/den canonical once canonicalize() ran.
using Rational = mpq_class;

using Exponent = std::vector<int>;

// Graded-lex order: lower total degree first, ties broken lexicographically.
struct ExponentLess {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int column, const std::string& what)
        : std::runtime_error(what), column_(column) {}
    int column() const { return column_; }

private:
    int column_;
};

// Sparse multivariate polynomial over Q in variables x1..xn.
class Polynomial {
public:
    using Terms = std::map<Exponent, Rational, ExponentLess>;

    explicit Polynomial(int nvars = 0) : nvars_(nvars) {}
    Polynomial(int nvars, const Rational& c);

    static Polynomial variable(int nvars, int i);  // x_i, 1-based
    static Polynomial monomial(int nvars, const Exponent& e, const Rational& c);
    static Polynomial parse(int nvars, std::string_view text);

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int total_degree() const;  // -1 for the zero polynomial
    Rational coefficient(const Exponent& e) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    Polynomial operator-() const;
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    // a += c * b without temporaries
    void add_scaled(const Polynomial& b, const Rational& c);
    void add_product(const Polynomial& a, const Polynomial& b, const Rational& c);

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial pow(int e) const;

    std::string str() const;

private:
    void add_term(const Exponent& e, const Rational& c);
    void check_compatible(const Polynomial& o) const;

    int nvars_;
    Terms terms_;
};

// Formal partial derivative with respect to x_i, 1-based.
Polynomial partial(const Polynomial& p, int i);

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Polynomial& a, const Rational& c);

std::string rational_str(const Rational& r);

}  // namespace plectic

#endif
