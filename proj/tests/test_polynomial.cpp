#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plectic/linsolve.hpp"
#include "plectic/polynomial.hpp"
#include "plectic/random.hpp"

#include <random>

using namespace plectic;

namespace {

Polynomial P(int nv, const char* s) { return Polynomial::parse(nv, s); }

std::vector<Polynomial> samples(int nv, int count, unsigned long long seed) {
    std::mt19937_64 g(seed);
    RandomOptions opt;
    opt.poly_degree = 3;
    opt.terms = 3;
    std::vector<Polynomial> v;
    for (int i = 0; i < count; ++i) v.push_back(random_polynomial(nv, g, opt));
    return v;
}

// evaluate at an integer point, as an independent check of products
Rational eval(const Polynomial& p, const std::vector<Rational>& pt) {
    Rational s = 0;
    for (const auto& [e, c] : p.terms()) {
        Rational m = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) m *= pt[i];
        s += m;
    }
    return s;
}

}  // namespace

TEST_CASE("parse and print") {
    CHECK(P(3, "x1^2*x3 - 3/2*x2 + 4 - x1*x1").str() == "x1^2*x3 - x1^2 - 3/2*x2 + 4");
    CHECK(P(2, "-(x1+x2)^2").str() == "-x1^2 - 2*x1*x2 - x2^2");
    CHECK(Polynomial(2).str() == "0");
    CHECK(P(2, "x1 - x1").is_zero());
    CHECK(P(2, "6/4").coefficient({0, 0}) == Rational(3, 2));
}

TEST_CASE("printing round-trips") {
    for (const auto& p : samples(4, 40, 11)) CHECK(P(4, p.str().c_str()) == p);
}

TEST_CASE("parse errors carry a column") {
    try {
        P(2, "x1 + * x2");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.column() == 6);
    }
    CHECK_THROWS_AS(P(2, "x3"), ParseError);
    CHECK_THROWS_AS(P(2, "x1 +"), ParseError);
    CHECK_THROWS_AS(P(2, "(x1"), ParseError);
}

TEST_CASE("degree and coefficients") {
    auto p = P(3, "x1^2*x3 - x2 + 5");
    CHECK(p.total_degree() == 3);
    CHECK(Polynomial(3).total_degree() == -1);
    CHECK(p.coefficient({2, 0, 1}) == 1);
    CHECK(p.coefficient({0, 1, 0}) == -1);
    CHECK(p.coefficient({1, 1, 1}) == 0);
    CHECK(P(3, "7").is_constant());
    CHECK_FALSE(p.is_constant());
}

TEST_CASE("ring axioms on random polynomials") {
    auto v = samples(3, 12, 5);
    for (std::size_t i = 0; i + 2 < v.size(); ++i) {
        const auto& a = v[i];
        const auto& b = v[i + 1];
        const auto& c = v[i + 2];
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b - b == a);
        CHECK((a - a).is_zero());
        CHECK(a * Polynomial(3, 1) == a);
        CHECK((a * Polynomial(3)).is_zero());
    }
}

TEST_CASE("products agree with pointwise evaluation") {
    auto v = samples(3, 10, 9);
    const std::vector<Rational> pt{Rational(2), Rational(-3), Rational(1, 2)};
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        CHECK(eval(v[i] * v[i + 1], pt) == eval(v[i], pt) * eval(v[i + 1], pt));
        CHECK(eval(v[i] + v[i + 1], pt) == eval(v[i], pt) + eval(v[i + 1], pt));
    }
}

TEST_CASE("in-place helpers match the operators") {
    auto v = samples(2, 6, 3);
    Polynomial acc = v[0];
    acc.add_scaled(v[1], Rational(-2, 3));
    CHECK(acc == v[0] + v[1] * Rational(-2, 3));
    Polynomial acc2 = v[2];
    acc2.add_product(v[3], v[4], Rational(5));
    CHECK(acc2 == v[2] + Rational(5) * (v[3] * v[4]));
    CHECK(poly_mul(v[0], v[1]) == v[0] * v[1]);
    CHECK(poly_add(v[0], v[1]) == v[0] + v[1]);
    CHECK(poly_scale(v[0], 3) == v[0] * Rational(3));
}

TEST_CASE("powers") {
    auto p = P(2, "x1 - 2*x2");
    CHECK(p.pow(0) == Polynomial(2, 1));
    CHECK(p.pow(3) == p * p * p);
}

TEST_CASE("partial derivatives") {
    auto p = P(3, "x1^3*x2 - 4*x2*x3^2 + 7");
    CHECK(partial(p, 1) == P(3, "3*x1^2*x2"));
    CHECK(partial(p, 2) == P(3, "x1^3 - 4*x3^2"));
    CHECK(partial(p, 3) == P(3, "-8*x2*x3"));
    CHECK(partial(P(3, "5"), 1).is_zero());
}

TEST_CASE("product rule and commuting partials") {
    auto v = samples(3, 8, 21);
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        for (int k = 1; k <= 3; ++k) {
            const auto& a = v[i];
            const auto& b = v[i + 1];
            CHECK(partial(a * b, k) == partial(a, k) * b + a * partial(b, k));
            CHECK(partial(partial(a, k), 1) == partial(partial(a, 1), k));
        }
}

TEST_CASE("mismatched variable counts are rejected") {
    CHECK_THROWS(P(2, "x1") + P(3, "x1"));
}

TEST_CASE("sparse exact solver") {
    // x + 2y = 3, 4x - y = -6 has the unique solution x = -1, y = 2
    SparseSystem A(2);
    A.add_row({{0, Rational(1)}, {1, Rational(2)}}, Rational(3));
    A.add_row({{0, Rational(4)}, {1, Rational(-1)}}, Rational(-6));
    auto r = A.solve();
    REQUIRE(r.solution);
    CHECK((*r.solution)[0] == -1);
    CHECK((*r.solution)[1] == 2);
    CHECK(r.kernel.empty());
    CHECK(r.rank == 2);

    SparseSystem B(3);
    B.add_row({{0, Rational(1)}, {1, Rational(1)}}, Rational(1));
    B.add_row({{0, Rational(2)}, {1, Rational(2)}}, Rational(3));
    CHECK_FALSE(B.solve().solution);
}

TEST_CASE("kernel vectors of the sparse solver are annihilated") {
    std::mt19937_64 g(4);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int t = 0; t < 20; ++t) {
        const int rows = 3, cols = 5;
        std::vector<std::vector<Rational>> M(rows, std::vector<Rational>(cols));
        SparseSystem S(cols);
        for (int i = 0; i < rows; ++i) {
            std::map<int, Rational> row;
            for (int j = 0; j < cols; ++j) {
                M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = d(g);
                if (M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0)
                    row[j] = M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            }
            S.add_row(row, Rational(d(g)));
        }
        auto r = S.solve();
        CHECK(r.rank + static_cast<int>(r.kernel.size()) == cols);
        for (const auto& k : r.kernel)
            for (int i = 0; i < rows; ++i) {
                Rational s = 0;
                for (int j = 0; j < cols; ++j) s += M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * k[static_cast<std::size_t>(j)];
                CHECK(s == 0);
            }
    }
}
