#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plectic/combinatorics.hpp"
#include "plectic/graded.hpp"
#include "plectic/random.hpp"

#include <random>

using namespace plectic;

namespace {

constexpr int NV = 4;

Cotensor C(const char* s) { return Cotensor::parse(NV, s); }
Tensor T(const char* s) { return Tensor::parse(NV, s); }

RandomOptions small() {
    RandomOptions o;
    o.poly_degree = 2;
    o.terms = 2;
    return o;
}

Cotensor random_form(int p, std::mt19937_64& g) {
    // same shape as a random tensor, read through the dual basis
    Tensor t = random_tensor(NV, p, g, small());
    Cotensor f(NV);
    for (const auto& [m, c] : t.terms()) f.add_term(m, c);
    return f;
}

Tensor random_field(int q, std::mt19937_64& g) { return random_tensor(NV, q, g, small()); }

// component of a vector field along d_i
Polynomial comp(const Tensor& x, int i) { return x.coefficient(WedgeMask(1) << (i - 1)); }

// [X,Y]^i = X^j d_j Y^i - Y^j d_j X^i
Tensor lie_bracket_oracle(const Tensor& X, const Tensor& Y) {
    Tensor out(X.nvars());
    for (int i = 1; i <= X.nvars(); ++i) {
        Polynomial c(X.nvars());
        for (int j = 1; j <= X.nvars(); ++j) c += comp(X, j) * partial(comp(Y, i), j) - comp(Y, j) * partial(comp(X, i), j);
        out += Tensor::basis(X.nvars(), {i}, c);
    }
    return out;
}

// <a_1 ^ ... ^ a_k, v_1 ^ ... ^ v_k> = det(a_i(v_j)) for 1-forms and vector fields
Polynomial det_pairing(const std::vector<Cotensor>& a, const std::vector<Tensor>& v) {
    const int k = static_cast<int>(a.size());
    Polynomial s(NV);
    for (const auto& p : enumerate_permutations(k)) {
        Polynomial term(NV, Rational(p.parity()));
        for (int i = 1; i <= k; ++i) term = term * natural_pairing(a[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(p(i) - 1)]);
        s += term;
    }
    return s;
}

}  // namespace

TEST_CASE("wedge monomials and masks") {
    CHECK(mask_indices(0b1011) == std::vector<int>{1, 2, 4});
    CHECK(indices_mask({1, 3}) == 0b101u);
    CHECK(mask_size(0b111) == 3);
    CHECK(merge_sign(0b010, 0b001) == -1);
    CHECK(merge_sign(0b001, 0b010) == 1);
    CHECK(merge_sign(0b110, 0b001) == 1);  // two crossings
}

TEST_CASE("parse, canonical order and printing") {
    CHECK(C("dx2^dx1").str() == "-dx1^dx2");
    CHECK(C("dx1^dx1").is_zero());
    CHECK(T("x1^2 d1 - d2 + d3^d1").str() == "x1^2 d1 - d2 - d1^d3");
    CHECK(C("(x1^2*x3 - x4) dx3^dx4 + 2 dx1").str() == "2 dx1 + (x1^2*x3 - x4) dx3^dx4");
    CHECK(Cotensor(NV).str() == "0");
    std::mt19937_64 g(1);
    for (int q = 0; q <= 3; ++q) {
        auto x = random_field(q, g);
        CHECK(T(x.str().c_str()) == x);
    }
}

TEST_CASE("malformed basis symbols report the column") {
    try {
        Cotensor::parse(6, "dx5^^dx6");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.column() == 5);
    }
    CHECK_THROWS_AS(C("dx9"), ParseError);
    CHECK_THROWS_AS(T("dx1"), ParseError);
}

TEST_CASE("ranks and degrees") {
    auto mixed = C("dx1 + dx2^dx3");
    CHECK_FALSE(mixed.homogeneous());
    CHECK_FALSE(mixed.rank());
    CHECK(mixed.part(2) == C("dx2^dx3"));
    CHECK(C("x1 dx1^dx2").tensor_degree() == -2);
    CHECK(T("d1^d2^d3").tensor_degree() == 3);
    CHECK(C("x1 dx1^dx2 + x2^3 dx3^dx4").coefficient_degree() == 3);
}

TEST_CASE("wedge is graded commutative and associative") {
    std::mt19937_64 g(2);
    for (int t = 0; t < 10; ++t) {
        const int p = t % 3, q = (t + 1) % 3;
        auto a = random_form(p, g), b = random_form(q, g), c = random_form(1, g);
        CHECK(wedge(a, b) == sign_pow(p * q) * wedge(b, a));
        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
        auto x = random_field(p, g), y = random_field(q, g);
        CHECK(wedge(x, y) == sign_pow(p * q) * wedge(y, x));
    }
}

TEST_CASE("pairing is the determinant on decomposables") {
    std::mt19937_64 g(3);
    for (int k = 1; k <= 3; ++k)
        for (int t = 0; t < 4; ++t) {
            std::vector<Cotensor> a;
            std::vector<Tensor> v;
            Cotensor A = Cotensor::scalar(Polynomial(NV, 1));
            Tensor V = Tensor::scalar(Polynomial(NV, 1));
            for (int i = 0; i < k; ++i) {
                a.push_back(random_form(1, g));
                v.push_back(random_field(1, g));
                A = wedge(A, a.back());
                V = wedge(V, v.back());
            }
            CHECK(natural_pairing(A, V) == det_pairing(a, v));
        }
    CHECK(natural_pairing(C("dx1^dx2"), T("d1")).is_zero());
}

TEST_CASE("contractions are adjoint to wedge") {
    std::mt19937_64 g(4);
    for (int t = 0; t < 12; ++t) {
        const int q = t % 2 + 1, r = t % 3;
        auto x = random_field(q, g), y = random_field(r, g);
        auto f = random_form(q + r, g);
        // <i_x f, y> = <f, x ^ y>
        CHECK(natural_pairing(contract_right(x, f), y) == natural_pairing(f, wedge(x, y)));
        auto h = random_form(q, g), k = random_form(r, g);
        auto z = random_field(q + r, g);
        // <k, j_h z> = <k ^ h, z>
        CHECK(natural_pairing(k, contract_left(h, z)) == natural_pairing(wedge(k, h), z));
    }
}

TEST_CASE("contraction by a wedge is iterated contraction") {
    std::mt19937_64 g(5);
    for (int t = 0; t < 10; ++t) {
        auto x = random_field(1 + t % 2, g), y = random_field(1, g);
        auto f = random_form(3, g);
        CHECK(contract_right(wedge(x, y), f) == contract_right(y, contract_right(x, f)));
    }
}

TEST_CASE("basis contraction signs") {
    CHECK(contract_right(T("d2"), C("dx1^dx2^dx3")) == C("-dx1^dx3"));
    CHECK(contract_right(T("d1^d3"), C("dx1^dx2^dx3")) == C("-dx2"));
    CHECK(contract_left(C("dx2"), T("d1^d2^d3")) == T("-d1^d3"));
    CHECK(contract_left(C("dx3"), T("d1^d2^d3")) == T("d1^d2"));
}

TEST_CASE("de Rham differential") {
    CHECK(de_rham(Cotensor::scalar(Polynomial::parse(NV, "x1^2*x2"))) == C("2*x1*x2 dx1 + x1^2 dx2"));
    CHECK(de_rham(C("x3 dx1")) == C("-dx1^dx3"));
    std::mt19937_64 g(6);
    for (int t = 0; t < 10; ++t) {
        const int p = t % 3, q = (t + 2) % 3;
        auto a = random_form(p, g), b = random_form(q, g);
        CHECK(de_rham(de_rham(a)).is_zero());
        CHECK(de_rham(wedge(a, b)) == wedge(de_rham(a), b) + sign_pow(p) * wedge(a, de_rham(b)));
    }
}

TEST_CASE("Lie derivative along vector fields") {
    std::mt19937_64 g(7);
    for (int t = 0; t < 8; ++t) {
        auto X = random_field(1, g), Y = random_field(1, g);
        auto f = random_form(1 + t % 2, g);
        // Cartan: L_X f = d i_X f + i_X d f
        CHECK(lie_derivative(X, f) == de_rham(contract_right(X, f)) + contract_right(X, de_rham(f)));
        // L_X commutes with d
        CHECK(lie_derivative(X, de_rham(f)) == de_rham(lie_derivative(X, f)));
        // i_[X,Y] = [L_X, i_Y]
        CHECK(contract_right(schouten(X, Y), f) ==
              lie_derivative(X, contract_right(Y, f)) - contract_right(Y, lie_derivative(X, f)));
    }
}

TEST_CASE("Schouten bracket restricts to the Lie bracket of vector fields") {
    std::mt19937_64 g(8);
    for (int t = 0; t < 10; ++t) {
        auto X = random_field(1, g), Y = random_field(1, g);
        CHECK(schouten(X, Y) == lie_bracket_oracle(X, Y));
    }
    auto a = Tensor::scalar(Polynomial::parse(NV, "x1*x2"));
    auto X = T("x3 d1 + d2");
    CHECK(schouten(X, a) == Tensor::scalar(Polynomial::parse(NV, "x2*x3 + x1")));
    CHECK(schouten(a, X) == -schouten(X, a));
}

TEST_CASE("Schouten bracket is graded antisymmetric and satisfies Jacobi") {
    std::mt19937_64 g(9);
    for (int t = 0; t < 6; ++t) {
        const int p = 1 + t % 2, q = 1 + (t / 2) % 2, r = 1;
        auto P = random_field(p, g), Q = random_field(q, g), R = random_field(r, g);
        CHECK(schouten(P, Q) == -sign_pow((p - 1) * (q - 1)) * schouten(Q, P));
        CHECK(schouten(P, schouten(Q, R)) ==
              schouten(schouten(P, Q), R) + sign_pow((p - 1) * (q - 1)) * schouten(Q, schouten(P, R)));
    }
}

TEST_CASE("presymplectic plane: wedge does not pass through left contraction") {
    const int nv = 3;
    auto omega = Cotensor::parse(nv, "dx1^dx2");
    auto dx3 = Cotensor::parse(nv, "dx3");
    auto d1 = Tensor::parse(nv, "d1");
    CHECK(contract_right(contract_left(dx3, d1), omega).is_zero());
    auto rhs = wedge(dx3, contract_right(d1, omega));
    CHECK(rhs == Cotensor::parse(nv, "dx3^dx2"));
    CHECK_FALSE(rhs.is_zero());
}

TEST_CASE("coefficient partials and odd derivatives") {
    CHECK(coefficient_partial(C("x1^2 dx2"), 1) == C("2*x1 dx2"));
    CHECK(odd_right_derivative(T("d1^d2"), 2) == T("d1"));
    CHECK(odd_right_derivative(T("d1^d2"), 1) == T("-d2"));
}
