#ifndef PLECTIC_GRADED_HPP
#define PLECTIC_GRADED_HPP

#include "plectic/polynomial.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace plectic {

// A wedge monomial d_{i1} ^ ... ^ d_{iq} (or dx^{i1} ^ ...) with i1 < ... < iq is
// stored as the bit set {i1..iq}; bit i-1 stands for index i. This caps n at 32.
using WedgeMask = std::uint32_t;
constexpr int kMaxVars = 32;

inline int mask_size(WedgeMask m) { return std::popcount(m); }
std::vector<int> mask_indices(WedgeMask m);  // ascending, 1-based
WedgeMask indices_mask(const std::vector<int>& ascending);

// Sign of the shuffle that sorts the concatenation I ++ J of two disjoint
// ascending index sets: (-1)^{#{(i,j) : i in I, j in J, i > j}}.
int merge_sign(WedgeMask I, WedgeMask J);

// Graded-lex order on wedge monomials, used for canonical printing.
struct MaskLess {
    bool operator()(WedgeMask a, WedgeMask b) const;
};

enum class Kind { Tangent, Form };

// Element of the exterior algebra over the polynomial ring: multivector fields
// (Kind::Tangent, basis d_i) or differential forms (Kind::Form, basis dx^i).
// Mixed wedge degrees are allowed in storage.
template <Kind K>
class Graded {
public:
    using Terms = std::map<WedgeMask, Polynomial, MaskLess>;

    explicit Graded(int nvars = 0) : nvars_(nvars) {}

    static Graded scalar(const Polynomial& a);
    // basis monomial from 1-based indices in any order; repeated index gives 0
    static Graded basis(int nvars, const std::vector<int>& indices, const Polynomial& coeff);
    static Graded basis(int nvars, const std::vector<int>& indices);
    static Graded parse(int nvars, std::string_view text);

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Polynomial coefficient(WedgeMask m) const;

    // wedge degrees present; a homogeneous element has at most one
    std::vector<int> ranks() const;
    std::optional<int> rank() const;  // nullopt for zero or mixed
    bool homogeneous() const { return ranks().size() <= 1; }
    std::map<int, Graded> parts() const;
    Graded part(int rank) const;

    // tensor grading: +q for q-vectors, -p for p-forms
    static constexpr int tensor_degree_of_rank(int r) { return K == Kind::Tangent ? r : -r; }
    std::optional<int> tensor_degree() const;

    void add_term(WedgeMask m, const Polynomial& c);
    void add_scaled(const Graded& o, const Rational& c);
    Graded& operator+=(const Graded& o);
    Graded& operator-=(const Graded& o);
    Graded& operator*=(const Rational& c);
    Graded operator-() const;
    friend Graded operator+(Graded a, const Graded& b) { return a += b; }
    friend Graded operator-(Graded a, const Graded& b) { return a -= b; }
    friend Graded operator*(Graded a, const Rational& c) { return a *= c; }
    friend Graded operator*(const Rational& c, Graded a) { return a *= c; }
    friend Graded operator*(int c, Graded a) { return a *= Rational(c); }

    Graded times(const Polynomial& p) const;

    bool operator==(const Graded& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Graded& o) const { return !(*this == o); }

    // Largest total degree of any coefficient, -1 for zero.
    int coefficient_degree() const;
    std::size_t term_count() const;

    std::string str() const;

private:
    void check(const Graded& o) const;
    int nvars_;
    Terms terms_;
};

using Tensor = Graded<Kind::Tangent>;
using Cotensor = Graded<Kind::Form>;

Tensor wedge(const Tensor& x, const Tensor& y);
Cotensor wedge(const Cotensor& f, const Cotensor& g);
inline Tensor wedge_tensor(const Tensor& x, const Tensor& y) { return wedge(x, y); }
inline Cotensor wedge_cotensor(const Cotensor& f, const Cotensor& g) { return wedge(f, g); }

// <f, x>: zero unless the wedge degrees agree; on basis monomials the determinant
// of the Kronecker matrix, which is 1 exactly when the ascending index sets coincide.
Polynomial natural_pairing(const Cotensor& f, const Tensor& x);

// Right contraction i_x f, characterised by <i_x f, y> = <f, x ^ y>.
// On basis monomials i_{d_J} dx^I = sign(J ++ I\J) dx^{I\J}.
Cotensor contract_right(const Tensor& x, const Cotensor& f);

// Left contraction j_f x, characterised by <g, j_f x> = <g ^ f, x>.
// On basis monomials j_{dx^J} d_I = sign(I\J ++ J) d_{I\J}.
Tensor contract_left(const Cotensor& f, const Tensor& x);

Cotensor de_rham(const Cotensor& f);

// L_x f = d i_x f - (-1)^{|x|} i_x d f, applied to each homogeneous part of x.
Cotensor lie_derivative(const Tensor& x, const Cotensor& f);

// Schouten-Nijenhuis bracket. Computed in odd-coordinate form
//   [P,Q] = sum_i (P <d/dtheta_i) ^ dQ/dx_i - (-1)^{(p-1)(q-1)} (Q <d/dtheta_i) ^ dP/dx_i
// which restricts to the Lie bracket on vector fields and to [x,a] = D_x a,
// [a,x] = -D_x a on a function a.
Tensor schouten(const Tensor& x, const Tensor& y);

// coefficient-wise derivative d/dx_i, keeping the wedge monomial
template <Kind K>
Graded<K> coefficient_partial(const Graded<K>& v, int i);

// right derivative along the odd generator paired with index i
Tensor odd_right_derivative(const Tensor& x, int i);

extern template class Graded<Kind::Tangent>;
extern template class Graded<Kind::Form>;

}  // namespace plectic

#endif
