#include "plectic/graded.hpp"

#include "plectic/combinatorics.hpp"

#include "expr_parser.hpp"

#include <algorithm>

namespace plectic {

std::vector<int> mask_indices(WedgeMask m) {
    std::vector<int> out;
    while (m) {
        int b = std::countr_zero(m);
        out.push_back(b + 1);
        m &= m - 1;
    }
    return out;
}

WedgeMask indices_mask(const std::vector<int>& ascending) {
    WedgeMask m = 0;
    for (int i : ascending) m |= WedgeMask(1) << (i - 1);
    return m;
}

int merge_sign(WedgeMask I, WedgeMask J) {
    int count = 0;
    WedgeMask rest = I;
    while (rest) {
        int b = std::countr_zero(rest);
        count += std::popcount(J & ((WedgeMask(1) << b) - 1));
        rest &= rest - 1;
    }
    return sign_pow(count);
}

bool MaskLess::operator()(WedgeMask a, WedgeMask b) const {
    int sa = std::popcount(a), sb = std::popcount(b);
    if (sa != sb) return sa < sb;
    return mask_indices(a) < mask_indices(b);
}

template <Kind K>
Graded<K> Graded<K>::scalar(const Polynomial& a) {
    Graded g(a.nvars());
    g.add_term(0, a);
    return g;
}

template <Kind K>
Graded<K> Graded<K>::basis(int nvars, const std::vector<int>& indices, const Polynomial& coeff) {
    if (nvars > kMaxVars) throw std::invalid_argument("at most 32 variables supported");
    if (coeff.nvars() != nvars) throw std::invalid_argument("basis: coefficient variable-count mismatch");
    Graded g(nvars);
    WedgeMask m = 0;
    int inversions = 0;
    for (int i : indices) {
        if (i < 1 || i > nvars) throw std::out_of_range("basis index out of range");
        WedgeMask bit = WedgeMask(1) << (i - 1);
        if (m & bit) return g;
        inversions += std::popcount(m & ~((bit << 1) - 1));  // earlier indices larger than i
        m |= bit;
    }
    Polynomial c = coeff;
    if (inversions % 2) c = -c;
    g.add_term(m, c);
    return g;
}

template <Kind K>
Graded<K> Graded<K>::basis(int nvars, const std::vector<int>& indices) {
    return basis(nvars, indices, Polynomial(nvars, 1));
}

template <Kind K>
Polynomial Graded<K>::coefficient(WedgeMask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Polynomial(nvars_) : it->second;
}

template <Kind K>
std::vector<int> Graded<K>::ranks() const {
    std::vector<int> r;
    for (const auto& kv : terms_) {
        int s = mask_size(kv.first);
        if (r.empty() || r.back() != s) r.push_back(s);
    }
    return r;
}

template <Kind K>
std::optional<int> Graded<K>::rank() const {
    auto r = ranks();
    if (r.size() != 1) return std::nullopt;
    return r.front();
}

template <Kind K>
std::optional<int> Graded<K>::tensor_degree() const {
    auto r = rank();
    if (!r) return std::nullopt;
    return tensor_degree_of_rank(*r);
}

template <Kind K>
std::map<int, Graded<K>> Graded<K>::parts() const {
    std::map<int, Graded> out;
    for (const auto& [m, c] : terms_) {
        auto it = out.try_emplace(mask_size(m), nvars_).first;
        it->second.terms_.emplace(m, c);
    }
    return out;
}

template <Kind K>
Graded<K> Graded<K>::part(int r) const {
    Graded g(nvars_);
    for (const auto& [m, c] : terms_)
        if (mask_size(m) == r) g.terms_.emplace(m, c);
    return g;
}

template <Kind K>
void Graded<K>::check(const Graded& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("(co)tensor variable-count mismatch");
}

template <Kind K>
void Graded<K>::add_term(WedgeMask m, const Polynomial& c) {
    if (c.is_zero()) return;
    if (c.nvars() != nvars_) throw std::invalid_argument("coefficient variable-count mismatch");
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

template <Kind K>
void Graded<K>::add_scaled(const Graded& o, const Rational& c) {
    check(o);
    if (c == 0) return;
    for (const auto& [m, p] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, nvars_);
        it->second.add_scaled(p, c);
        if (it->second.is_zero()) terms_.erase(it);
    }
}

template <Kind K>
Graded<K>& Graded<K>::operator+=(const Graded& o) {
    add_scaled(o, 1);
    return *this;
}

template <Kind K>
Graded<K>& Graded<K>::operator-=(const Graded& o) {
    add_scaled(o, -1);
    return *this;
}

template <Kind K>
Graded<K>& Graded<K>::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& kv : terms_) kv.second *= c;
    return *this;
}

template <Kind K>
Graded<K> Graded<K>::operator-() const {
    Graded g = *this;
    return g *= Rational(-1);
}

template <Kind K>
Graded<K> Graded<K>::times(const Polynomial& p) const {
    Graded g(nvars_);
    for (const auto& [m, c] : terms_) g.add_term(m, c * p);
    return g;
}

template <Kind K>
int Graded<K>::coefficient_degree() const {
    int d = -1;
    for (const auto& kv : terms_) d = std::max(d, kv.second.total_degree());
    return d;
}

template <Kind K>
std::size_t Graded<K>::term_count() const {
    std::size_t n = 0;
    for (const auto& kv : terms_) n += kv.second.terms().size();
    return n;
}

template <Kind K>
std::string Graded<K>::str() const {
    if (terms_.empty()) return "0";
    const char* sym = K == Kind::Tangent ? "d" : "dx";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string b;
        for (int i : mask_indices(m)) {
            if (!b.empty()) b += "^";
            b += sym + std::to_string(i);
        }
        bool single = c.terms().size() == 1;
        bool neg = single && c.terms().begin()->second < 0;
        Polynomial a = neg ? -c : c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        if (b.empty()) {
            out += single ? a.str() : "(" + a.str() + ")";
        } else if (single && a == Polynomial(nvars_, 1)) {
            out += b;
        } else {
            out += (single ? a.str() : "(" + a.str() + ")") + " " + b;
        }
    }
    return out;
}

namespace {

template <Kind K>
struct GradedOps {
    int nvars;
    Graded<K> constant(const Rational& r) const { return Graded<K>::scalar(Polynomial(nvars, r)); }
    Graded<K> var(long i, int col) const {
        if (i < 1 || i > nvars)
            throw ParseError(col, "column " + std::to_string(col) + ": variable x" + std::to_string(i) +
                                      " out of range");
        return Graded<K>::scalar(Polynomial::variable(nvars, static_cast<int>(i)));
    }
    Graded<K> basis(detail::Tok kind, const std::vector<long>& idx, int col) const {
        bool tangent = kind == detail::Tok::Tangent;
        if (tangent != (K == Kind::Tangent))
            throw ParseError(col, "column " + std::to_string(col) +
                                      (tangent ? ": tangent basis d<K> in a cotensor"
                                               : ": form basis dx<K> in a tensor"));
        std::vector<int> ii;
        for (long i : idx) {
            if (i < 1 || i > nvars)
                throw ParseError(col, "column " + std::to_string(col) + ": basis index " + std::to_string(i) +
                                          " out of range");
            ii.push_back(static_cast<int>(i));
        }
        return Graded<K>::basis(nvars, ii);
    }
    Graded<K> mul(const Graded<K>& a, const Graded<K>& b) const { return wedge(a, b); }
    Graded<K> add(const Graded<K>& a, const Graded<K>& b) const { return a + b; }
    Graded<K> neg(const Graded<K>& a) const { return -a; }
    Graded<K> pow(const Graded<K>& a, int e) const {
        Graded<K> r = constant(1);
        for (int i = 0; i < e; ++i) r = wedge(r, a);
        return r;
    }
};

template <Kind K>
Graded<K> wedge_impl(const Graded<K>& a, const Graded<K>& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("wedge: variable-count mismatch");
    Graded<K> r(a.nvars());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            if (ma & mb) continue;
            Polynomial c(a.nvars());
            c.add_product(ca, cb, merge_sign(ma, mb));
            r.add_term(ma | mb, c);
        }
    }
    return r;
}

}  // namespace

template <Kind K>
Graded<K> Graded<K>::parse(int nvars, std::string_view text) {
    GradedOps<K> ops{nvars};
    return detail::ExprParser<Graded<K>, GradedOps<K>>(text, ops).parse();
}

template class Graded<Kind::Tangent>;
template class Graded<Kind::Form>;

Tensor wedge(const Tensor& x, const Tensor& y) { return wedge_impl(x, y); }
Cotensor wedge(const Cotensor& f, const Cotensor& g) { return wedge_impl(f, g); }

Polynomial natural_pairing(const Cotensor& f, const Tensor& x) {
    if (f.nvars() != x.nvars()) throw std::invalid_argument("pairing: variable-count mismatch");
    Polynomial r(f.nvars());
    for (const auto& [m, a] : f.terms()) {
        auto it = x.terms().find(m);
        if (it != x.terms().end()) r.add_product(a, it->second, 1);
    }
    return r;
}

Cotensor contract_right(const Tensor& x, const Cotensor& f) {
    if (f.nvars() != x.nvars()) throw std::invalid_argument("contraction: variable-count mismatch");
    Cotensor r(f.nvars());
    for (const auto& [J, a] : x.terms()) {
        for (const auto& [I, b] : f.terms()) {
            if ((J & I) != J) continue;
            WedgeMask rest = I & ~J;
            Polynomial c(f.nvars());
            c.add_product(a, b, merge_sign(J, rest));
            r.add_term(rest, c);
        }
    }
    return r;
}

Tensor contract_left(const Cotensor& f, const Tensor& x) {
    if (f.nvars() != x.nvars()) throw std::invalid_argument("contraction: variable-count mismatch");
    Tensor r(f.nvars());
    for (const auto& [J, a] : f.terms()) {
        for (const auto& [I, b] : x.terms()) {
            if ((J & I) != J) continue;
            WedgeMask rest = I & ~J;
            Polynomial c(f.nvars());
            c.add_product(a, b, merge_sign(rest, J));
            r.add_term(rest, c);
        }
    }
    return r;
}

Cotensor de_rham(const Cotensor& f) {
    const int n = f.nvars();
    Cotensor r(n);
    for (const auto& [I, a] : f.terms()) {
        for (int i = 1; i <= n; ++i) {
            WedgeMask bit = WedgeMask(1) << (i - 1);
            if (I & bit) continue;
            Polynomial da = partial(a, i);
            if (da.is_zero()) continue;
            r.add_term(I | bit, merge_sign(bit, I) == 1 ? da : -da);
        }
    }
    return r;
}

Cotensor lie_derivative(const Tensor& x, const Cotensor& f) {
    Cotensor r(f.nvars());
    Cotensor df = de_rham(f);
    for (const auto& [q, xq] : x.parts()) {
        r += de_rham(contract_right(xq, f));
        r.add_scaled(contract_right(xq, df), -sign_pow(q));
    }
    return r;
}

template <Kind K>
Graded<K> coefficient_partial(const Graded<K>& v, int i) {
    Graded<K> r(v.nvars());
    for (const auto& [m, c] : v.terms()) r.add_term(m, partial(c, i));
    return r;
}

template Tensor coefficient_partial(const Tensor&, int);
template Cotensor coefficient_partial(const Cotensor&, int);

Tensor odd_right_derivative(const Tensor& x, int i) {
    Tensor r(x.nvars());
    WedgeMask bit = WedgeMask(1) << (i - 1);
    for (const auto& [I, c] : x.terms()) {
        if (!(I & bit)) continue;
        int after = std::popcount(I & ~((bit << 1) - 1));
        r.add_term(I & ~bit, after % 2 ? -c : c);
    }
    return r;
}

Tensor schouten(const Tensor& x, const Tensor& y) {
    if (x.nvars() != y.nvars()) throw std::invalid_argument("schouten: variable-count mismatch");
    const int n = x.nvars();
    Tensor r(n);
    auto xp = x.parts();
    auto yp = y.parts();
    for (const auto& [p, xq] : xp) {
        for (const auto& [q, yq] : yp) {
            int s = sign_pow(static_cast<long>(p - 1) * (q - 1));
            for (int i = 1; i <= n; ++i) {
                r += wedge(odd_right_derivative(xq, i), coefficient_partial(yq, i));
                r.add_scaled(wedge(odd_right_derivative(yq, i), coefficient_partial(xq, i)), -s);
            }
        }
    }
    return r;
}

}  // namespace plectic
