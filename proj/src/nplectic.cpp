#include "plectic/nplectic.hpp"

#include "plectic/linsolve.hpp"

#include <algorithm>
#include <functional>

namespace plectic {

NPlecticStructure::NPlecticStructure(int nvars_, int n_, Cotensor omega_, int degree_bound_)
    : nvars(nvars_), n(n_), omega(std::move(omega_)), degree_bound(degree_bound_) {
    if (omega.nvars() != nvars) throw std::invalid_argument("omega variable count differs from nvars");
    if (n < 0) throw std::invalid_argument("plectic degree must be non-negative");
    if (degree_bound < 0) throw std::invalid_argument("degree bound must be non-negative");
}

bool verify_cocycle(const NPlecticStructure& S) {
    auto r = S.omega.ranks();
    if (!r.empty() && (r.size() != 1 || r.front() != S.n + 1))
        throw std::invalid_argument("omega is not homogeneous of form degree n+1");
    return de_rham(S.omega).is_zero();
}

std::vector<Exponent> monomials_up_to(int nvars, int bound) {
    std::vector<Exponent> out;
    Exponent e(static_cast<std::size_t>(nvars), 0);
    std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == nvars) {
            out.push_back(e);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[static_cast<std::size_t>(var)] = k;
            rec(var + 1, left - k);
        }
        e[static_cast<std::size_t>(var)] = 0;
    };
    if (bound >= 0) rec(0, bound);
    std::sort(out.begin(), out.end(), ExponentLess{});
    return out;
}

std::vector<WedgeMask> masks_of_rank(int nvars, int r) {
    std::vector<WedgeMask> out;
    if (r < 0 || r > nvars) return out;
    for (WedgeMask m = 0; m < (WedgeMask(1) << nvars); ++m)
        if (mask_size(m) == r) out.push_back(m);
    std::sort(out.begin(), out.end(), MaskLess{});
    return out;
}

namespace {

struct EqKey {
    WedgeMask mask;
    Exponent e;
    bool operator<(const EqKey& o) const {
        if (mask != o.mask) return mask < o.mask;
        return e < o.e;
    }
};

}  // namespace

SolveReport solve_contraction(const NPlecticStructure& S, const Cotensor& target, int rank,
                              std::optional<int> bound, bool want_kernel) {
    SolveReport rep;
    const int nv = S.nvars;
    if (rank < 0 || rank > nv) {
        if (target.is_zero()) {
            rep.status = SolveStatus::Found;
            rep.solution = Tensor(nv);
        }
        return rep;
    }
    const int b = bound.value_or(S.degree_bound);
    auto masks = masks_of_rank(nv, rank);
    auto monos = monomials_up_to(nv, b);

    std::vector<std::pair<WedgeMask, const Exponent*>> unknowns;
    std::map<EqKey, std::map<int, Rational>> eqs;
    int col = 0;
    for (WedgeMask K : masks) {
        Cotensor iK = contract_right(Tensor::basis(nv, mask_indices(K)), S.omega);
        for (const auto& m : monos) {
            unknowns.emplace_back(K, &m);
            for (const auto& [I, c] : iK.terms()) {
                for (const auto& [e, v] : c.terms()) {
                    Exponent s(e.size());
                    for (std::size_t i = 0; i < e.size(); ++i) s[i] = e[i] + m[i];
                    eqs[EqKey{I, s}][col] += v;
                }
            }
            ++col;
        }
    }
    std::map<EqKey, Rational> rhs;
    for (const auto& [I, c] : target.terms())
        for (const auto& [e, v] : c.terms()) rhs[EqKey{I, e}] = v;
    for (const auto& kv : rhs) eqs.try_emplace(kv.first);

    SparseSystem sys(col);
    for (const auto& [key, row] : eqs) {
        auto it = rhs.find(key);
        sys.add_row(row, it == rhs.end() ? Rational(0) : it->second);
    }
    auto res = sys.solve(want_kernel);
    if (!res.solution) return rep;

    auto to_tensor = [&](const std::vector<Rational>& v) {
        Tensor t(nv);
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j] == 0) continue;
            t.add_term(unknowns[j].first, Polynomial::monomial(nv, *unknowns[j].second, v[j]));
        }
        return t;
    };
    rep.status = SolveStatus::Found;
    rep.solution = to_tensor(*res.solution);
    for (const auto& k : res.kernel) rep.kernel_basis.push_back(to_tensor(k));
    return rep;
}

namespace {

int form_degree_of(const Cotensor& f, std::optional<int> degree, const char* who) {
    if (f.is_zero()) {
        if (!degree) return -1;
        return -*degree;
    }
    auto r = f.rank();
    if (!r) throw std::invalid_argument(std::string(who) + ": cotensor is not homogeneous");
    if (degree && *degree != -*r) throw std::invalid_argument(std::string(who) + ": degree tag disagrees with cotensor");
    return *r;
}

}  // namespace

SolveReport solve_hamilton(const NPlecticStructure& S, const Cotensor& f, std::optional<int> degree,
                           bool want_kernel) {
    int p = form_degree_of(f, degree, "solve_hamilton");
    if (p < 0) {
        SolveReport r;
        r.status = SolveStatus::Found;
        r.solution = Tensor(S.nvars);
        return r;
    }
    return solve_contraction(S, de_rham(f), S.n - p, std::nullopt, want_kernel);
}

SolveReport solve_constraint(const NPlecticStructure& S, const Cotensor& f, std::optional<int> degree,
                             bool want_kernel) {
    int p = form_degree_of(f, degree, "solve_constraint");
    if (p < 0) {
        SolveReport r;
        r.status = SolveStatus::Found;
        r.solution = Tensor(S.nvars);
        return r;
    }
    return solve_contraction(S, f, S.n + 1 - p, std::nullopt, want_kernel);
}

bool verify_hamilton(const NPlecticStructure& S, const Cotensor& f, const Tensor& x) {
    return contract_right(x, S.omega) == de_rham(f);
}

bool verify_constraint(const NPlecticStructure& S, const Cotensor& f, const Tensor& y) {
    return contract_right(y, S.omega) == f;
}

PoissonCotensor make_poisson(const NPlecticStructure& S, const Cotensor& f, std::optional<int> degree) {
    int p = form_degree_of(f, degree, "make_poisson");
    if (p < 0) return PoissonCotensor{f, Tensor(S.nvars), Tensor(S.nvars), 0};
    auto c = solve_constraint(S, f, std::nullopt, false);
    if (c.status != SolveStatus::Found)
        throw NotPoissonWithinBound(NotPoissonWithinBound::Equation::Constraint,
                                    "no Poisson constraint i_y omega = f within the degree bound");
    auto h = solve_hamilton(S, f, std::nullopt, false);
    if (h.status != SolveStatus::Found)
        throw NotPoissonWithinBound(NotPoissonWithinBound::Equation::Hamilton,
                                    "no Hamilton tensor i_x omega = df within the degree bound");
    return PoissonCotensor{f, *h.solution, *c.solution, -p};
}

PoissonCotensor bundle_poisson(const NPlecticStructure& S, const Cotensor& f, const Tensor& x, const Tensor& y,
                               std::optional<int> degree) {
    int p = form_degree_of(f, degree, "bundle_poisson");
    if (!verify_hamilton(S, f, x))
        throw NotPoissonWithinBound(NotPoissonWithinBound::Equation::Hamilton, "i_x omega != df");
    if (!verify_constraint(S, f, y))
        throw NotPoissonWithinBound(NotPoissonWithinBound::Equation::Constraint, "i_y omega != f");
    return PoissonCotensor{f, x, y, p < 0 ? 0 : -p};
}

bool is_verified(const NPlecticStructure& S, const PoissonCotensor& p) {
    return verify_hamilton(S, p.f, p.x) && verify_constraint(S, p.f, p.y);
}

std::vector<Tensor> omega_kernel(const NPlecticStructure& S, int rank, std::optional<int> bound) {
    auto rep = solve_contraction(S, Cotensor(S.nvars), rank, bound, true);
    return rep.kernel_basis;
}

bool kernel_property_check(const NPlecticStructure& S, const PoissonCotensor& p, int samples) {
    const int form_deg = -p.degree;
    for (int r = 1; r <= std::min(form_deg, S.nvars); ++r) {
        auto ker = omega_kernel(S, r);
        std::size_t limit = samples > 0 ? std::min<std::size_t>(ker.size(), static_cast<std::size_t>(samples)) : ker.size();
        for (std::size_t i = 0; i < limit; ++i)
            if (!contract_right(ker[i], p.f).is_zero()) return false;
    }
    return true;
}

}  // namespace plectic
