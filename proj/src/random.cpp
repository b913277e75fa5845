#include "plectic/random.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace plectic {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<int> pool(int nvars, const RandomOptions& opt) {
    if (!opt.variables.empty()) return opt.variables;
    std::vector<int> v(static_cast<std::size_t>(nvars));
    std::iota(v.begin(), v.end(), 1);
    return v;
}

}  // namespace

Polynomial random_polynomial(int nvars, std::mt19937_64& rng, const RandomOptions& opt) {
    const auto vars = pool(nvars, opt);
    Polynomial p(nvars);
    for (int t = 0; t < opt.terms; ++t) {
        Exponent e(static_cast<std::size_t>(nvars), 0);
        const int deg = uniform(rng, 0, opt.poly_degree);
        for (int i = 0; i < deg; ++i) ++e[static_cast<std::size_t>(vars[static_cast<std::size_t>(uniform(rng, 0, int(vars.size()) - 1))] - 1)];
        p += Polynomial::monomial(nvars, e, Rational(uniform(rng, -opt.coeff_range, opt.coeff_range)));
    }
    return p;
}

Tensor random_tensor(int nvars, int rank, std::mt19937_64& rng, const RandomOptions& opt) {
    Tensor t(nvars);
    std::vector<int> idx(static_cast<std::size_t>(nvars));
    std::iota(idx.begin(), idx.end(), 1);
    for (int i = 0; i < opt.terms; ++i) {
        std::shuffle(idx.begin(), idx.end(), rng);
        std::vector<int> pickd(idx.begin(), idx.begin() + rank);
        t += Tensor::basis(nvars, pickd, random_polynomial(nvars, rng, opt));
    }
    return t;
}

namespace {

std::optional<PoissonCotensor> complete(const NPlecticStructure& S, const Tensor& y, int rank) {
    Cotensor f = contract_right(y, S.omega);
    if (f.is_zero()) return std::nullopt;
    const int degree = -(S.n + 1 - rank);
    auto h = solve_hamilton(S, f, degree, false);
    if (!h.solution) return std::nullopt;
    return PoissonCotensor{f, *h.solution, y, degree};
}

}  // namespace

PoissonCotensor random_poisson(const NPlecticStructure& S, std::mt19937_64& rng, const RandomOptions& opt) {
    const int hi = std::min({opt.max_rank, S.n + 1, S.nvars});
    if (hi < opt.min_rank) throw std::invalid_argument("random_poisson: empty rank range");
    for (int t = 0; t < opt.tries; ++t) {
        const int q = uniform(rng, opt.min_rank, hi);
        if (auto p = complete(S, random_tensor(S.nvars, q, rng, opt), q)) return *p;
    }
    throw std::runtime_error("random_poisson: no Poisson cotensor found within the retry budget");
}

PoissonCotensor random_poisson_on(const NPlecticStructure& S, const std::vector<std::vector<int>>& monomials,
                                  std::mt19937_64& rng, const RandomOptions& opt) {
    if (monomials.empty()) throw std::invalid_argument("random_poisson_on: no monomials");
    const int q = static_cast<int>(monomials.front().size());
    for (int t = 0; t < opt.tries; ++t) {
        Tensor y(S.nvars);
        for (const auto& m : monomials) {
            if (static_cast<int>(m.size()) != q) throw std::invalid_argument("random_poisson_on: mixed ranks");
            y += Tensor::basis(S.nvars, m, random_polynomial(S.nvars, rng, opt));
        }
        if (auto p = complete(S, y, q)) return *p;
    }
    throw std::runtime_error("random_poisson_on: no Poisson cotensor found within the retry budget");
}

}  // namespace plectic
