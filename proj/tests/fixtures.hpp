#ifndef PLECTIC_TEST_FIXTURES_HPP
#define PLECTIC_TEST_FIXTURES_HPP

#include "plectic/homotopy.hpp"
#include "plectic/random.hpp"
#include "plectic/structure_file.hpp"

#include <random>
#include <string>
#include <vector>

namespace fx {

using namespace plectic;

inline Cotensor C(int nv, const char* s) { return Cotensor::parse(nv, s); }
inline Tensor T(int nv, const char* s) { return Tensor::parse(nv, s); }

// the 3-plectic structure on R^6 with two Poisson 2-forms and a closed non-Poisson one
struct R6 {
    NPlecticStructure S{6, 3, C(6, "dx1^dx3^dx5^dx6 + dx2^dx4^dx5^dx6"), 4};
    Cotensor f1 = C(6, "(x1^2*x3 - x4) dx5^dx6");
    Cotensor f2 = C(6, "-(x3 + x2^2*x4) dx5^dx6");
    Cotensor f3 = C(6, "dx1^dx2");
    // reference witnesses for the example, constraint tensors with their original sign
    Tensor x1 = T(6, "x1^2 d1 - d2 - 2*x1*x3 d3");
    Tensor x2 = T(6, "-d1 - x2^2 d2 + 2*x2*x4 d4");
    Tensor y1 = T(6, "(x1^2*x3 - x4) d3^d1");
    Tensor y2 = T(6, "-(x3 + x2^2*x4) d4^d2");

    PoissonCotensor p1() const { return PoissonCotensor{f1, x1, -y1, -2}; }
    PoissonCotensor p2() const { return PoissonCotensor{f2, x2, -y2, -2}; }
};

// symplectic plane
inline NPlecticStructure plane() { return NPlecticStructure(2, 1, C(2, "dx1^dx2"), 4); }

inline std::mt19937_64 rng(unsigned long long seed) { return std::mt19937_64(seed); }

inline std::vector<PoissonCotensor> pool(const NPlecticStructure& S, int count, unsigned long long seed,
                                         RandomOptions opt = {}) {
    auto g = rng(seed);
    std::vector<PoissonCotensor> v;
    for (int i = 0; i < count; ++i) v.push_back(random_poisson(S, g, opt));
    return v;
}

// Poisson 2-forms on R^6 whose constraint mixes d1^d3, d2^d4 and d5^d6, so that
// brackets of three or more arguments do not vanish identically
inline PoissonCotensor rich(const NPlecticStructure& S, std::mt19937_64& g) {
    RandomOptions all;
    RandomOptions tail;
    tail.variables = {5, 6};
    for (int t = 0; t < 200; ++t) {
        Tensor y = Tensor::basis(6, {1, 3}, random_polynomial(6, g, all)) +
                   Tensor::basis(6, {2, 4}, random_polynomial(6, g, all)) +
                   Tensor::basis(6, {5, 6}, random_polynomial(6, g, tail));
        Cotensor f = contract_right(y, S.omega);
        if (f.is_zero()) continue;
        auto h = solve_hamilton(S, f, -2, false);
        if (h.solution) return PoissonCotensor{f, *h.solution, y, -2};
    }
    throw std::runtime_error("rich: retry budget exhausted");
}

inline std::vector<PoissonCotensor> rich_pool(const NPlecticStructure& S, int count, unsigned long long seed) {
    auto g = rng(seed);
    std::vector<PoissonCotensor> v;
    for (int i = 0; i < count; ++i) v.push_back(rich(S, g));
    return v;
}

// functions on the plane, packaged with their witnesses
inline PoissonCotensor function_on_plane(const NPlecticStructure& S, const Polynomial& a) {
    return make_poisson(S, Cotensor::scalar(a), 0);
}

inline std::string data_path(const std::string& name) { return std::string(PLECTIC_DATA_DIR) + "/" + name; }

}  // namespace fx

#endif
