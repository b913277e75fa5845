#ifndef PLECTIC_RANDOM_HPP
#define PLECTIC_RANDOM_HPP

#include "plectic/nplectic.hpp"

#include <random>
#include <vector>

namespace plectic {

struct RandomOptions {
    int min_rank = 1;         // wedge rank of the constraint tensor y
    int max_rank = 3;
    int poly_degree = 2;      // total degree of each coefficient
    int terms = 2;            // wedge monomials in y, and monomials per coefficient
    int coeff_range = 3;      // integer coefficients in [-range, range]
    // restrict variables that may appear in coefficients (1-based); empty = all
    std::vector<int> variables;
    int tries = 200;
};

Polynomial random_polynomial(int nvars, std::mt19937_64& rng, const RandomOptions& opt);
Tensor random_tensor(int nvars, int rank, std::mt19937_64& rng, const RandomOptions& opt);

// Draws y, sets f = i_y omega and solves for a Hamilton tensor, retrying until
// f is nonzero and Hamiltonian within the structure's bound.
PoissonCotensor random_poisson(const NPlecticStructure& S, std::mt19937_64& rng, const RandomOptions& opt = {});

// A Poisson cotensor whose constraint tensor is a sum of the given rank-q
// wedge monomials (1-based index lists) with random coefficients.
PoissonCotensor random_poisson_on(const NPlecticStructure& S, const std::vector<std::vector<int>>& monomials,
                                  std::mt19937_64& rng, const RandomOptions& opt = {});

}  // namespace plectic

#endif
