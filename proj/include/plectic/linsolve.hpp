#ifndef PLECTIC_LINSOLVE_HPP
#define PLECTIC_LINSOLVE_HPP

#include "plectic/polynomial.hpp"

#include <map>
#include <optional>
#include <vector>

namespace plectic {

// Sparse exact system A v = b over Q, reduced by fraction-free Gauss-Jordan
// elimination on integer rows (each row is cleared of denominators once and
// divided by its content after every update, so entries stay small).
class SparseSystem {
public:
    explicit SparseSystem(int ncols) : ncols_(ncols) {}

    int cols() const { return ncols_; }
    std::size_t rows() const { return rows_.size(); }

    void add_row(const std::map<int, Rational>& coeffs, const Rational& rhs);

    struct Result {
        std::optional<std::vector<Rational>> solution;  // free variables set to 0
        std::vector<std::vector<Rational>> kernel;      // one vector per free column
        int rank = 0;
    };

    Result solve(bool want_kernel = true) const;

private:
    struct Row {
        std::map<int, mpz_class> a;
        mpz_class b;
    };
    int ncols_;
    std::vector<Row> rows_;
};

}  // namespace plectic

#endif
