#ifndef PLECTIC_NPLECTIC_HPP
#define PLECTIC_NPLECTIC_HPP

#include "plectic/graded.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace plectic {

struct NPlecticStructure {
    int nvars = 0;
    int n = 1;              // omega has form degree n+1
    Cotensor omega;
    int degree_bound = 4;   // ansatz bound for the witness solver

    NPlecticStructure() = default;
    NPlecticStructure(int nvars_, int n_, Cotensor omega_, int degree_bound_ = 4);
};

// true iff d(omega) = 0; throws if omega is not of form degree n+1
bool verify_cocycle(const NPlecticStructure& S);

enum class SolveStatus { Found, NoSolutionWithinBound };

struct SolveReport {
    std::optional<Tensor> solution;
    std::vector<Tensor> kernel_basis;
    SolveStatus status = SolveStatus::NoSolutionWithinBound;
};

// Solve i_x omega = target for a tensor x of wedge rank `rank` whose coefficients
// are polynomials of total degree <= bound.
SolveReport solve_contraction(const NPlecticStructure& S, const Cotensor& target, int rank,
                              std::optional<int> bound = std::nullopt, bool want_kernel = true);

// i_x omega = df with |x| = |f| + n. A zero f needs its tensor degree spelled out.
SolveReport solve_hamilton(const NPlecticStructure& S, const Cotensor& f,
                           std::optional<int> degree = std::nullopt, bool want_kernel = true);
// i_y omega = f with |y| = |f| + n + 1.
SolveReport solve_constraint(const NPlecticStructure& S, const Cotensor& f,
                             std::optional<int> degree = std::nullopt, bool want_kernel = true);

bool verify_hamilton(const NPlecticStructure& S, const Cotensor& f, const Tensor& x);
bool verify_constraint(const NPlecticStructure& S, const Cotensor& f, const Tensor& y);

// A homogeneous cotensor f with witnesses i_x omega = df and i_y omega = f.
// `degree` is the tensor degree |f| (= minus the form degree), kept explicitly
// so that zero cotensors still carry a degree.
struct PoissonCotensor {
    Cotensor f;
    Tensor x;
    Tensor y;
    int degree = 0;

    int x_degree(int n) const { return degree + n; }
    int y_degree(int n) const { return degree + n + 1; }
};

class NotPoissonWithinBound : public std::runtime_error {
public:
    enum class Equation { Hamilton, Constraint };
    NotPoissonWithinBound(Equation which, const std::string& what)
        : std::runtime_error(what), which_(which) {}
    Equation which() const { return which_; }

private:
    Equation which_;
};

PoissonCotensor make_poisson(const NPlecticStructure& S, const Cotensor& f,
                             std::optional<int> degree = std::nullopt);

// Bundle user-supplied witnesses after checking both equations exactly.
PoissonCotensor bundle_poisson(const NPlecticStructure& S, const Cotensor& f, const Tensor& x,
                               const Tensor& y, std::optional<int> degree = std::nullopt);

bool is_verified(const NPlecticStructure& S, const PoissonCotensor& p);

// Kernel elements z of omega (i_z omega = 0) for wedge ranks 1..form degree of f
// must satisfy i_z f = 0. `samples` caps the number checked per rank (0 = all).
bool kernel_property_check(const NPlecticStructure& S, const PoissonCotensor& p, int samples = 0);

// kernel of i_(.) omega on rank-r tensors within the bound
std::vector<Tensor> omega_kernel(const NPlecticStructure& S, int rank, std::optional<int> bound = std::nullopt);

// all exponent vectors in nvars variables of total degree <= bound, graded-lex order
std::vector<Exponent> monomials_up_to(int nvars, int bound);

// the wedge masks of rank r in n variables, ascending
std::vector<WedgeMask> masks_of_rank(int nvars, int r);

}  // namespace plectic

#endif
