#ifndef PLECTIC_HOMOTOPY_HPP
#define PLECTIC_HOMOTOPY_HPP

#include "plectic/nplectic.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace plectic {

// Where a witness came from: the closed formula, or the bounded solver after the
// formula failed to verify.
enum class WitnessSource { Formula, Solver };

struct BracketResult {
    Cotensor value;
    Tensor hamilton;     // i_hamilton omega = d value
    Tensor constraint;   // i_constraint omega = value
    int degree = 0;      // tensor degree of value
    WitnessSource hamilton_source = WitnessSource::Formula;
    WitnessSource constraint_source = WitnessSource::Formula;

    PoissonCotensor poisson() const { return PoissonCotensor{value, hamilton, constraint, degree}; }
};

struct CheckReport {
    std::string name;
    Cotensor residual;
    bool passed = false;
    // set when some intermediate operand had no verifiable witness and the
    // closed-form one was used unverified
    std::vector<std::string> notes;
};

class WitnessFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct HomotopyOptions {
    int max_k = 6;  // largest bracket arity accepted
};

// Sign helpers shared with the structure-map layer. All take tensor degrees.
namespace signs {
// |s^{n-1} f| = |f| + n - 1 = |x| - 1
inline int shifted(int f_degree, int n) { return f_degree + n - 1; }
// |s x| = |x| + 1
inline int suspended(int x_degree) { return x_degree + 1; }
}  // namespace signs

class Homotopy {
public:
    explicit Homotopy(NPlecticStructure S, HomotopyOptions opt = {});
    ~Homotopy();
    Homotopy(const Homotopy&) = delete;
    Homotopy& operator=(const Homotopy&) = delete;

    const NPlecticStructure& structure() const { return S_; }
    int n() const { return S_.n; }

    // verified operations
    BracketResult product(const PoissonCotensor& a, const PoissonCotensor& b) const;
    BracketResult differential(const PoissonCotensor& a) const;
    BracketResult bracket2(const PoissonCotensor& a, const PoissonCotensor& b) const;
    BracketResult bracket3(const PoissonCotensor& a, const PoissonCotensor& b, const PoissonCotensor& c) const;
    BracketResult bracket_k(const std::vector<PoissonCotensor>& args) const;  // any k >= 1
    BracketResult leibniz1(const PoissonCotensor& a, const PoissonCotensor& b, const PoissonCotensor& c) const;
    // k left arguments, k >= 1 (k = 1 is the first operator)
    BracketResult leibniz_k(const std::vector<PoissonCotensor>& left, const PoissonCotensor& r1,
                            const PoissonCotensor& r2) const;

    // closed-form operands, witnesses exactly as the formulas give them
    PoissonCotensor formula_product(const PoissonCotensor& a, const PoissonCotensor& b) const;
    PoissonCotensor formula_bracket(const std::vector<PoissonCotensor>& args) const;
    PoissonCotensor formula_leibniz(const std::vector<PoissonCotensor>& left, const PoissonCotensor& r1,
                                    const PoissonCotensor& r2) const;

    // identities; residual = left side minus right side
    CheckReport check_jacobi(int k, const std::vector<PoissonCotensor>& args) const;
    // sum over Sh(2,1) of signed {{f_a,f_b},f_c}; d of it vanishes
    Cotensor jacobi_expression(const PoissonCotensor& a, const PoissonCotensor& b, const PoissonCotensor& c) const;
    // k left arguments plus the right pair; k = 1 is the dimension-two equation
    CheckReport check_leibniz_first(int k, const std::vector<PoissonCotensor>& left, const PoissonCotensor& r1,
                                    const PoissonCotensor& r2) const;
    // k + 4 arguments; k = 0 is the dimension-two equation
    CheckReport check_leibniz_second(int k, const std::vector<PoissonCotensor>& args) const;
    // k + 3 arguments; k = 1 is the dimension-two equation
    CheckReport check_leibniz_third(int k, const std::vector<PoissonCotensor>& args) const;
    CheckReport rogers_relation(const PoissonCotensor& a, const PoissonCotensor& b) const;

    // the classical symplectic bracket -i_{x_a ^ x_b} omega
    Cotensor classical_bracket(const PoissonCotensor& a, const PoissonCotensor& b) const;

    struct Context;

private:
    BracketResult finish(const PoissonCotensor& formula) const;

    NPlecticStructure S_;
    HomotopyOptions opt_;
};

}  // namespace plectic

#endif
