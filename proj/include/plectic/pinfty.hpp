#ifndef PLECTIC_PINFTY_HPP
#define PLECTIC_PINFTY_HPP

#include "plectic/combinatorics.hpp"
#include "plectic/homotopy.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace plectic {

// A letter of a tensor word is a shifted Poisson cotensor s f, of degree |f| + 1.
using Letter = std::shared_ptr<const PoissonCotensor>;

Letter make_letter(PoissonCotensor p);
int letter_degree(const Letter& l);

// One factor of the cofree coalgebra: a word of letters, taken up to the
// images of the shuffle maps. Its degree carries the extra s^{n-2}.
struct WordBlock {
    std::vector<Letter> factors;
    int size() const { return static_cast<int>(factors.size()); }
    int degree(int n) const;
};

// Sign conventions for the structure equation. Uncorrected uses the extension
// sign (-1)^{k |left letters|} and D_{1,2} = (-1)^{|sf_2|} s{f_1||f_2,f_3};
// Corrected uses the exponent (n+1)k+n and the additional decalage factor
// (-1)^{|s^{n-1} f_1|} on D_{1,2}, under which the low profiles close up.
enum class SignConvention { Uncorrected, Corrected };

class StructureMapFamily;

// D_{q_1..q_k}: evaluates word blocks of lengths q_1..q_k; nullopt means the map is zero.
struct StructureMap {
    std::vector<int> signature;
    const StructureMapFamily* family = nullptr;

    std::optional<PoissonCotensor> operator()(const std::vector<WordBlock>& blocks) const;
    int degree(int n) const { return static_cast<int>(signature.size()) - n; }
};

class StructureMapFamily {
public:
    explicit StructureMapFamily(const Homotopy& H, SignConvention c = SignConvention::Corrected)
        : H_(H), conv_(c) {}

    const Homotopy& homotopy() const { return H_; }
    SignConvention convention() const { return conv_; }
    int n() const { return H_.n(); }

    StructureMap map(std::vector<int> signature) const { return StructureMap{std::move(signature), this}; }

    // D_1 = s d, D_2 = signed wedge, D_{1..1} = k-bracket, one 2-block among
    // singletons = Leibniz operator (after moving the pair last); all else zero.
    std::optional<PoissonCotensor> evaluate(const std::vector<WordBlock>& blocks) const;

    // signatures of the nonzero maps with at most max_k blocks
    std::vector<std::vector<int>> nonzero_signatures(int max_k) const;

private:
    const Homotopy& H_;
    SignConvention conv_;
};

StructureMapFamily build_structure_maps(const Homotopy& H, SignConvention c = SignConvention::Corrected);

struct ExtendedTerm {
    int sign = 1;
    std::vector<Letter> word;  // left letters, the value of D, right letters
};

// The shifted straight shuffle extension of D to blocks of lengths p_j >= q_j.
std::vector<ExtendedTerm> straight_shuffle_extension(const StructureMap& D, const std::vector<WordBlock>& blocks);

// Residual of the structure equation for word blocks of the given profile.
// Desk scale: at most 3 blocks, each of length at most 3.
CheckReport check_structure_equation(const StructureMapFamily& maps, const std::vector<WordBlock>& blocks);

// sum over (i, p-i)-shuffles of the i-th block with Koszul signs, fed into D in
// place of that block; it lies in the shuffle image and must evaluate to zero
Cotensor shuffle_image_residual(const StructureMap& D, const std::vector<WordBlock>& blocks, int block, int i);

// The homotopy-module identity that a profile instantiates, evaluated on the
// same letters; nullopt if the profile has no separate checker.
std::optional<CheckReport> companion_check(const Homotopy& H, const std::vector<WordBlock>& blocks);

// residual a equals c * residual b for some c in {+1, -1}
bool equal_up_to_sign(const Cotensor& a, const Cotensor& b);

}  // namespace plectic

#endif
