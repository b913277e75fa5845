#ifndef PLECTIC_COMBINATORICS_HPP
#define PLECTIC_COMBINATORICS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace plectic {

// A permutation of {1..k} stored by its images, 1-based.
// In word form sigma acts on v_1 ... v_k by producing v_sigma(1) ... v_sigma(k).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int k);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const { return images_; }

    int parity() const;
    Permutation inverse() const;

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

    std::string str() const;

private:
    std::vector<int> images_;
};

// Word action composition: the word of compose(tau, sigma) is obtained by
// rearranging v by sigma first and the result by tau, i.e. i -> sigma(tau(i)).
// With this convention e(compose(tau,sigma); v) = e(tau; sigma.v) e(sigma; v).
Permutation compose(const Permutation& tau, const Permutation& sigma);

// sigma.v = (v_sigma(1), ..., v_sigma(k)).
std::vector<int> permute_degrees(const Permutation& sigma, const std::vector<int>& degrees);

std::vector<Permutation> enumerate_permutations(int k);

// (p,q)-shuffles: mu(1)<...<mu(p), nu(1)<...<nu(q). Lexicographic order.
std::vector<Permutation> enumerate_shuffles(int p, int q);

// Shuffles with an arbitrary number of ascending blocks, e.g. Sh(j1, j2-j1, k-j2).
std::vector<Permutation> enumerate_multi_shuffles(const std::vector<int>& blocks);

// sigma^{-1} is increasing on each block: the inverse view of a shuffle.
bool is_unshuffle(const Permutation& sigma, const std::vector<int>& blocks);
bool is_shuffle(const Permutation& sigma, const std::vector<int>& blocks);

// v_1 (x) ... (x) v_k = e(sigma; v) v_sigma(1) (x) ... (x) v_sigma(k).
int koszul_sign(const Permutation& sigma, const std::vector<int>& degrees);

// sgn(sigma) e(sigma; v).
int antisym_koszul_sign(const Permutation& sigma, const std::vector<int>& degrees);

// (-1)^e for an integer exponent of either sign.
inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

long binomial(int n, int k);

struct BlockSpec {
    int q = 1;  // distinguished interval length
    int p = 1;  // block length
};

// A straight unshuffle together with the left offsets l_j that realise it.
struct StraightUnshuffle {
    Permutation sigma;       // old position -> new position, 1-based
    std::vector<int> left;   // l_j
    int left_total = 0;      // L_1
    int distinguished = 0;   // sum of q_j
};

// All straight (q_j, p_j)-unshuffles. Each is a (p_1..p_k)-unshuffle sending the
// distinguished interval of block j contiguously onto [L_j+1, L_{j+1}].
std::vector<StraightUnshuffle> enumerate_straight_unshuffles(const std::vector<BlockSpec>& blocks);

bool is_straight_unshuffle(const Permutation& sigma, const std::vector<BlockSpec>& blocks,
                           const std::vector<int>& left);

}  // namespace plectic

#endif
