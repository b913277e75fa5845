#include "plectic/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace plectic {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("Permutation: images are not a bijection of {1..k}");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int k) {
    std::vector<int> im(static_cast<std::size_t>(k));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

int Permutation::parity() const {
    int inv = 0;
    for (std::size_t i = 0; i < images_.size(); ++i)
        for (std::size_t j = i + 1; j < images_.size(); ++j)
            if (images_[i] > images_[j]) ++inv;
    return sign_pow(inv);
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
}

std::string Permutation::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(images_[i]);
    }
    return s + ")";
}

Permutation compose(const Permutation& tau, const Permutation& sigma) {
    if (tau.size() != sigma.size()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> im(static_cast<std::size_t>(tau.size()));
    for (int i = 1; i <= tau.size(); ++i) im[static_cast<std::size_t>(i - 1)] = sigma(tau(i));
    return Permutation(std::move(im));
}

std::vector<int> permute_degrees(const Permutation& sigma, const std::vector<int>& degrees) {
    if (static_cast<int>(degrees.size()) != sigma.size())
        throw std::invalid_argument("permute_degrees: length mismatch");
    std::vector<int> out(degrees.size());
    for (int i = 1; i <= sigma.size(); ++i)
        out[static_cast<std::size_t>(i - 1)] = degrees[static_cast<std::size_t>(sigma(i) - 1)];
    return out;
}

std::vector<Permutation> enumerate_permutations(int k) {
    std::vector<int> im(static_cast<std::size_t>(k));
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

namespace {

void multi_shuffle_rec(const std::vector<int>& blocks, std::size_t b, std::vector<int>& remaining,
                       std::vector<int>& prefix, std::vector<Permutation>& out) {
    if (b == blocks.size()) {
        out.emplace_back(prefix);
        return;
    }
    const int take = blocks[b];
    const int m = static_cast<int>(remaining.size());
    // choose `take` of the remaining values in ascending order
    std::vector<int> idx(static_cast<std::size_t>(take));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::vector<int> rest;
        std::vector<bool> used(static_cast<std::size_t>(m), false);
        for (int i : idx) {
            prefix.push_back(remaining[static_cast<std::size_t>(i)]);
            used[static_cast<std::size_t>(i)] = true;
        }
        for (int i = 0; i < m; ++i)
            if (!used[static_cast<std::size_t>(i)]) rest.push_back(remaining[static_cast<std::size_t>(i)]);
        multi_shuffle_rec(blocks, b + 1, rest, prefix, out);
        prefix.resize(prefix.size() - static_cast<std::size_t>(take));
        int t = take - 1;
        while (t >= 0 && idx[static_cast<std::size_t>(t)] == m - take + t) --t;
        if (t < 0) break;
        ++idx[static_cast<std::size_t>(t)];
        for (int u = t + 1; u < take; ++u) idx[static_cast<std::size_t>(u)] = idx[static_cast<std::size_t>(u - 1)] + 1;
    }
}

}  // namespace

std::vector<Permutation> enumerate_multi_shuffles(const std::vector<int>& blocks) {
    int total = 0;
    for (int b : blocks) {
        if (b < 0) throw std::invalid_argument("enumerate_multi_shuffles: negative block");
        total += b;
    }
    std::vector<int> remaining(static_cast<std::size_t>(total));
    std::iota(remaining.begin(), remaining.end(), 1);
    std::vector<int> prefix;
    std::vector<Permutation> out;
    multi_shuffle_rec(blocks, 0, remaining, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> enumerate_shuffles(int p, int q) {
    if (p < 0 || q < 0) throw std::invalid_argument("enumerate_shuffles: negative size");
    return enumerate_multi_shuffles({p, q});
}

bool is_shuffle(const Permutation& sigma, const std::vector<int>& blocks) {
    int pos = 1;
    for (int b : blocks) {
        for (int i = 1; i < b; ++i)
            if (sigma(pos + i - 1) > sigma(pos + i)) return false;
        pos += b;
    }
    return pos - 1 == sigma.size();
}

bool is_unshuffle(const Permutation& sigma, const std::vector<int>& blocks) {
    return is_shuffle(sigma.inverse(), blocks);
}

int koszul_sign(const Permutation& sigma, const std::vector<int>& degrees) {
    if (static_cast<int>(degrees.size()) != sigma.size())
        throw std::invalid_argument("koszul_sign: length mismatch");
    long e = 0;
    const int k = sigma.size();
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            if (sigma(i) > sigma(j))
                e += static_cast<long>(degrees[static_cast<std::size_t>(sigma(i) - 1)]) *
                     degrees[static_cast<std::size_t>(sigma(j) - 1)];
    return sign_pow(e);
}

int antisym_koszul_sign(const Permutation& sigma, const std::vector<int>& degrees) {
    return sigma.parity() * koszul_sign(sigma, degrees);
}

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace {

// all sequences of block labels with sizes[j] copies of j
void label_words(std::vector<int>& counts, int remaining, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t j = 0; j < counts.size(); ++j) {
        if (counts[j] == 0) continue;
        --counts[j];
        cur.push_back(static_cast<int>(j));
        label_words(counts, remaining - 1, cur, out);
        cur.pop_back();
        ++counts[j];
    }
}

std::vector<std::vector<int>> interleavings(std::vector<int> sizes) {
    int total = std::accumulate(sizes.begin(), sizes.end(), 0);
    std::vector<int> cur;
    std::vector<std::vector<int>> out;
    label_words(sizes, total, cur, out);
    return out;
}

}  // namespace

std::vector<StraightUnshuffle> enumerate_straight_unshuffles(const std::vector<BlockSpec>& blocks) {
    const std::size_t k = blocks.size();
    if (k == 0) throw std::invalid_argument("straight unshuffle: no blocks");
    std::vector<int> P(k + 1, 0);
    for (std::size_t j = 0; j < k; ++j) {
        if (blocks[j].q < 1 || blocks[j].q > blocks[j].p)
            throw std::invalid_argument("straight unshuffle: need 1 <= q_j <= p_j");
        P[j + 1] = P[j] + blocks[j].p;
    }
    const int total = P[k];

    std::vector<StraightUnshuffle> out;
    std::vector<int> ls(k, 0);
    while (true) {
        std::vector<int> rs(k);
        int L1 = 0, Q = 0;
        for (std::size_t j = 0; j < k; ++j) {
            rs[j] = blocks[j].p - blocks[j].q - ls[j];
            L1 += ls[j];
            Q += blocks[j].q;
        }
        for (const auto& lw : interleavings(ls)) {
            for (const auto& rw : interleavings(rs)) {
                std::vector<int> newpos(static_cast<std::size_t>(total));
                std::vector<int> cnt(k, 0);
                for (std::size_t pos = 0; pos < lw.size(); ++pos) {
                    auto j = static_cast<std::size_t>(lw[pos]);
                    newpos[static_cast<std::size_t>(P[j] + cnt[j])] = static_cast<int>(pos) + 1;
                    ++cnt[j];
                }
                int pos = L1;
                for (std::size_t j = 0; j < k; ++j)
                    for (int t = 0; t < blocks[j].q; ++t)
                        newpos[static_cast<std::size_t>(P[j] + ls[j] + t)] = ++pos;
                std::fill(cnt.begin(), cnt.end(), 0);
                for (std::size_t t = 0; t < rw.size(); ++t) {
                    auto j = static_cast<std::size_t>(rw[t]);
                    newpos[static_cast<std::size_t>(P[j] + ls[j] + blocks[j].q + cnt[j])] =
                        L1 + Q + static_cast<int>(t) + 1;
                    ++cnt[j];
                }
                out.push_back({Permutation(newpos), ls, L1, Q});
            }
        }
        std::size_t j = 0;
        while (j < k && ls[j] == blocks[j].p - blocks[j].q) ls[j++] = 0;
        if (j == k) break;
        ++ls[j];
    }
    return out;
}

bool is_straight_unshuffle(const Permutation& sigma, const std::vector<BlockSpec>& blocks,
                           const std::vector<int>& left) {
    std::vector<int> sizes;
    for (const auto& b : blocks) sizes.push_back(b.p);
    if (!is_shuffle(sigma, sizes)) return false;  // order within each block preserved
    int L = 0;
    for (int l : left) L += l;
    int P = 0;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        for (int t = 1; t <= blocks[j].q; ++t)
            if (sigma(P + left[j] + t) != L + t) return false;
        L += blocks[j].q;
        P += blocks[j].p;
    }
    return true;
}

}  // namespace plectic
