#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plectic/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

using namespace plectic;

namespace {

// Sort the word sigma.v back into v by adjacent transpositions and collect
// (-1)^{|a||b|} for each swap; that is the sign e(sigma; v).
int brute_koszul(const Permutation& s, const std::vector<int>& deg) {
    std::vector<int> pos = s.images();  // current word holds v_{pos[i]}
    int sign = 1;
    bool swapped = true;
    while (swapped) {
        swapped = false;
        for (std::size_t i = 0; i + 1 < pos.size(); ++i)
            if (pos[i] > pos[i + 1]) {
                if ((deg[static_cast<std::size_t>(pos[i] - 1)] * deg[static_cast<std::size_t>(pos[i + 1] - 1)]) % 2) sign = -sign;
                std::swap(pos[i], pos[i + 1]);
                swapped = true;
            }
    }
    return sign;
}

int brute_sign(const Permutation& s) {
    int inv = 0;
    for (int i = 1; i <= s.size(); ++i)
        for (int j = i + 1; j <= s.size(); ++j) inv += s(i) > s(j);
    return inv % 2 ? -1 : 1;
}

std::vector<std::vector<int>> all_degree_vectors(int k, int maxdeg) {
    std::vector<std::vector<int>> out{{}};
    for (int i = 0; i < k; ++i) {
        std::vector<std::vector<int>> next;
        for (const auto& v : out)
            for (int d = 0; d <= maxdeg; ++d) {
                auto w = v;
                w.push_back(d);
                next.push_back(w);
            }
        out = next;
    }
    return out;
}

}  // namespace

TEST_CASE("permutation basics") {
    Permutation s({3, 1, 2});
    CHECK(s.size() == 3);
    CHECK(s(1) == 3);
    CHECK(s.parity() == 1);
    CHECK(Permutation({2, 1, 3}).parity() == -1);
    CHECK(compose(s, s.inverse()) == Permutation::identity(3));
    CHECK(compose(s.inverse(), s) == Permutation::identity(3));
    CHECK_THROWS(Permutation({1, 1, 2}));
    CHECK_THROWS(Permutation({0, 1}));
}

TEST_CASE("sign agrees with inversion count") {
    for (int k = 0; k <= 5; ++k)
        for (const auto& s : enumerate_permutations(k)) CHECK(s.parity() == brute_sign(s));
}

TEST_CASE("koszul sign matches adjacent transpositions on S4 with degrees 0..3") {
    for (const auto& deg : all_degree_vectors(4, 3))
        for (const auto& s : enumerate_permutations(4)) {
            REQUIRE(koszul_sign(s, deg) == brute_koszul(s, deg));
            REQUIRE(antisym_koszul_sign(s, deg) == s.parity() * brute_koszul(s, deg));
        }
}

TEST_CASE("koszul sign is a cocycle for word composition") {
    for (const auto& deg : all_degree_vectors(4, 2))
        for (const auto& s : enumerate_permutations(4))
            for (const auto& t : enumerate_permutations(4))
                REQUIRE(koszul_sign(compose(t, s), deg) == koszul_sign(t, permute_degrees(s, deg)) * koszul_sign(s, deg));
}

TEST_CASE("even degrees give trivial signs, odd degrees the parity") {
    for (const auto& s : enumerate_permutations(5)) {
        CHECK(koszul_sign(s, {0, 2, 4, 0, 2}) == 1);
        CHECK(koszul_sign(s, {1, 1, 1, 1, 1}) == s.parity());
        CHECK(antisym_koszul_sign(s, {1, 3, 1, 1, 5}) == 1);
    }
}

TEST_CASE("shuffle counts are binomials") {
    for (int p = 0; p <= 5; ++p)
        for (int q = 0; q <= 5 - p; ++q) {
            auto sh = enumerate_shuffles(p, q);
            CHECK(static_cast<long>(sh.size()) == binomial(p + q, p));
            std::set<Permutation> uniq(sh.begin(), sh.end());
            CHECK(uniq.size() == sh.size());
            for (const auto& s : sh) CHECK(is_shuffle(s, {p, q}));
        }
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("shuffles ascend on both blocks") {
    for (const auto& s : enumerate_shuffles(2, 3)) {
        CHECK(s(1) < s(2));
        CHECK(s(3) < s(4));
        CHECK(s(4) < s(5));
    }
}

TEST_CASE("multi-shuffles are multinomial in number") {
    CHECK(enumerate_multi_shuffles({1, 2, 2}).size() == 30);
    CHECK(enumerate_multi_shuffles({2, 2}).size() == 6);
    std::size_t brute = 0;
    for (const auto& s : enumerate_permutations(5)) brute += is_shuffle(s, {1, 2, 2});
    CHECK(brute == 30);
}

TEST_CASE("unshuffles are inverses of shuffles") {
    for (const auto& s : enumerate_permutations(5)) CHECK(is_unshuffle(s, {2, 3}) == is_shuffle(s.inverse(), {2, 3}));
}

TEST_CASE("worked straight unshuffle") {
    // X = 1 [2] 3 4 | [5 6] 7 8 | 9 [10 11] | [12 13], distinguished intervals bracketed
    std::vector<BlockSpec> b{{1, 4}, {2, 4}, {2, 3}, {2, 2}};
    const std::vector<int> word{9, 1, 2, 5, 6, 10, 11, 12, 13, 7, 3, 8, 4};
    std::vector<int> old_to_new(13);
    for (int i = 0; i < 13; ++i) old_to_new[static_cast<std::size_t>(word[static_cast<std::size_t>(i)] - 1)] = i + 1;
    Permutation sigma(old_to_new);
    CHECK(is_straight_unshuffle(sigma, b, {1, 0, 1, 0}));
    CHECK_FALSE(is_straight_unshuffle(sigma, b, {0, 0, 1, 0}));
    CHECK(is_unshuffle(sigma.inverse(), {4, 4, 3, 2}));

    bool found = false;
    for (const auto& su : enumerate_straight_unshuffles(b))
        if (su.sigma == sigma) {
            found = true;
            CHECK(su.left == std::vector<int>{1, 0, 1, 0});
            CHECK(su.left_total == 2);
            CHECK(su.distinguished == 7);
        }
    CHECK(found);
}

TEST_CASE("straight unshuffles agree with a brute-force filter") {
    const std::vector<std::vector<BlockSpec>> cases{
        {{1, 2}}, {{1, 3}, {1, 1}}, {{2, 3}, {1, 2}}, {{1, 2}, {2, 2}}, {{1, 1}, {1, 2}, {1, 2}}, {{2, 2}, {1, 3}}};
    for (const auto& b : cases) {
        int total = 0;
        for (const auto& x : b) total += x.p;
        std::set<std::pair<Permutation, std::vector<int>>> fast;
        for (const auto& su : enumerate_straight_unshuffles(b)) {
            CHECK(is_straight_unshuffle(su.sigma, b, su.left));
            fast.insert({su.sigma, su.left});
        }
        // brute force: every permutation against every admissible offset vector
        std::set<std::pair<Permutation, std::vector<int>>> slow;
        const int k = static_cast<int>(b.size());
        std::vector<std::vector<int>> offsets{{}};
        for (int j = 0; j < k; ++j) {
            std::vector<std::vector<int>> next;
            for (const auto& o : offsets)
                for (int v = 0; v <= b[static_cast<std::size_t>(j)].p - b[static_cast<std::size_t>(j)].q; ++v) {
                    auto w = o;
                    w.push_back(v);
                    next.push_back(w);
                }
            offsets = next;
        }
        for (const auto& s : enumerate_permutations(total))
            for (const auto& o : offsets)
                if (is_straight_unshuffle(s, b, o)) slow.insert({s, o});
        CHECK(fast == slow);
    }
}

TEST_CASE("straight unshuffles are unshuffles in word form") {
    // sigma is stored old position -> new position; the word permutation is its inverse
    std::vector<BlockSpec> b{{1, 2}, {2, 3}};
    for (const auto& su : enumerate_straight_unshuffles(b)) CHECK(is_unshuffle(su.sigma.inverse(), {2, 3}));
}

TEST_CASE("permutation printing") {
    CHECK_FALSE(Permutation({2, 1}).str().empty());
}
