#include "plectic/pinfty.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace plectic {

Letter make_letter(PoissonCotensor p) { return std::make_shared<const PoissonCotensor>(std::move(p)); }

int letter_degree(const Letter& l) { return l->degree + 1; }

int WordBlock::degree(int n) const {
    int d = n - 2;
    for (const auto& l : factors) d += letter_degree(l);
    return d;
}

namespace {

PoissonCotensor scaled(PoissonCotensor p, int c) {
    if (c == 1) return p;
    p.f *= Rational(c);
    p.x *= Rational(c);
    p.y *= Rational(c);
    return p;
}

}  // namespace

std::optional<PoissonCotensor> StructureMap::operator()(const std::vector<WordBlock>& blocks) const {
    if (blocks.size() != signature.size()) throw std::invalid_argument("structure map: wrong number of blocks");
    for (std::size_t j = 0; j < blocks.size(); ++j)
        if (blocks[j].size() != signature[j]) throw std::invalid_argument("structure map: block length differs from signature");
    return family->evaluate(blocks);
}

std::optional<PoissonCotensor> StructureMapFamily::evaluate(const std::vector<WordBlock>& blocks) const {
    const int m = static_cast<int>(blocks.size());
    const int nn = n();
    if (m == 0) return std::nullopt;
    if (m == 1) {
        const auto& w = blocks[0].factors;
        if (w.size() == 1) return H_.formula_bracket({*w[0]});
        if (w.size() == 2) return scaled(H_.formula_product(*w[0], *w[1]), sign_pow(letter_degree(w[0])));
        return std::nullopt;
    }
    int pairs = 0, pair_at = -1;
    for (int i = 0; i < m; ++i) {
        const int len = blocks[static_cast<std::size_t>(i)].size();
        if (len == 2) {
            ++pairs;
            pair_at = i;
        } else if (len != 1) {
            return std::nullopt;
        }
    }
    if (pairs == 0) {
        std::vector<PoissonCotensor> args;
        for (const auto& b : blocks) args.push_back(*b.factors[0]);
        return H_.formula_bracket(args);
    }
    if (pairs > 1) return std::nullopt;

    // move the pair past the later singletons, antisymmetric in block degrees
    const WordBlock& B = blocks[static_cast<std::size_t>(pair_at)];
    int sign = 1;
    for (int i = pair_at + 1; i < m; ++i)
        sign *= -sign_pow(long(B.degree(nn)) * blocks[static_cast<std::size_t>(i)].degree(nn));
    std::vector<PoissonCotensor> left;
    long decalage = 0;
    for (int i = 0; i < m; ++i) {
        if (i == pair_at) continue;
        left.push_back(*blocks[static_cast<std::size_t>(i)].factors[0]);
        decalage += signs::shifted(left.back().degree, nn);
    }
    sign *= sign_pow(letter_degree(B.factors[0]));
    if (conv_ == SignConvention::Corrected) sign *= sign_pow(decalage);
    return scaled(H_.formula_leibniz(left, *B.factors[0], *B.factors[1]), sign);
}

std::vector<std::vector<int>> StructureMapFamily::nonzero_signatures(int max_k) const {
    std::vector<std::vector<int>> out{{1}, {2}};
    for (int k = 2; k <= max_k; ++k) {
        out.push_back(std::vector<int>(static_cast<std::size_t>(k), 1));
        for (int i = 0; i < k; ++i) {
            std::vector<int> s(static_cast<std::size_t>(k), 1);
            s[static_cast<std::size_t>(i)] = 2;
            out.push_back(s);
        }
    }
    return out;
}

StructureMapFamily build_structure_maps(const Homotopy& H, SignConvention c) { return StructureMapFamily(H, c); }

std::vector<ExtendedTerm> straight_shuffle_extension(const StructureMap& D, const std::vector<WordBlock>& blocks) {
    const int k = static_cast<int>(D.signature.size());
    if (static_cast<int>(blocks.size()) != k) throw std::invalid_argument("extension: block count differs from signature");
    std::vector<BlockSpec> spec;
    std::vector<Letter> letters;
    std::vector<int> degs;
    for (int j = 0; j < k; ++j) {
        const auto& b = blocks[static_cast<std::size_t>(j)];
        if (b.size() < D.signature[static_cast<std::size_t>(j)])
            throw std::invalid_argument("extension: target block shorter than the map's input");
        spec.push_back({D.signature[static_cast<std::size_t>(j)], b.size()});
        for (const auto& l : b.factors) {
            letters.push_back(l);
            degs.push_back(letter_degree(l));
        }
    }
    const int nn = D.family->n();
    const long E = D.family->convention() == SignConvention::Corrected ? long(nn + 1) * k + nn : k;

    std::vector<ExtendedTerm> out;
    for (const auto& su : enumerate_straight_unshuffles(spec)) {
        const Permutation inv = su.sigma.inverse();
        std::vector<Letter> word;
        for (int i = 1; i <= inv.size(); ++i) word.push_back(letters[static_cast<std::size_t>(inv(i) - 1)]);
        long left_deg = 0;
        for (int i = 0; i < su.left_total; ++i) left_deg += letter_degree(word[static_cast<std::size_t>(i)]);
        const int sign = koszul_sign(inv, degs) * sign_pow(E * left_deg);

        std::vector<WordBlock> sub;
        int pos = su.left_total;
        for (int j = 0; j < k; ++j) {
            WordBlock w;
            for (int t = 0; t < D.signature[static_cast<std::size_t>(j)]; ++t) w.factors.push_back(word[static_cast<std::size_t>(pos++)]);
            sub.push_back(std::move(w));
        }
        auto val = D.family->evaluate(sub);
        if (!val) continue;
        ExtendedTerm t;
        t.sign = sign;
        t.word.assign(word.begin(), word.begin() + su.left_total);
        t.word.push_back(make_letter(std::move(*val)));
        t.word.insert(t.word.end(), word.begin() + pos, word.end());
        out.push_back(std::move(t));
    }
    return out;
}

namespace {

// all q-vectors with 1 <= q_j <= p_j
void for_each_profile(const std::vector<int>& p, std::vector<int>& q, std::size_t j,
                      const std::function<void(const std::vector<int>&)>& f) {
    if (j == p.size()) {
        f(q);
        return;
    }
    for (int v = 1; v <= p[j]; ++v) {
        q[j] = v;
        for_each_profile(p, q, j + 1, f);
    }
}

}  // namespace

CheckReport check_structure_equation(const StructureMapFamily& maps, const std::vector<WordBlock>& blocks) {
    const int k = static_cast<int>(blocks.size());
    if (k < 1 || k > 3) throw std::out_of_range("structure equation: supported for 1 to 3 blocks");
    std::vector<int> profile;
    for (const auto& b : blocks) {
        if (b.size() < 1 || b.size() > 3) throw std::out_of_range("structure equation: block length must be 1 to 3");
        profile.push_back(b.size());
    }
    const int nn = maps.n();
    std::vector<int> bd;
    for (const auto& b : blocks) bd.push_back(b.degree(nn));
    const int nv = maps.homotopy().structure().nvars;

    Cotensor res(nv);
    for (int j = 1; j <= k; ++j)
        for (const auto& s : enumerate_shuffles(j, k - j)) {
            const int c = antisym_koszul_sign(s, bd) * sign_pow(long(j) * (k - j));
            std::vector<WordBlock> inner, outer;
            std::vector<int> pin;
            for (int i = 1; i <= j; ++i) {
                inner.push_back(blocks[static_cast<std::size_t>(s(i) - 1)]);
                pin.push_back(inner.back().size());
            }
            for (int i = j + 1; i <= k; ++i) outer.push_back(blocks[static_cast<std::size_t>(s(i) - 1)]);
            std::vector<int> q(pin.size());
            for_each_profile(pin, q, 0, [&](const std::vector<int>& qs) {
                for (auto& term : straight_shuffle_extension(maps.map(qs), inner)) {
                    std::vector<WordBlock> arg{WordBlock{term.word}};
                    arg.insert(arg.end(), outer.begin(), outer.end());
                    auto v = maps.evaluate(arg);
                    if (v) res += (c * term.sign) * v->f;
                }
            });
        }
    std::string name = "structure equation (";
    for (std::size_t i = 0; i < profile.size(); ++i) name += (i ? "," : "") + std::to_string(profile[i]);
    name += ")";
    CheckReport r;
    r.name = name;
    r.passed = res.is_zero();
    r.residual = std::move(res);
    return r;
}

Cotensor shuffle_image_residual(const StructureMap& D, const std::vector<WordBlock>& blocks, int block, int i) {
    const auto& w = blocks.at(static_cast<std::size_t>(block)).factors;
    const int p = static_cast<int>(w.size());
    if (i < 1 || i >= p) throw std::invalid_argument("shuffle image: split must be proper");
    std::vector<int> degs;
    for (const auto& l : w) degs.push_back(letter_degree(l));
    Cotensor res(D.family->homotopy().structure().nvars);
    for (const auto& s : enumerate_shuffles(i, p - i)) {
        // s sends old position t to new position s(t)
        const Permutation inv = s.inverse();
        WordBlock nb;
        for (int t = 1; t <= p; ++t) nb.factors.push_back(w[static_cast<std::size_t>(inv(t) - 1)]);
        auto bs = blocks;
        bs[static_cast<std::size_t>(block)] = nb;
        if (auto v = D(bs)) res += koszul_sign(inv, degs) * v->f;
    }
    return res;
}

bool equal_up_to_sign(const Cotensor& a, const Cotensor& b) { return a == b || a == -b; }

std::optional<CheckReport> companion_check(const Homotopy& H, const std::vector<WordBlock>& blocks) {
    std::vector<int> profile;
    for (const auto& b : blocks) profile.push_back(b.size());
    auto flat = [&] {
        std::vector<PoissonCotensor> v;
        for (const auto& b : blocks)
            for (const auto& l : b.factors) v.push_back(*l);
        return v;
    };
    const auto F = flat();
    if (profile == std::vector<int>{1}) {
        CheckReport r{"square zero", de_rham(de_rham(F[0].f)), false, {}};
        r.passed = r.residual.is_zero();
        return r;
    }
    if (profile == std::vector<int>{2}) {
        const auto& a = F[0];
        const auto& b = F[1];
        Cotensor res = de_rham(wedge(a.f, b.f)) - wedge(de_rham(a.f), b.f) - sign_pow(a.degree) * wedge(a.f, de_rham(b.f));
        CheckReport r{"derivation", res, false, {}};
        r.passed = r.residual.is_zero();
        return r;
    }
    if (profile == std::vector<int>{3}) {
        Cotensor res = wedge(wedge(F[0].f, F[1].f), F[2].f) - wedge(F[0].f, wedge(F[1].f, F[2].f));
        CheckReport r{"associativity", res, false, {}};
        r.passed = r.residual.is_zero();
        return r;
    }
    if (std::all_of(profile.begin(), profile.end(), [](int p) { return p == 1; }))
        return H.check_jacobi(static_cast<int>(F.size()), F);
    if (profile == std::vector<int>{1, 2}) return H.check_leibniz_first(1, {F[0]}, F[1], F[2]);
    if (profile == std::vector<int>{1, 3}) return H.check_leibniz_third(1, F);
    if (profile == std::vector<int>{2, 2}) return H.check_leibniz_second(0, F);
    return std::nullopt;
}

}  // namespace plectic
