#include "plectic/linsolve.hpp"

#include <algorithm>

namespace plectic {

void SparseSystem::add_row(const std::map<int, Rational>& coeffs, const Rational& rhs) {
    mpz_class l = rhs.get_den();
    for (const auto& [c, v] : coeffs) {
        if (c < 0 || c >= ncols_) throw std::out_of_range("SparseSystem: column out of range");
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    }
    Row r;
    for (const auto& [c, v] : coeffs) {
        if (v == 0) continue;
        r.a.emplace(c, v.get_num() * (l / v.get_den()));
    }
    r.b = rhs.get_num() * (l / rhs.get_den());
    if (r.a.empty() && r.b == 0) return;
    rows_.push_back(std::move(r));
}

namespace {

void normalise(std::map<int, mpz_class>& a, mpz_class& b) {
    mpz_class g = b;
    for (const auto& kv : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), kv.second.get_mpz_t());
        if (g == 1) return;
    }
    if (g == 0 || g == 1) return;
    for (auto& kv : a) mpz_divexact(kv.second.get_mpz_t(), kv.second.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

SparseSystem::Result SparseSystem::solve(bool want_kernel) const {
    std::vector<Row> rows = rows_;
    // column -> rows containing it, rebuilt lazily via scanning (systems here are moderate)
    std::vector<int> pivot_row_of_col(static_cast<std::size_t>(ncols_), -1);
    std::vector<bool> used(rows.size(), false);
    std::vector<std::pair<int, int>> pivots;  // (col, row)

    // process columns in order; choose the sparsest available row as pivot
    std::vector<std::vector<int>> col_rows(static_cast<std::size_t>(ncols_));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& kv : rows[i].a) col_rows[static_cast<std::size_t>(kv.first)].push_back(static_cast<int>(i));

    for (int c = 0; c < ncols_; ++c) {
        int best = -1;
        std::size_t best_len = 0;
        for (int i : col_rows[static_cast<std::size_t>(c)]) {
            auto ui = static_cast<std::size_t>(i);
            if (used[ui]) continue;
            auto it = rows[ui].a.find(c);
            if (it == rows[ui].a.end()) continue;
            if (best < 0 || rows[ui].a.size() < best_len) {
                best = i;
                best_len = rows[ui].a.size();
            }
        }
        if (best < 0) continue;
        auto ub = static_cast<std::size_t>(best);
        used[ub] = true;
        pivots.emplace_back(c, best);
        pivot_row_of_col[static_cast<std::size_t>(c)] = best;
        const Row piv = rows[ub];
        const mpz_class& pv = piv.a.at(c);
        // eliminate c from every other row that contains it
        std::vector<int> touched = col_rows[static_cast<std::size_t>(c)];
        for (int i : touched) {
            auto ui = static_cast<std::size_t>(i);
            if (i == best) continue;
            auto it = rows[ui].a.find(c);
            if (it == rows[ui].a.end()) continue;
            mpz_class e = it->second;
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), pv.get_mpz_t(), e.get_mpz_t());
            mpz_class mp = pv / g, me = e / g;
            Row& r = rows[ui];
            for (auto& kv : r.a) kv.second *= mp;
            r.b *= mp;
            for (const auto& [pc, pvv] : piv.a) {
                auto [jt, ins] = r.a.try_emplace(pc, 0);
                jt->second -= me * pvv;
                if (jt->second == 0)
                    r.a.erase(jt);
                else if (ins)
                    col_rows[static_cast<std::size_t>(pc)].push_back(i);
            }
            r.b -= me * piv.b;
            normalise(r.a, r.b);
        }
    }

    Result res;
    res.rank = static_cast<int>(pivots.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!used[i] && rows[i].a.empty() && rows[i].b != 0) return res;  // inconsistent

    std::vector<Rational> sol(static_cast<std::size_t>(ncols_), Rational(0));
    for (auto [c, r] : pivots) {
        const Row& row = rows[static_cast<std::size_t>(r)];
        Rational v(row.b, row.a.at(c));
        v.canonicalize();
        sol[static_cast<std::size_t>(c)] = v;
    }
    res.solution = std::move(sol);

    if (want_kernel) {
        for (int f = 0; f < ncols_; ++f) {
            if (pivot_row_of_col[static_cast<std::size_t>(f)] >= 0) continue;
            std::vector<Rational> v(static_cast<std::size_t>(ncols_), Rational(0));
            v[static_cast<std::size_t>(f)] = 1;
            for (auto [c, r] : pivots) {
                const Row& row = rows[static_cast<std::size_t>(r)];
                auto it = row.a.find(f);
                if (it == row.a.end()) continue;
                Rational q(-it->second, row.a.at(c));
                q.canonicalize();
                v[static_cast<std::size_t>(c)] = q;
            }
            res.kernel.push_back(std::move(v));
        }
    }
    return res;
}

}  // namespace plectic
