#pragma once

// randomized chain complexes whose homology is known by construction: start
// from a block-diagonal boundary with chosen ranks and invariant factors, then
// scramble it with paired elementary basis changes that leave homology alone

#include <algorithm>
#include <random>
#include <vector>

#include "maghom/homology.hpp"
#include "maghom/morse.hpp"

namespace testgen {

struct known_complex {
    maghom::chain_complex cx;
    maghom::homology_summary expected;
};

inline known_complex random_complex(std::mt19937& rng) {
    using maghom::bigint;
    auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };

    int top = pick(1, 3);
    std::vector<int> dims(top + 1);
    for (int n = 0; n <= top; ++n) dims[n] = pick(1, 8);

    // torsion menus are already divisibility chains, so the expected group can
    // be read off without renormalizing
    static const std::vector<std::vector<int>> menus = {{}, {}, {}, {2}, {3}, {2, 2}, {2, 4}};
    std::vector<int> rank(top + 2, 0);
    std::vector<std::vector<int>> factors(top + 2);
    for (int n = 1; n <= top; ++n) {
        int room = std::min(dims[n], dims[n - 1] - rank[n - 1]);
        if (room < 0) room = 0;
        rank[n] = room == 0 ? 0 : pick(0, room);
        const auto& menu = menus[rng() % menus.size()];
        for (size_t k = 0; k < menu.size() && static_cast<int>(k) < rank[n]; ++k)
            factors[n].push_back(menu[k]);
        while (static_cast<int>(factors[n].size()) < rank[n]) factors[n].insert(factors[n].begin(), 1);
    }

    // block boundary: the last rank[n] columns of degree n hit the first
    // rank[n] rows of degree n-1
    std::vector<std::vector<std::vector<bigint>>> dense(top + 1);
    for (int n = 1; n <= top; ++n) {
        dense[n].assign(dims[n - 1], std::vector<bigint>(dims[n], 0));
        for (int k = 0; k < rank[n]; ++k)
            dense[n][k][dims[n] - rank[n] + k] = factors[n][k];
    }

    maghom::homology_summary expected(top + 1);
    for (int n = 0; n <= top; ++n) {
        expected[n].betti = dims[n] - rank[n] - rank[n + 1];
        for (int f : factors[n + 1])
            if (f > 1) expected[n].torsion.push_back(f);
    }

    // paired elementary moves: a basis change in degree m turns into a column
    // move on its boundary and the inverse row move one degree up
    for (int moves = pick(20, 40); moves-- > 0;) {
        int m = pick(0, top);
        if (dims[m] < 2) continue;
        int i = pick(0, dims[m] - 1), j = pick(0, dims[m] - 1);
        if (i == j) continue;
        int c = pick(0, 1) ? 1 : -1;
        if (m >= 1)
            for (int r = 0; r < dims[m - 1]; ++r) dense[m][r][j] += c * dense[m][r][i];
        if (m + 1 <= top)
            for (int col = 0; col < dims[m + 1]; ++col)
                dense[m + 1][i][col] -= c * dense[m + 1][j][col];
    }

    std::vector<maghom::sparse_matrix> d;
    for (int n = 1; n <= top; ++n) {
        maghom::sparse_matrix m = maghom::sparse_matrix::zero(dims[n - 1], dims[n]);
        for (int r = 0; r < dims[n - 1]; ++r)
            for (int col = 0; col < dims[n]; ++col)
                if (dense[n][r][col] != 0) m.set(r, col, dense[n][r][col]);
        d.push_back(std::move(m));
    }
    return {maghom::chain_complex(dims, std::move(d)), std::move(expected)};
}

// grows a matching edge by edge, keeping only additions that still validate
inline maghom::morse_matching random_matching(const maghom::chain_complex& cx,
                                              std::mt19937& rng) {
    std::vector<maghom::matched_edge> candidates;
    for (int n = 1; n <= cx.top_degree(); ++n) {
        const maghom::sparse_matrix& b = cx.boundary(n);
        for (int j = 0; j < b.cols; ++j)
            for (const auto& [r, v] : b.columns[j])
                if (v == 1 || v == -1) candidates.push_back({n, j, r});
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);
    maghom::morse_matching m;
    for (const auto& e : candidates) {
        m.edges.push_back(e);
        if (maghom::validate_matching(cx, m)) m.edges.pop_back();
    }
    return m;
}

}  // namespace testgen
