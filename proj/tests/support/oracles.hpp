#pragma once

// independent recomputations used to cross-check library results; everything
// here is written the naive way on purpose

#include <utility>
#include <vector>

#include "maghom/chain_complex.hpp"
#include "maghom/metric_space.hpp"

namespace oracle {

using maghom::rational;

// shortest paths by triple-loop relaxation, unlike the per-source search in
// the library
inline std::vector<std::vector<rational>> floyd_warshall(
    int n, const std::vector<std::pair<int, int>>& edges) {
    const rational far = 1000000;
    std::vector<std::vector<rational>> d(n, std::vector<rational>(n, far));
    for (int i = 0; i < n; ++i) d[i][i] = 0;
    for (const auto& [a, b] : edges) d[a - 1][b - 1] = d[b - 1][a - 1] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return d;
}

// every tuple of the given degree and exact length, found by brute force over
// the full product space
inline std::vector<std::vector<int>> all_tuples(const maghom::metric_space& s,
                                                const rational& length, int degree) {
    std::vector<std::vector<int>> found;
    std::vector<int> t(degree + 1, 0);
    while (true) {
        bool ok = true;
        rational sum = 0;
        for (int i = 0; ok && i < degree; ++i) {
            if (t[i] == t[i + 1]) ok = false;
            sum += s.dist(t[i], t[i + 1]);
        }
        if (ok && sum == length) found.push_back(t);
        int pos = degree;
        while (pos >= 0 && t[pos] == s.size() - 1) t[pos--] = 0;
        if (pos < 0) return found;
        ++t[pos];
    }
}

// rank over the rationals by dense Gaussian elimination
inline int rational_rank(const maghom::sparse_matrix& m) {
    std::vector<std::vector<rational>> a(m.rows, std::vector<rational>(m.cols, 0));
    for (int j = 0; j < m.cols; ++j)
        for (const auto& [r, v] : m.columns[j]) a[r][j] = rational(v);
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            rational f = a[r][col] / a[rank][col];
            for (int c = col; c < m.cols; ++c) a[r][c] -= f * a[rank][c];
        }
        ++rank;
    }
    return rank;
}

}  // namespace oracle
