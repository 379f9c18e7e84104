#include "maghom/homology.hpp"

#include <algorithm>
#include <set>

namespace maghom {

namespace {

bigint abs_value(const bigint& v) { return v < 0 ? bigint(-v) : v; }

// mutable row-major copy with a per-column occupancy index
struct working_matrix {
    std::vector<std::map<int, bigint>> row_data;
    std::vector<std::set<int>> col_rows;

    explicit working_matrix(const sparse_matrix& m)
        : row_data(m.rows), col_rows(m.cols) {
        for (int j = 0; j < m.cols; ++j)
            for (const auto& [row, v] : m.columns[j]) {
                row_data[row][j] = v;
                col_rows[j].insert(row);
            }
    }

    // row r2 += factor * row r1
    void add_row(int r2, int r1, const bigint& factor) {
        for (const auto& [col, v] : row_data[r1]) {
            auto it = row_data[r2].find(col);
            if (it == row_data[r2].end()) {
                row_data[r2].emplace(col, factor * v);
                col_rows[col].insert(r2);
            } else {
                it->second += factor * v;
                if (it->second == 0) {
                    row_data[r2].erase(it);
                    col_rows[col].erase(r2);
                }
            }
        }
    }

    void drop_row(int r) {
        for (const auto& [col, v] : row_data[r])
            col_rows[col].erase(r);
        row_data[r].clear();
    }
};

// classical Smith reduction of the small residue left after unit pivoting;
// returns the diagonal in divisibility order
std::vector<bigint> dense_snf(std::vector<std::vector<bigint>> m) {
    std::vector<bigint> factors;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int p = 0;
    while (true) {
        int pi = -1, pj = -1;
        for (int i = p; i < rows; ++i)
            for (int j = p; j < cols; ++j)
                if (m[i][j] != 0 &&
                    (pi < 0 || abs_value(m[i][j]) < abs_value(m[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0)
            break;
        std::swap(m[p], m[pi]);
        for (int i = 0; i < rows; ++i)
            std::swap(m[i][p], m[i][pj]);

        bool settled = false;
        while (!settled) {
            settled = true;
            for (int i = p + 1; i < rows; ++i) {
                if (m[i][p] == 0)
                    continue;
                bigint q = m[i][p] / m[p][p];
                for (int j = p; j < cols; ++j)
                    m[i][j] -= q * m[p][j];
                if (m[i][p] != 0) {  // remainder smaller than the pivot: promote it
                    std::swap(m[p], m[i]);
                    settled = false;
                }
            }
            if (!settled)
                continue;
            for (int j = p + 1; j < cols; ++j) {
                if (m[p][j] == 0)
                    continue;
                bigint q = m[p][j] / m[p][p];
                for (int i = p; i < rows; ++i)
                    m[i][j] -= q * m[i][p];
                if (m[p][j] != 0) {
                    for (int i = p; i < rows; ++i)
                        std::swap(m[i][p], m[i][j]);
                    settled = false;
                }
            }
            if (!settled)
                continue;
            // pivot must divide everything below-right to keep the chain condition
            for (int i = p + 1; i < rows && settled; ++i)
                for (int j = p + 1; j < cols && settled; ++j)
                    if (m[i][j] % m[p][p] != 0) {
                        for (int k = p; k < cols; ++k)
                            m[p][k] += m[i][k];
                        settled = false;
                    }
        }
        factors.push_back(abs_value(m[p][p]));
        ++p;
    }
    return factors;
}

}  // namespace

snf_result smith_normal_form(const sparse_matrix& m) {
    working_matrix w(m);
    int unit_pivots = 0;

    while (true) {
        // cheapest unit pivot by fill estimate
        int best_r = -1, best_c = -1;
        long best_cost = 0;
        for (int r = 0; r < m.rows; ++r)
            for (const auto& [c, v] : w.row_data[r]) {
                if (v != 1 && v != -1)
                    continue;
                long cost = static_cast<long>(w.row_data[r].size() - 1) *
                            static_cast<long>(w.col_rows[c].size() - 1);
                if (best_r < 0 || cost < best_cost) {
                    best_r = r;
                    best_c = c;
                    best_cost = cost;
                }
            }
        if (best_r < 0)
            break;
        const bigint pivot = w.row_data[best_r][best_c];
        const std::set<int> sharers = w.col_rows[best_c];
        for (int r : sharers) {
            if (r == best_r)
                continue;
            bigint factor = -w.row_data[r][best_c] / pivot;  // pivot is +-1
            w.add_row(r, best_r, factor);
        }
        // the pivot column is now clear; clearing the pivot row would only touch
        // the pivot row itself, so both can simply be dropped
        w.drop_row(best_r);
        ++unit_pivots;
    }

    // compact the residue into a dense block
    std::map<int, int> row_ids, col_ids;
    for (int r = 0; r < m.rows; ++r)
        for (const auto& [c, v] : w.row_data[r]) {
            row_ids.emplace(r, static_cast<int>(row_ids.size()));
            col_ids.emplace(c, static_cast<int>(col_ids.size()));
        }
    snf_result out;
    out.factors.assign(unit_pivots, 1);
    if (!row_ids.empty()) {
        std::vector<std::vector<bigint>> dense(row_ids.size(),
                                               std::vector<bigint>(col_ids.size(), 0));
        for (const auto& [r, ri] : row_ids)
            for (const auto& [c, v] : w.row_data[r])
                dense[ri][col_ids.at(c)] = v;
        for (bigint& f : dense_snf(std::move(dense)))
            out.factors.push_back(std::move(f));
    }
    out.rank = static_cast<int>(out.factors.size());
    return out;
}

homology_group homology_at(const chain_complex& cx, int n) {
    snf_result below = smith_normal_form(cx.boundary(n));
    snf_result above = smith_normal_form(cx.boundary(n + 1));
    homology_group g;
    g.betti = cx.dim(n) - below.rank - above.rank;
    if (g.betti < 0)
        throw error("negative rank in degree " + std::to_string(n) +
                    "; the input is not a chain complex");
    for (const bigint& f : above.factors)
        if (f > 1)
            g.torsion.push_back(f);
    return g;
}

homology_summary homology(const chain_complex& cx) {
    const int top = cx.top_degree();
    std::vector<snf_result> snf(top + 2);
    for (int n = 1; n <= top + 1; ++n)
        snf[n] = smith_normal_form(cx.boundary(n));
    homology_summary out(std::max(top + 1, 0));
    for (int n = 0; n <= top; ++n) {
        out[n].betti = cx.dim(n) - (n >= 1 ? snf[n].rank : 0) - snf[n + 1].rank;
        if (out[n].betti < 0)
            throw error("negative rank in degree " + std::to_string(n) +
                        "; the input is not a chain complex");
        for (const bigint& f : snf[n + 1].factors)
            if (f > 1)
                out[n].torsion.push_back(f);
    }
    return out;
}

bool all_zero(const homology_summary& h) {
    return std::all_of(h.begin(), h.end(),
                       [](const homology_group& g) { return g.is_zero(); });
}

bool same_homology(const homology_summary& a, const homology_summary& b) {
    const size_t len = std::max(a.size(), b.size());
    for (size_t n = 0; n < len; ++n) {
        const homology_group ga = n < a.size() ? a[n] : homology_group{};
        const homology_group gb = n < b.size() ? b[n] : homology_group{};
        if (!(ga == gb))
            return false;
    }
    return true;
}

std::string describe(const homology_group& g) {
    if (g.is_zero())
        return "0";
    std::string out;
    if (g.betti == 1)
        out = "Z";
    else if (g.betti > 1)
        out = "Z^" + std::to_string(g.betti);
    for (const bigint& f : g.torsion) {
        if (!out.empty())
            out += " + ";
        out += "Z/" + f.get_str();
    }
    return out;
}

bool is_quasi_iso(const std::vector<sparse_matrix>& f, const chain_complex& c,
                  const chain_complex& d) {
    if (auto defect = verify_chain_map(f, c, d))
        throw error("not a chain map in degree " + std::to_string(defect->degree) +
                    " at generator " + c.label(defect->degree, defect->generator));
    return all_zero(homology(mapping_cone(f, c, d)));
}

}  // namespace maghom
