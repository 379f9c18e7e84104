#include "maghom/morse.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

namespace maghom {

namespace {

std::string cell_name(const chain_complex& cx, int degree, int index) {
    return "degree " + std::to_string(degree) + " cell " + cx.label(degree, index);
}

std::string edge_name(const chain_complex& cx, const matched_edge& e) {
    return cell_name(cx, e.upper_degree, e.upper) + " <-> " +
           cell_name(cx, e.upper_degree - 1, e.lower);
}

}  // namespace

std::optional<matching_failure> validate_matching(const chain_complex& cx,
                                                  const morse_matching& m) {
    std::map<std::pair<int, int>, matched_edge> used;
    for (const auto& e : m.edges) {
        if (e.upper_degree < 1 || e.upper_degree > cx.top_degree() ||
            e.upper < 0 || e.upper >= cx.dim(e.upper_degree) ||
            e.lower < 0 || e.lower >= cx.dim(e.upper_degree - 1)) {
            return matching_failure{matching_failure::bad_edge,
                                    "edge out of range in degree " +
                                        std::to_string(e.upper_degree),
                                    {e}};
        }
        for (auto cell : {std::pair{e.upper_degree, e.upper},
                          std::pair{e.upper_degree - 1, e.lower}}) {
            auto [it, fresh] = used.emplace(cell, e);
            if (!fresh) {
                return matching_failure{matching_failure::shared_cell,
                                        cell_name(cx, cell.first, cell.second) +
                                            " appears in two matched pairs",
                                        {it->second, e}};
            }
        }
        bigint v = cx.boundary(e.upper_degree).get(e.lower, e.upper);
        if (v != 1 && v != -1) {
            return matching_failure{matching_failure::non_unit,
                                    "incidence " + v.get_str() + " at " + edge_name(cx, e),
                                    {e}};
        }
    }

    // cycle check inside each degree pair: an edge from pair P to pair Q means
    // the boundary of P's upper cell touches Q's lower cell
    for (int d = 1; d <= cx.top_degree(); ++d) {
        std::vector<const matched_edge*> pairs;
        std::map<int, int> lower_to_pair;
        for (const auto& e : m.edges) {
            if (e.upper_degree != d) continue;
            lower_to_pair[e.lower] = static_cast<int>(pairs.size());
            pairs.push_back(&e);
        }
        if (pairs.empty()) continue;
        int count = static_cast<int>(pairs.size());
        std::vector<std::vector<int>> next(count);
        for (int p = 0; p < count; ++p) {
            for (const auto& [r, v] : cx.boundary(d).columns[pairs[p]->upper]) {
                auto it = lower_to_pair.find(r);
                if (it != lower_to_pair.end() && it->second != p)
                    next[p].push_back(it->second);
            }
        }
        std::vector<int> color(count, 0);
        std::vector<int> path;
        std::function<std::optional<matching_failure>(int)> visit =
            [&](int p) -> std::optional<matching_failure> {
            color[p] = 1;
            path.push_back(p);
            for (int q : next[p]) {
                if (color[q] == 1) {
                    std::vector<matched_edge> loop;
                    auto from = std::find(path.begin(), path.end(), q);
                    std::string msg = "matched pairs chase each other in degrees " +
                                      std::to_string(d) + "," + std::to_string(d - 1) + ":";
                    for (auto it = from; it != path.end(); ++it) {
                        loop.push_back(*pairs[*it]);
                        msg += " " + edge_name(cx, *pairs[*it]) + " ->";
                    }
                    msg += " " + edge_name(cx, *pairs[q]);
                    return matching_failure{matching_failure::cycle, msg, loop};
                }
                if (color[q] == 0) {
                    if (auto bad = visit(q)) return bad;
                }
            }
            path.pop_back();
            color[p] = 2;
            return std::nullopt;
        };
        for (int p = 0; p < count; ++p) {
            if (color[p] == 0) {
                if (auto bad = visit(p)) return bad;
            }
        }
    }
    return std::nullopt;
}

morse_matching hv_matching(const fibration& fib, const magnitude_complex& d_complex) {
    const metric_space& total = fib.total();
    int top = static_cast<int>(d_complex.bases.size()) - 1;
    morse_matching m;
    for (int n = 0; n <= top; ++n) {
        const auto& basis = d_complex.bases[n];
        for (int a = 0; a < basis.size(); ++a) {
            const auto& tuple = basis.tuples[a];
            d_kind kind = tuple.size() < 2 ? d_kind::outside
                                           : d_membership(t_word(fib, tuple));
            if (kind == d_kind::outside)
                throw error("complex is not the distinguished subcomplex: " +
                            tuple_label(total, tuple) + " lies outside it");
            if (kind != d_kind::tilted_first) continue;
            std::vector<int> filled = fill_hv(fib, tuple);
            int upper = n + 1 <= top ? d_complex.bases[n + 1].find(filled) : -1;
            if (upper < 0)
                throw error("complex truncated below degree " + std::to_string(n + 1) +
                            ": filled partner " + tuple_label(total, filled) + " of " +
                            tuple_label(total, tuple) + " is missing");
            m.edges.push_back({n + 1, upper, a});
        }
    }
    return m;
}

morse_reduction morse_reduce(const chain_complex& cx, const morse_matching& m) {
    if (auto bad = validate_matching(cx, m)) throw error(bad->message);

    int top = cx.top_degree();
    // per degree: column -> (row -> value), plus a row index for fast pivoting
    std::vector<std::map<int, std::map<int, bigint>>> cols(top + 1);
    std::vector<std::map<int, std::set<int>>> rows(top + 1);
    for (int n = 1; n <= top; ++n) {
        const sparse_matrix& b = cx.boundary(n);
        for (int j = 0; j < b.cols; ++j) {
            for (const auto& [r, v] : b.columns[j]) {
                cols[n][j][r] = v;
                rows[n][r].insert(j);
            }
        }
    }
    std::vector<std::vector<char>> alive(top + 1);
    for (int n = 0; n <= top; ++n) alive[n].assign(cx.dim(n), 1);

    auto eliminate = [&](int d, int a, int b) {
        auto ca = cols[d].find(a);
        bigint pivot = ca == cols[d].end() ? bigint(0) : ca->second.at(b);
        if (pivot != 1 && pivot != -1)
            throw error("pivot " + pivot.get_str() + " is not a unit during reduction");
        std::map<int, bigint> pivot_col = ca->second;
        std::set<int> sharers = rows[d].at(b);
        for (int j : sharers) {
            if (j == a) continue;
            bigint factor = -cols[d][j].at(b) / pivot;
            auto& col = cols[d][j];
            for (const auto& [r, v] : pivot_col) {
                bigint nv = v * factor;
                auto it = col.find(r);
                if (it != col.end()) nv += it->second;
                if (nv == 0) {
                    if (it != col.end()) {
                        col.erase(it);
                        rows[d][r].erase(j);
                    }
                } else {
                    col[r] = nv;
                    rows[d][r].insert(j);
                }
            }
        }
        for (const auto& [r, v] : pivot_col) rows[d][r].erase(a);
        cols[d].erase(a);
        rows[d].erase(b);
        if (d - 1 >= 1) {
            auto cb = cols[d - 1].find(b);
            if (cb != cols[d - 1].end()) {
                for (const auto& [r, v] : cb->second) rows[d - 1][r].erase(b);
                cols[d - 1].erase(cb);
            }
        }
        if (d + 1 <= top) {
            auto ra = rows[d + 1].find(a);
            if (ra != rows[d + 1].end()) {
                for (int j : ra->second) cols[d + 1][j].erase(a);
                rows[d + 1].erase(ra);
            }
        }
        alive[d][a] = 0;
        alive[d - 1][b] = 0;
    };

    // inside one degree pair, cancel in a topological order of the incidence
    // digraph so every pivot stays a unit
    for (int d = 1; d <= top; ++d) {
        std::vector<const matched_edge*> pairs;
        std::map<int, int> lower_to_pair;
        for (const auto& e : m.edges) {
            if (e.upper_degree != d) continue;
            lower_to_pair[e.lower] = static_cast<int>(pairs.size());
            pairs.push_back(&e);
        }
        if (pairs.empty()) continue;
        int count = static_cast<int>(pairs.size());
        std::vector<std::vector<int>> next(count);
        std::vector<int> indeg(count, 0);
        for (int p = 0; p < count; ++p) {
            for (const auto& [r, v] : cx.boundary(d).columns[pairs[p]->upper]) {
                auto it = lower_to_pair.find(r);
                if (it != lower_to_pair.end() && it->second != p) {
                    next[p].push_back(it->second);
                    ++indeg[it->second];
                }
            }
        }
        std::priority_queue<int, std::vector<int>, std::greater<>> ready;
        for (int p = 0; p < count; ++p)
            if (indeg[p] == 0) ready.push(p);
        int done = 0;
        while (!ready.empty()) {
            int p = ready.top();
            ready.pop();
            eliminate(d, pairs[p]->upper, pairs[p]->lower);
            ++done;
            for (int q : next[p])
                if (--indeg[q] == 0) ready.push(q);
        }
        if (done != count) throw error("matching digraph is not acyclic in degree " +
                                       std::to_string(d));
    }

    std::vector<std::vector<int>> critical(top + 1);
    std::vector<std::vector<int>> renumber(top + 1);
    std::vector<int> dims(top + 1);
    std::vector<std::vector<std::string>> labels(top + 1);
    for (int n = 0; n <= top; ++n) {
        renumber[n].assign(cx.dim(n), -1);
        for (int i = 0; i < cx.dim(n); ++i) {
            if (!alive[n][i]) continue;
            renumber[n][i] = static_cast<int>(critical[n].size());
            critical[n].push_back(i);
            if (cx.has_labels()) labels[n].push_back(cx.label(n, i));
        }
        dims[n] = static_cast<int>(critical[n].size());
    }
    std::vector<sparse_matrix> d;
    for (int n = 1; n <= top; ++n) {
        sparse_matrix b = sparse_matrix::zero(dims[n - 1], dims[n]);
        for (int j : critical[n]) {
            auto cj = cols[n].find(j);
            if (cj == cols[n].end()) continue;
            for (const auto& [r, v] : cj->second) {
                if (renumber[n - 1][r] < 0)
                    throw error("reduced boundary touches an eliminated cell");
                b.set(renumber[n - 1][r], renumber[n][j], v);
            }
        }
        d.push_back(std::move(b));
    }
    if (!cx.has_labels()) labels.clear();
    return {chain_complex(dims, std::move(d), labels), std::move(critical)};
}

}  // namespace maghom
