#include "maghom/delta_set.hpp"

#include <algorithm>

namespace maghom {

int pointed_delta_set::face(int n, int c, int i) const {
    int raw = faces[n][c][i];
    if (raw < 0) return -1;
    return collapsed[n - 1][raw] ? -1 : raw;
}

namespace {

pointed_delta_set from_complex(const metric_space& space, magnitude_complex mc) {
    pointed_delta_set ds;
    ds.length = mc.length;
    ds.cells = std::move(mc.bases);
    int top = ds.top_degree();
    ds.faces.resize(top + 1);
    ds.collapsed.resize(top + 1);
    ds.labels.resize(top + 1);
    for (int n = 0; n <= top; ++n) {
        ds.collapsed[n].assign(ds.cells[n].size(), 0);
        for (const auto& t : ds.cells[n].tuples) ds.labels[n].push_back(tuple_label(space, t));
        if (n == 0) {
            ds.faces[0].assign(ds.cells[0].size(), {});
            continue;
        }
        for (const auto& t : ds.cells[n].tuples) {
            std::vector<int> fs(n + 1, -1);
            for (int i = 1; i < n; ++i) {
                if (!is_between(space, t[i - 1], t[i], t[i + 1])) continue;
                std::vector<int> sub;
                sub.reserve(n);
                for (int k = 0; k <= n; ++k)
                    if (k != i) sub.push_back(t[k]);
                int target = ds.cells[n - 1].find(sub);
                if (target < 0)
                    throw error("face " + tuple_label(space, sub) + " of " +
                                tuple_label(space, t) + " is missing from the cell set");
                fs[i] = target;
            }
            ds.faces[n].push_back(std::move(fs));
        }
    }
    return ds;
}

}  // namespace

pointed_delta_set build_pointed_delta(const metric_space& space, const rational& length,
                                      int n_max) {
    return from_complex(space, build_complex(space, length, n_max));
}

pointed_delta_set build_pointed_delta_d(const fibration& fib, const rational& length,
                                        int n_max) {
    return from_complex(fib.total(), build_d_complex(fib, length, n_max));
}

void collapse_d_cells(const fibration& fib, pointed_delta_set& ds) {
    for (int n = 0; n <= ds.top_degree(); ++n)
        for (size_t c = 0; c < ds.cells[n].tuples.size(); ++c) {
            const auto& t = ds.cells[n].tuples[c];
            if (t.size() >= 2 && d_membership(t_word(fib, t)) != d_kind::outside)
                ds.collapsed[n][c] = 1;
        }
}

std::optional<delta_defect> verify_delta_identities(const pointed_delta_set& ds) {
    for (int n = 2; n <= ds.top_degree(); ++n)
        for (int c = 0; c < ds.cells[n].size(); ++c)
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i) {
                    int fj = ds.face(n, c, j);
                    int lhs = fj < 0 ? -1 : ds.face(n - 1, fj, i);
                    int fi = ds.face(n, c, i);
                    int rhs = fi < 0 ? -1 : ds.face(n - 1, fi, j - 1);
                    if (lhs != rhs) return delta_defect{n, c, i, j};
                }
    return std::nullopt;
}

chain_complex reduced_chain_complex(const pointed_delta_set& ds) {
    int top = ds.top_degree();
    std::vector<std::vector<int>> renumber(top + 1);
    std::vector<int> dims(top + 1, 0);
    std::vector<std::vector<std::string>> labels(top + 1);
    for (int n = 0; n <= top; ++n) {
        renumber[n].assign(ds.cells[n].size(), -1);
        for (int c = 0; c < ds.cells[n].size(); ++c) {
            if (ds.collapsed[n][c]) continue;
            renumber[n][c] = dims[n]++;
            labels[n].push_back(ds.labels[n][c]);
        }
    }
    std::vector<sparse_matrix> d;
    for (int n = 1; n <= top; ++n) {
        sparse_matrix m = sparse_matrix::zero(dims[n - 1], dims[n]);
        for (int c = 0; c < ds.cells[n].size(); ++c) {
            if (ds.collapsed[n][c]) continue;
            for (int i = 0; i <= n; ++i) {
                int target = ds.face(n, c, i);
                if (target < 0) continue;
                m.set(renumber[n - 1][target], renumber[n][c], (i % 2) ? bigint(-1) : bigint(1));
            }
        }
        d.push_back(std::move(m));
    }
    return chain_complex(dims, std::move(d), labels);
}

deltaiso_report deltaiso_check(const fibration& fib, int basepoint, const rational& length,
                               int n_max) {
    deltaiso_report rep;
    rep.length = length;
    const metric_space& total = fib.total();
    const metric_space& base = fib.base();
    int nb = base.size();

    fiber_space fiber = take_fiber(fib, basepoint);
    fibration product = trivial_product(fiber.space, base);
    const metric_space& ptotal = product.total();

    pointed_delta_set left = build_pointed_delta(total, length, n_max);
    collapse_d_cells(fib, left);
    pointed_delta_set right = build_pointed_delta(ptotal, length, n_max);
    collapse_d_cells(product, right);

    std::map<int, int> fiber_index;
    for (size_t i = 0; i < fiber.total_points.size(); ++i)
        fiber_index[fiber.total_points[i]] = static_cast<int>(i);

    int top = std::max(left.top_degree(), right.top_degree());

    // forward: split a tuple at the end of its vertical run into
    // (fiber part, base part) coordinates of the product
    auto forward = [&](int n, const std::vector<int>& t) {
        std::string word = n == 0 ? "" : t_word(fib, t);
        int m = 0;
        while (m < static_cast<int>(word.size()) && word[m] == 'v') ++m;
        std::vector<int> image(n + 1);
        int anchor = fiber_index.at(fib.lift(t[m], basepoint));
        for (int i = 0; i <= n; ++i) {
            int f = i <= m ? fiber_index.at(fib.lift(t[i], basepoint)) : anchor;
            image[i] = f * nb + fib.project(t[i]);
        }
        return image;
    };
    // backward: lift the fiber coordinates along the base coordinates
    auto backward = [&](int n, const std::vector<int>& t) {
        std::string word = n == 0 ? "" : t_word(product, t);
        int m = 0;
        while (m < static_cast<int>(word.size()) && word[m] == 'v') ++m;
        std::vector<int> image;
        image.reserve(n + 1);
        for (int i = 0; i <= m; ++i)
            image.push_back(fib.lift(fiber.total_points[t[i] / nb], t[0] % nb));
        int cur = image.back();
        for (int i = m + 1; i <= n; ++i) {
            cur = fib.lift(cur, t[i] % nb);
            image.push_back(cur);
        }
        return image;
    };

    std::vector<std::vector<int>> phi(top + 1);
    for (int n = 0; n <= top; ++n) {
        int ln = n <= left.top_degree() ? left.cells[n].size() : 0;
        int rn = n <= right.top_degree() ? right.cells[n].size() : 0;
        phi[n].assign(ln, -1);
        std::vector<char> hit(rn, 0);
        int live_left = 0, live_right = 0;
        for (int c = 0; c < rn; ++c)
            if (!right.collapsed[n][c]) ++live_right;
        for (int c = 0; c < ln; ++c) {
            if (left.collapsed[n][c]) continue;
            ++live_left;
            std::vector<int> image = forward(n, left.cells[n].tuples[c]);
            int target = n <= right.top_degree() ? right.cells[n].find(image) : -1;
            if (target < 0 || right.collapsed[n][target] || hit[target]) {
                rep.detail = "cell " + left.labels[n][c] + " has no unique partner";
                return rep;
            }
            hit[target] = 1;
            phi[n][c] = target;
        }
        if (live_left != live_right) {
            rep.detail = "degree " + std::to_string(n) + " has " + std::to_string(live_left) +
                         " cells on one side and " + std::to_string(live_right) + " on the other";
            return rep;
        }
        rep.cells += live_left;
    }
    rep.bijection_ok = true;

    for (int n = 1; n <= left.top_degree(); ++n)
        for (int c = 0; c < left.cells[n].size(); ++c) {
            if (left.collapsed[n][c]) continue;
            for (int i = 0; i <= n; ++i) {
                int lf = left.face(n, c, i);
                int lhs = lf < 0 ? -1 : phi[n - 1][lf];
                int rhs = right.face(n, phi[n][c], i);
                if (lhs != rhs) {
                    rep.detail = "face " + std::to_string(i) + " of " + left.labels[n][c] +
                                 " does not match across the bijection";
                    return rep;
                }
            }
        }
    rep.faces_ok = true;

    for (int n = 0; n <= right.top_degree(); ++n)
        for (int c = 0; c < right.cells[n].size(); ++c) {
            if (right.collapsed[n][c]) continue;
            std::vector<int> back = backward(n, right.cells[n].tuples[c]);
            int source = n <= left.top_degree() ? left.cells[n].find(back) : -1;
            if (source < 0 || phi[n][source] != c) {
                rep.detail = "cell " + right.labels[n][c] + " does not pull back to its partner";
                return rep;
            }
        }
    rep.inverse_ok = true;
    return rep;
}

}  // namespace maghom
