#include "maghom/magnitude.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace maghom {

int path_basis::find(const std::vector<int>& tuple) const {
    auto it = index.find(tuple);
    return it == index.end() ? -1 : it->second;
}

int complete_degree(const metric_space& space, const rational& length) {
    if (length <= 0) return 0;
    rational delta = space.min_positive_distance();
    if (delta == 0) return 0;  // one-point space carries nothing of positive length
    rational q = length / delta;
    bigint floor;
    mpz_fdiv_q(floor.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    if (floor > 1000000) throw error("length bound too large for " + format_rational(length));
    return static_cast<int>(floor.get_si());
}

std::string tuple_label(const metric_space& space, const std::vector<int>& tuple) {
    std::string out = "(";
    for (size_t i = 0; i < tuple.size(); ++i) {
        if (i) out += ",";
        out += space.label(tuple[i]);
    }
    out += ")";
    return out;
}

namespace {

// depth-first enumeration; starting points ascending and extensions ascending,
// so each degree comes out in lexicographic order
std::vector<path_basis> enumerate_bases(const metric_space& space, const rational& length,
                                        int n_max,
                                        const std::function<bool(const std::vector<int>&)>& keep) {
    std::vector<path_basis> bases(n_max + 1);
    std::vector<int> tuple;
    std::function<void(const rational&)> extend = [&](const rational& sum) {
        if (sum == length) {
            int degree = static_cast<int>(tuple.size()) - 1;
            if (keep(tuple)) {
                bases[degree].index.emplace(tuple, bases[degree].size());
                bases[degree].tuples.push_back(tuple);
            }
        }
        if (static_cast<int>(tuple.size()) == n_max + 1) return;
        int last = tuple.back();
        for (int next = 0; next < space.size(); ++next) {
            if (next == last) continue;
            rational grown = sum + space.dist(last, next);
            if (grown > length) continue;
            tuple.push_back(next);
            extend(grown);
            tuple.pop_back();
        }
    };
    for (int start = 0; start < space.size(); ++start) {
        tuple.assign(1, start);
        extend(0);
    }
    return bases;
}

magnitude_complex assemble(const metric_space& space, const rational& length,
                           std::vector<path_basis> bases, bool restricted) {
    int top = static_cast<int>(bases.size()) - 1;
    std::vector<int> dims(top + 1);
    std::vector<std::vector<std::string>> labels(top + 1);
    for (int n = 0; n <= top; ++n) {
        dims[n] = bases[n].size();
        for (const auto& t : bases[n].tuples) labels[n].push_back(tuple_label(space, t));
    }
    std::vector<sparse_matrix> d;
    for (int n = 1; n <= top; ++n) {
        sparse_matrix m = sparse_matrix::zero(dims[n - 1], dims[n]);
        for (int c = 0; c < dims[n]; ++c) {
            const auto& t = bases[n].tuples[c];
            for (int i = 1; i < n; ++i) {
                if (!is_between(space, t[i - 1], t[i], t[i + 1])) continue;
                std::vector<int> face;
                face.reserve(n);
                for (int k = 0; k <= n; ++k)
                    if (k != i) face.push_back(t[k]);
                int r = bases[n - 1].find(face);
                if (r < 0) {
                    std::string why = restricted
                        ? "face " + tuple_label(space, face) + " of " + tuple_label(space, t) +
                              " leaves the subcomplex"
                        : "face " + tuple_label(space, face) + " of " + tuple_label(space, t) +
                              " missing from the basis";
                    throw error(why + " at length " + format_rational(length));
                }
                m.set(r, c, (i % 2) ? bigint(-1) : bigint(1));
            }
        }
        d.push_back(std::move(m));
    }
    return {length, std::move(bases), chain_complex(dims, std::move(d), labels)};
}

}  // namespace

magnitude_complex build_complex(const metric_space& space, const rational& length, int n_max) {
    if (length < 0) throw error("negative length " + format_rational(length));
    if (n_max < 0) n_max = complete_degree(space, length);
    auto bases = enumerate_bases(space, length, n_max, [](const std::vector<int>&) { return true; });
    return assemble(space, length, std::move(bases), false);
}

magnitude_complex build_d_complex(const fibration& fib, const rational& length, int n_max) {
    if (length < 0) throw error("negative length " + format_rational(length));
    const metric_space& total = fib.total();
    if (n_max < 0) n_max = complete_degree(total, length);
    auto keep = [&](const std::vector<int>& tuple) {
        if (tuple.size() < 2) return false;  // words of degree 0 are empty
        return d_membership(t_word(fib, tuple)) != d_kind::outside;
    };
    auto bases = enumerate_bases(total, length, n_max, keep);
    return assemble(total, length, std::move(bases), true);
}

std::vector<std::vector<char>> d_mask(const fibration& fib, const magnitude_complex& mc) {
    std::vector<std::vector<char>> mask;
    for (const auto& basis : mc.bases) {
        std::vector<char> row;
        row.reserve(basis.tuples.size());
        for (const auto& t : basis.tuples) {
            bool in = t.size() >= 2 && d_membership(t_word(fib, t)) != d_kind::outside;
            row.push_back(in ? 1 : 0);
        }
        mask.push_back(std::move(row));
    }
    return mask;
}

std::vector<rational> achievable_lengths(const metric_space& space, const rational& l_max) {
    std::set<rational> sums;
    std::set<std::pair<int, rational>> seen;
    std::deque<std::pair<int, rational>> queue;
    for (int x = 0; x < space.size(); ++x) {
        queue.emplace_back(x, 0);
        seen.emplace(x, 0);
    }
    while (!queue.empty()) {
        auto [x, sum] = queue.front();
        queue.pop_front();
        sums.insert(sum);
        for (int y = 0; y < space.size(); ++y) {
            if (y == x) continue;
            rational grown = sum + space.dist(x, y);
            if (grown > l_max) continue;
            if (seen.emplace(y, grown).second) queue.emplace_back(y, grown);
        }
    }
    return {sums.begin(), sums.end()};
}

}  // namespace maghom
