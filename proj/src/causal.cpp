#include "maghom/causal.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iterator>
#include <map>
#include <optional>

#include "maghom/magnitude.hpp"
#include "maghom/parallel.hpp"

namespace maghom {

causal_pair_complex build_causal_pair(const metric_space& space, long length,
                                      int from, int to) {
    causal_pair_complex out;
    out.from = from;
    out.to = to;
    for (int x = 0; x < space.size(); ++x)
        for (long t = 0; t <= length; ++t)
            if (space.dist(from, x) <= t && space.dist(x, to) <= length - t)
                out.vertices.emplace_back(x, static_cast<int>(t));

    int count = static_cast<int>(out.vertices.size());
    auto step = [&](int u, int v) {
        return space.dist(out.vertices[u].first, out.vertices[v].first);
    };
    auto follows = [&](int u, int v) {  // strictly later in the interval order
        if (u == v) return false;
        return step(u, v) <= out.vertices[v].second - out.vertices[u].second;
    };

    // collect the chains whose consecutive steps already sum to the full
    // length; those are the generators of the relative complex
    std::vector<std::vector<std::vector<int>>> seqs;
    std::vector<std::map<std::vector<int>, int>> index;
    std::vector<int> chain;
    std::function<void(int, const rational&)> grow = [&](int last, const rational& sum) {
        if (sum == length) {
            size_t degree = chain.size() - 1;
            if (seqs.size() <= degree) {
                seqs.resize(degree + 1);
                index.resize(degree + 1);
            }
            index[degree].emplace(chain, static_cast<int>(seqs[degree].size()));
            seqs[degree].push_back(chain);
        }
        for (int v = 0; v < count; ++v) {
            if (!follows(last, v)) continue;
            chain.push_back(v);
            grow(v, sum + step(last, v));
            chain.pop_back();
        }
    };
    for (int v = 0; v < count; ++v) {
        chain.assign(1, v);
        grow(v, 0);
    }

    int top = static_cast<int>(seqs.size()) - 1;
    std::vector<int> dims(top + 1);
    for (int n = 0; n <= top; ++n) dims[n] = static_cast<int>(seqs[n].size());
    std::vector<sparse_matrix> d;
    for (int n = 1; n <= top; ++n) {
        sparse_matrix m = sparse_matrix::zero(dims[n - 1], dims[n]);
        for (int c = 0; c < dims[n]; ++c) {
            const auto& s = seqs[n][c];
            rational sum = 0;
            for (int i = 0; i + 1 <= n; ++i) sum += step(s[i], s[i + 1]);
            for (int i = 0; i <= n; ++i) {
                rational dropped = sum;
                if (i == 0) {
                    dropped -= step(s[0], s[1]);
                } else if (i == n) {
                    dropped -= step(s[n - 1], s[n]);
                } else {
                    dropped += step(s[i - 1], s[i + 1]) - step(s[i - 1], s[i]) -
                               step(s[i], s[i + 1]);
                }
                if (dropped != length) continue;  // the face fell into the short part
                std::vector<int> face;
                face.reserve(n);
                for (int k = 0; k <= n; ++k)
                    if (k != i) face.push_back(s[k]);
                m.set(index[n - 1].at(face), c, (i % 2) ? bigint(-1) : bigint(1));
            }
        }
        d.push_back(std::move(m));
    }
    out.relative = chain_complex(dims, std::move(d));
    return out;
}

causal_report cau_verify_length(const metric_space& space, long length, int jobs) {
    causal_report rep;
    rep.length = length;

    int n = space.size();
    auto pieces = parallel_map(n * n, jobs, [&](int i) -> std::optional<causal_pair_complex> {
        return build_causal_pair(space, length, i / n, i % n);
    });
    std::vector<const chain_complex*> parts;
    parts.reserve(pieces.size());
    for (const auto& p : pieces) parts.push_back(&p->relative);
    rep.relative_total = homology(direct_sum(parts));
    rep.magnitude = homology(build_complex(space, rational(static_cast<int>(length))).cx);

    auto group = [](const homology_summary& h, int k) -> const homology_group& {
        static const homology_group zero;
        if (k < 0 || k >= static_cast<int>(h.size())) return zero;
        return h[k];
    };
    int reach = static_cast<int>(std::max(rep.relative_total.size(), rep.magnitude.size())) +
                causal_shift_window;
    for (int s = -causal_shift_window; s <= causal_shift_window; ++s) {
        bool fits = true;
        for (int k = 0; fits && k <= reach; ++k)
            fits = group(rep.relative_total, k) == group(rep.magnitude, k + s);
        if (fits) rep.shifts.push_back(s);
    }
    return rep;
}

causal_summary cau_verify(const metric_space& space, const rational& l_max, int jobs) {
    for (int i = 0; i < space.size(); ++i)
        for (int j = 0; j < space.size(); ++j)
            if (space.dist(i, j).get_den() != 1)
                throw input_error("comparison with the interval order needs integer distances; d(" +
                                  space.label(i) + "," + space.label(j) + ") = " +
                                  format_rational(space.dist(i, j)));

    causal_summary out;
    for (const rational& l : achievable_lengths(space, l_max)) {
        long ell = l.get_num().get_si();
        out.rows.push_back(cau_verify_length(space, ell, jobs));
    }

    bool first = true;
    std::vector<int> common;
    for (const auto& row : out.rows) {
        if (first) {
            common = row.shifts;
            first = false;
            continue;
        }
        std::vector<int> kept;
        std::set_intersection(common.begin(), common.end(), row.shifts.begin(),
                              row.shifts.end(), std::back_inserter(kept));
        common = std::move(kept);
    }
    out.common_shifts = std::move(common);
    out.reported_shift = 0;
    bool have = false;
    for (int s : out.common_shifts)
        if (!have || std::abs(s) < std::abs(out.reported_shift) ||
            (std::abs(s) == std::abs(out.reported_shift) && s < out.reported_shift)) {
            out.reported_shift = s;
            have = true;
        }
    return out;
}

}  // namespace maghom
