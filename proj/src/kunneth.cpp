#include "maghom/kunneth.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "maghom/parallel.hpp"

namespace maghom {

rhs_complex kunneth_rhs(const metric_space& fiber, const metric_space& base,
                        const rational& length, int n_max) {
    rhs_complex out;
    auto base_lengths = achievable_lengths(base, length);
    std::set<rational> base_set(base_lengths.begin(), base_lengths.end());
    for (const rational& lv : achievable_lengths(fiber, length)) {
        rational lh = length - lv;
        if (base_set.count(lh)) out.splits.emplace_back(lv, lh);
    }
    out.fiber_factors.reserve(out.splits.size());
    out.base_factors.reserve(out.splits.size());
    for (const auto& [lv, lh] : out.splits) {
        out.fiber_factors.push_back(build_complex(fiber, lv, n_max));
        out.base_factors.push_back(build_complex(base, lh, n_max));
    }
    std::vector<std::pair<const chain_complex*, const chain_complex*>> parts;
    for (size_t s = 0; s < out.splits.size(); ++s)
        parts.emplace_back(&out.fiber_factors[s].cx, &out.base_factors[s].cx);
    out.tensor = tensor_and_sum(parts);
    return out;
}

phi_psi build_phi_psi(const fibration& fib, const fiber_space& fiber,
                      const magnitude_complex& full, const basis_selection& quotient,
                      const rhs_complex& rhs) {
    const metric_space& total = fib.total();
    int basepoint = fiber.base_point;

    std::map<int, int> fiber_index;  // total point -> index inside the fiber space
    for (size_t i = 0; i < fiber.total_points.size(); ++i)
        fiber_index[fiber.total_points[i]] = static_cast<int>(i);

    std::map<std::pair<rational, rational>, int> split_index;
    for (size_t s = 0; s < rhs.splits.size(); ++s)
        split_index[rhs.splits[s]] = static_cast<int>(s);

    int quotient_top = quotient.cx.top_degree();
    int tensor_top = rhs.tensor.cx.top_degree();
    int top = std::max(quotient_top, tensor_top);

    std::vector<std::vector<int>> to_new(full.cx.top_degree() + 1);
    for (int n = 0; n <= full.cx.top_degree(); ++n) {
        to_new[n].assign(full.cx.dim(n), -1);
        if (n <= quotient_top)
            for (size_t q = 0; q < quotient.kept[n].size(); ++q)
                to_new[n][quotient.kept[n][q]] = static_cast<int>(q);
    }

    phi_psi maps;
    for (int n = 0; n <= top; ++n) {
        sparse_matrix phi = sparse_matrix::zero(rhs.tensor.cx.dim(n), quotient.cx.dim(n));
        sparse_matrix psi = sparse_matrix::zero(quotient.cx.dim(n), rhs.tensor.cx.dim(n));

        for (int q = 0; n <= quotient_top && q < quotient.cx.dim(n); ++q) {
            const auto& tuple = full.bases[n].tuples[quotient.kept[n][q]];
            std::string word = n == 0 ? "" : t_word(fib, tuple);
            int m = 0;
            while (m < static_cast<int>(word.size()) && word[m] == 'v') ++m;
            for (int k = m; k < static_cast<int>(word.size()); ++k)
                if (word[k] != 'h')
                    throw error("tuple " + tuple_label(total, tuple) +
                                " survives the quotient but its word is " + word);
            rational lv = 0;
            for (int i = 0; i < m; ++i) lv += total.dist(tuple[i], tuple[i + 1]);
            auto split = split_index.find({lv, full.length - lv});
            if (split == split_index.end())
                throw error("no length split " + format_rational(lv) + "+" +
                            format_rational(full.length - lv) + " for " +
                            tuple_label(total, tuple));
            int s = split->second;
            std::vector<int> ftuple, btuple;
            for (int i = 0; i <= m; ++i)
                ftuple.push_back(fiber_index.at(fib.lift(tuple[i], basepoint)));
            for (int i = m; i <= n; ++i) btuple.push_back(fib.project(tuple[i]));
            const auto& fb = rhs.fiber_factors[s].bases;
            const auto& bb = rhs.base_factors[s].bases;
            int fi = m < static_cast<int>(fb.size()) ? fb[m].find(ftuple) : -1;
            int bi = n - m < static_cast<int>(bb.size()) ? bb[n - m].find(btuple) : -1;
            int cell = fi < 0 || bi < 0 ? -1 : rhs.tensor.find(n, {s, m, fi, bi});
            if (cell < 0)
                throw error("split image of " + tuple_label(total, tuple) +
                            " is missing from the tensor side");
            phi.set(cell, q, 1);
        }

        for (int c = 0; n <= tensor_top && c < rhs.tensor.cx.dim(n); ++c) {
            const tensor_cell& cell = rhs.tensor.cells[n][c];
            const auto& ftuple = rhs.fiber_factors[cell.summand].bases[cell.left_degree]
                                     .tuples[cell.left_index];
            const auto& btuple = rhs.base_factors[cell.summand].bases[n - cell.left_degree]
                                     .tuples[cell.right_index];
            std::vector<int> tuple;
            for (int f : ftuple)
                tuple.push_back(fib.lift(fiber.total_points[f], btuple[0]));
            int cur = tuple.back();
            for (size_t k = 1; k < btuple.size(); ++k) {
                cur = fib.lift(cur, btuple[k]);
                tuple.push_back(cur);
            }
            int old = n < static_cast<int>(full.bases.size()) ? full.bases[n].find(tuple) : -1;
            int q = old < 0 ? -1 : to_new[n][old];
            if (q < 0)
                throw error("lifted tuple " + tuple_label(total, tuple) +
                            " does not land in the quotient");
            psi.set(q, c, 1);
        }

        maps.phi.push_back(std::move(phi));
        maps.psi.push_back(std::move(psi));
    }
    return maps;
}

namespace {

bool same_up_to(const homology_summary& a, const homology_summary& b, int limit) {
    int n = static_cast<int>(std::max(a.size(), b.size()));
    static const homology_group zero;
    for (int i = 0; i < n && i <= limit; ++i) {
        const homology_group& ga = i < static_cast<int>(a.size()) ? a[i] : zero;
        const homology_group& gb = i < static_cast<int>(b.size()) ? b[i] : zero;
        if (!(ga == gb)) return false;
    }
    return true;
}

kunneth_length_report check_length(const fibration& fib, int basepoint,
                                   const rational& length, int n_max) {
    kunneth_length_report rep;
    rep.length = length;
    // with a truncated degree range, the top degree's homology depends on
    // missing cells one degree up, so comparisons stop just below the cut
    int compare_limit = n_max < 0 ? std::numeric_limits<int>::max() : n_max - 1;

    magnitude_complex mc = build_complex(fib.total(), length, n_max);
    auto mask = d_mask(fib, mc);

    basis_selection sub = subcomplex_of(mc.cx, mask);
    basis_selection quot;
    try {
        quot = quotient_by(mc.cx, mask);
    } catch (const error& e) {
        rep.detail = e.what();
        return rep;
    }
    rep.quotient_ok = true;

    rep.h_d = homology(sub.cx);
    rep.d_acyclic = all_zero(rep.h_d);
    if (!rep.d_acyclic && rep.detail.empty())
        rep.detail = "distinguished subcomplex has nonzero homology";

    fiber_space fiber = take_fiber(fib, basepoint);
    rhs_complex rhs = kunneth_rhs(fiber.space, fib.base(), length, n_max);

    try {
        phi_psi maps = build_phi_psi(fib, fiber, mc, quot, rhs);
        int top = static_cast<int>(maps.phi.size()) - 1;
        for (int n = 0; n <= top && n <= compare_limit + 1; ++n) {
            if (quot.cx.dim(n) != rhs.tensor.cx.dim(n))
                throw error("quotient and tensor side disagree in degree " +
                            std::to_string(n) + ": " + std::to_string(quot.cx.dim(n)) +
                            " vs " + std::to_string(rhs.tensor.cx.dim(n)));
            if (multiply(maps.phi[n], maps.psi[n]) != sparse_matrix::identity(rhs.tensor.cx.dim(n)) ||
                multiply(maps.psi[n], maps.phi[n]) != sparse_matrix::identity(quot.cx.dim(n)))
                throw error("maps fail to invert each other in degree " + std::to_string(n));
        }
        if (auto defect = verify_chain_map(maps.phi, quot.cx, rhs.tensor.cx))
            throw error("splitting map does not commute with the boundary at degree " +
                        std::to_string(defect->degree) + " generator " +
                        quot.cx.label(defect->degree, defect->generator));
        if (auto defect = verify_chain_map(maps.psi, rhs.tensor.cx, quot.cx))
            throw error("lifting map does not commute with the boundary at degree " +
                        std::to_string(defect->degree) + " generator " +
                        rhs.tensor.cx.label(defect->degree, defect->generator));
        rep.maps_ok = true;
    } catch (const error& e) {
        if (rep.detail.empty()) rep.detail = e.what();
    }

    rep.h_total = homology(mc.cx);
    rep.h_quotient = homology(quot.cx);
    rep.h_rhs = homology(rhs.tensor.cx);
    rep.homology_match = same_up_to(rep.h_total, rep.h_quotient, compare_limit) &&
                         same_up_to(rep.h_quotient, rep.h_rhs, compare_limit);
    if (!rep.homology_match && rep.detail.empty())
        rep.detail = "homology differs between the total complex, the quotient and the sum";

    if (n_max < 0) {
        std::vector<sparse_matrix> proj;
        for (int n = 0; n <= mc.cx.top_degree(); ++n) {
            sparse_matrix p = sparse_matrix::zero(quot.cx.dim(n), mc.cx.dim(n));
            if (n <= quot.cx.top_degree())
                for (size_t q = 0; q < quot.kept[n].size(); ++q)
                    p.set(static_cast<int>(q), quot.kept[n][q], 1);
            proj.push_back(std::move(p));
        }
        try {
            rep.projection_qiso = is_quasi_iso(proj, mc.cx, quot.cx);
        } catch (const error& e) {
            if (rep.detail.empty()) rep.detail = e.what();
        }
        if (!rep.projection_qiso && rep.detail.empty())
            rep.detail = "collapse onto the quotient is not a quasi-isomorphism";
    } else {
        rep.projection_qiso = true;  // cone check needs the complete degree range
    }
    return rep;
}

}  // namespace

kunneth_report verify_kunneth(const fibration& fib, int basepoint, const rational& l_max,
                              int n_max, int jobs) {
    if (basepoint < 0 || basepoint >= fib.base().size())
        throw error("basepoint index out of range");
    kunneth_report out;
    out.basepoint = basepoint;
    auto lengths = achievable_lengths(fib.total(), l_max);
    out.rows = parallel_map(static_cast<int>(lengths.size()), jobs, [&](int i) {
        return check_length(fib, basepoint, lengths[i], n_max);
    });
    return out;
}

}  // namespace maghom
