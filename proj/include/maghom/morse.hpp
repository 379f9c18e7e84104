#pragma once

#include "maghom/magnitude.hpp"

namespace maghom {

// pairs the cell `upper` in degree `upper_degree` with `lower` one degree down
struct matched_edge {
    int upper_degree = 0;
    int upper = 0;
    int lower = 0;
    auto operator<=>(const matched_edge&) const = default;
};

struct morse_matching {
    std::vector<matched_edge> edges;
};

struct matching_failure {
    enum kind_t { bad_edge, shared_cell, non_unit, cycle } kind;
    std::string message;
    std::vector<matched_edge> involved;
};

// checks well-formedness, disjointness, unit incidence and acyclicity of the
// induced digraph on matched pairs
std::optional<matching_failure> validate_matching(const chain_complex& cx,
                                                  const morse_matching& m);

// pairs every tilted-first tuple of the distinguished complex with its filled
// partner one degree up
morse_matching hv_matching(const fibration& fib, const magnitude_complex& d_complex);

struct morse_reduction {
    chain_complex cx;                        // complex on the unmatched cells
    std::vector<std::vector<int>> critical;  // degree -> surviving original indices
};

// cancels matched pairs by Gaussian elimination, one pair at a time; throws if
// the matching does not validate
morse_reduction morse_reduce(const chain_complex& cx, const morse_matching& m);

}  // namespace maghom
