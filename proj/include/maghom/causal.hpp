#pragma once

#include "maghom/homology.hpp"
#include "maghom/metric_space.hpp"

namespace maghom {

// order complex of the interval poset between two endpoints, taken relative to
// the faces whose consecutive steps sum to less than the full length
struct causal_pair_complex {
    int from = 0, to = 0;
    std::vector<std::pair<int, int>> vertices;  // (point, time), lexicographic
    chain_complex relative;
};

causal_pair_complex build_causal_pair(const metric_space& space, long length,
                                      int from, int to);

struct causal_report {
    rational length;
    homology_summary relative_total;  // direct sum over all ordered endpoint pairs
    homology_summary magnitude;
    std::vector<int> shifts;  // every s in the probe window with relative[n] == magnitude[n+s]

    bool passed() const { return !shifts.empty(); }
};

// largest degree shift probed in either direction when fitting the two sides
inline constexpr int causal_shift_window = 8;

causal_report cau_verify_length(const metric_space& space, long length, int jobs = 1);

struct causal_summary {
    std::vector<causal_report> rows;
    std::vector<int> common_shifts;  // shifts that fit every row
    int reported_shift = 0;          // smallest in absolute value, ties to the smaller

    bool passed() const { return !common_shifts.empty(); }
};

// requires an integer-valued metric; compares over every achievable integer
// length up to the bound
causal_summary cau_verify(const metric_space& space, const rational& l_max, int jobs = 1);

}  // namespace maghom
