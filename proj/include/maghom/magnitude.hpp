#pragma once

#include "maghom/chain_complex.hpp"
#include "maghom/classify.hpp"

namespace maghom {

// tuples of one degree in lexicographic order of point indices
struct path_basis {
    std::vector<std::vector<int>> tuples;
    std::map<std::vector<int>, int> index;

    int find(const std::vector<int>& tuple) const;
    int size() const { return static_cast<int>(tuples.size()); }
};

struct magnitude_complex {
    rational length;
    std::vector<path_basis> bases;  // degree 0..top
    chain_complex cx;
};

// largest degree that could carry a tuple of the given total length
int complete_degree(const metric_space& space, const rational& length);

// tuples with consecutive points distinct and exact total length, with the
// betweenness boundary; n_max < 0 selects the complete degree range
magnitude_complex build_complex(const metric_space& space, const rational& length,
                                int n_max = -1);

// restriction to tuples whose word puts them in the distinguished subcomplex
magnitude_complex build_d_complex(const fibration& fib, const rational& length,
                                  int n_max = -1);

// per-degree membership mask of the distinguished tuples inside a full complex
std::vector<std::vector<char>> d_mask(const fibration& fib, const magnitude_complex& mc);

// every total length realizable by some tuple, up to the bound, ascending;
// always contains 0
std::vector<rational> achievable_lengths(const metric_space& space, const rational& l_max);

std::string tuple_label(const metric_space& space, const std::vector<int>& tuple);

}  // namespace maghom
