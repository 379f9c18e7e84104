#pragma once

#include "maghom/chain_complex.hpp"

namespace maghom {

struct homology_group {
    int betti = 0;
    std::vector<bigint> torsion;  // invariant factors > 1, each dividing the next

    bool is_zero() const { return betti == 0 && torsion.empty(); }
    bool operator==(const homology_group&) const = default;
};

// index = degree
using homology_summary = std::vector<homology_group>;

struct snf_result {
    int rank = 0;
    std::vector<bigint> factors;  // nonzero diagonal entries, ascending divisibility
};

snf_result smith_normal_form(const sparse_matrix& m);

homology_group homology_at(const chain_complex& cx, int n);
homology_summary homology(const chain_complex& cx);

bool all_zero(const homology_summary& h);
// equality up to trailing zero groups
bool same_homology(const homology_summary& a, const homology_summary& b);

std::string describe(const homology_group& g);  // "Z^2 + Z/3", "0", ...

// true iff the cone of f has vanishing homology; throws if f is not a chain map
bool is_quasi_iso(const std::vector<sparse_matrix>& f, const chain_complex& c,
                  const chain_complex& d);

}  // namespace maghom
