#pragma once

#include "maghom/magnitude.hpp"

namespace maghom {

// semi-simplicial set of path tuples with a disjoint basepoint; faces that
// destroy the length land on the basepoint, encoded as -1
struct pointed_delta_set {
    rational length;
    std::vector<path_basis> cells;                     // degree 0..top, basepoint left implicit
    std::vector<std::vector<std::vector<int>>> faces;  // faces[n][c][i], -1 = basepoint
    std::vector<std::vector<char>> collapsed;          // cells re-pointed onto the basepoint
    std::vector<std::vector<std::string>> labels;

    int top_degree() const { return static_cast<int>(cells.size()) - 1; }
    // face through the re-pointing: collapsed targets read as the basepoint
    int face(int n, int c, int i) const;
};

pointed_delta_set build_pointed_delta(const metric_space& space, const rational& length,
                                      int n_max = -1);

// same construction restricted to the distinguished tuples
pointed_delta_set build_pointed_delta_d(const fibration& fib, const rational& length,
                                        int n_max = -1);

// re-points every distinguished cell onto the basepoint
void collapse_d_cells(const fibration& fib, pointed_delta_set& ds);

struct delta_defect {
    int degree, cell, i, j;  // d_i d_j != d_{j-1} d_i at this cell
};

std::optional<delta_defect> verify_delta_identities(const pointed_delta_set& ds);

// chains on the non-basepoint cells with the alternating face sum
chain_complex reduced_chain_complex(const pointed_delta_set& ds);

struct deltaiso_report {
    rational length;
    int cells = 0;  // live cells on either side once the bijection checks out
    bool bijection_ok = false;
    bool faces_ok = false;
    bool inverse_ok = false;
    std::string detail;

    bool passed() const { return bijection_ok && faces_ok && inverse_ok; }
};

// cell-by-cell comparison of the re-pointed tuple set of the total space with
// that of the matching product of a fiber and the base
deltaiso_report deltaiso_check(const fibration& fib, int basepoint, const rational& length,
                               int n_max = -1);

}  // namespace maghom
