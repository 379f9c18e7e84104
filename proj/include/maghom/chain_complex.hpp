#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "maghom/rational.hpp"

namespace maghom {

// integer matrix stored as columns of (row, coefficient) pairs, sorted by row,
// never holding explicit zeros
struct sparse_matrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, bigint>>> columns;

    static sparse_matrix zero(int rows, int cols);
    static sparse_matrix identity(int n);

    bigint get(int row, int col) const;
    void set(int row, int col, const bigint& value);  // value 0 erases the entry

    int nonzero_count() const;
    bool is_zero() const;

    bool operator==(const sparse_matrix&) const = default;
};

sparse_matrix multiply(const sparse_matrix& a, const sparse_matrix& b);

// non-negatively graded complex of free integer modules; boundary(n) maps
// degree n to degree n-1 and vanishing of consecutive composites is checked
// at construction
class chain_complex {
public:
    // d[k] is the boundary from degree k+1 to degree k; labels are optional
    // generator names used in diagnostics
    chain_complex(std::vector<int> dims, std::vector<sparse_matrix> d,
                  std::vector<std::vector<std::string>> labels = {});

    chain_complex() : chain_complex(std::vector<int>{}, {}) {}  // the empty complex

    int top_degree() const { return static_cast<int>(dims_.size()) - 1; }
    int dim(int n) const;
    const sparse_matrix& boundary(int n) const;  // zero-sized outside 1..top_degree
    std::string label(int n, int i) const;
    bool has_labels() const { return !labels_.empty(); }

    std::string dump() const;

private:
    std::vector<int> dims_;
    std::vector<sparse_matrix> boundaries_;  // boundaries_[n] = boundary(n); [0] is the map to the zero module
    std::vector<std::vector<std::string>> labels_;
    sparse_matrix pad_top_;  // boundary(top_degree+1)
    sparse_matrix pad_far_;  // boundary further out
};

// equality of dims and boundary matrices, ignoring labels
bool same_complex(const chain_complex& a, const chain_complex& b);

chain_complex direct_sum(const std::vector<const chain_complex*>& parts);

// restriction to masked generators / quotient by them; both require the masked
// set to be closed under the boundary and throw naming an escaping generator
struct basis_selection {
    chain_complex cx;
    std::vector<std::vector<int>> kept;  // degree -> new index -> old index
};

basis_selection subcomplex_of(const chain_complex& full,
                              const std::vector<std::vector<char>>& mask);
basis_selection quotient_by(const chain_complex& full,
                            const std::vector<std::vector<char>>& sub_mask);

// direct sum over summands s of tensor products left[s] (x) right[s], with the
// Koszul sign (-1)^(left degree) on the right factor's boundary
struct tensor_cell {
    int summand;
    int left_degree;
    int left_index;
    int right_index;

    auto operator<=>(const tensor_cell&) const = default;
};

struct tensor_complex {
    chain_complex cx;
    std::vector<std::vector<tensor_cell>> cells;  // degree -> position -> cell
    std::vector<std::map<tensor_cell, int>> index;

    int find(int degree, const tensor_cell& cell) const;  // -1 if absent
};

tensor_complex tensor_and_sum(
    const std::vector<std::pair<const chain_complex*, const chain_complex*>>& parts);

// first degree and generator where f fails to commute with the boundaries
struct chain_map_defect {
    int degree;
    int generator;
};

/// f[n]: degree-n part of a map c -> d; missing degrees are treated as zero
std::optional<chain_map_defect> verify_chain_map(const std::vector<sparse_matrix>& f,
                                                 const chain_complex& c,
                                                 const chain_complex& d);

// cone of a chain map f: c -> d, with degree n part c_(n-1) + d_n; acyclic
// exactly when f is a quasi-isomorphism
chain_complex mapping_cone(const std::vector<sparse_matrix>& f, const chain_complex& c,
                           const chain_complex& d);

}  // namespace maghom
