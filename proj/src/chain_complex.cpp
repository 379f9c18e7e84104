#include "maghom/chain_complex.hpp"

#include <algorithm>
#include <sstream>

namespace maghom {

sparse_matrix sparse_matrix::zero(int rows, int cols) {
    sparse_matrix m;
    m.rows = rows;
    m.cols = cols;
    m.columns.resize(cols);
    return m;
}

sparse_matrix sparse_matrix::identity(int n) {
    sparse_matrix m = zero(n, n);
    for (int i = 0; i < n; ++i)
        m.columns[i].emplace_back(i, 1);
    return m;
}

bigint sparse_matrix::get(int row, int col) const {
    const auto& column = columns[col];
    auto it = std::lower_bound(column.begin(), column.end(), row,
                               [](const auto& e, int r) { return e.first < r; });
    if (it != column.end() && it->first == row)
        return it->second;
    return 0;
}

void sparse_matrix::set(int row, int col, const bigint& value) {
    auto& column = columns[col];
    auto it = std::lower_bound(column.begin(), column.end(), row,
                               [](const auto& e, int r) { return e.first < r; });
    if (it != column.end() && it->first == row) {
        if (value == 0)
            column.erase(it);
        else
            it->second = value;
    } else if (value != 0) {
        column.insert(it, {row, value});
    }
}

int sparse_matrix::nonzero_count() const {
    int total = 0;
    for (const auto& column : columns)
        total += static_cast<int>(column.size());
    return total;
}

bool sparse_matrix::is_zero() const {
    for (const auto& column : columns)
        if (!column.empty())
            return false;
    return true;
}

sparse_matrix multiply(const sparse_matrix& a, const sparse_matrix& b) {
    if (a.cols != b.rows)
        throw error("matrix product shape mismatch: " + std::to_string(a.rows) + "x" +
                    std::to_string(a.cols) + " times " + std::to_string(b.rows) + "x" +
                    std::to_string(b.cols));
    sparse_matrix out = sparse_matrix::zero(a.rows, b.cols);
    for (int j = 0; j < b.cols; ++j) {
        std::map<int, bigint> acc;
        for (const auto& [mid, v] : b.columns[j])
            for (const auto& [row, w] : a.columns[mid])
                acc[row] += v * w;
        for (auto& [row, v] : acc)
            if (v != 0)
                out.columns[j].emplace_back(row, std::move(v));
    }
    return out;
}

chain_complex::chain_complex(std::vector<int> dims, std::vector<sparse_matrix> d,
                             std::vector<std::vector<std::string>> labels)
    : dims_(std::move(dims)), labels_(std::move(labels)) {
    const int top = top_degree();
    for (int n = 0; n <= top; ++n)
        if (dims_[n] < 0)
            throw error("negative dimension in degree " + std::to_string(n));
    if (static_cast<int>(d.size()) != std::max(top, 0))
        throw error("expected " + std::to_string(std::max(top, 0)) +
                    " boundary matrices, got " + std::to_string(d.size()));
    if (!labels_.empty()) {
        if (static_cast<int>(labels_.size()) != top + 1)
            throw error("label table does not cover every degree");
        for (int n = 0; n <= top; ++n)
            if (static_cast<int>(labels_[n].size()) != dims_[n])
                throw error("label count mismatch in degree " + std::to_string(n));
    }
    boundaries_.reserve(top + 1);
    if (top >= 0)
        boundaries_.push_back(sparse_matrix::zero(0, dims_[0]));
    for (int n = 1; n <= top; ++n) {
        sparse_matrix& m = d[n - 1];
        if (m.rows != dims_[n - 1] || m.cols != dims_[n])
            throw error("boundary in degree " + std::to_string(n) + " has shape " +
                        std::to_string(m.rows) + "x" + std::to_string(m.cols) +
                        ", expected " + std::to_string(dims_[n - 1]) + "x" +
                        std::to_string(dims_[n]));
        boundaries_.push_back(std::move(m));
    }
    for (int n = 1; n < top; ++n)
        if (!multiply(boundaries_[n], boundaries_[n + 1]).is_zero())
            throw error("boundary composite in degrees " + std::to_string(n + 1) + "," +
                        std::to_string(n) + " is nonzero");
    pad_top_ = sparse_matrix::zero(top >= 0 ? dims_[top] : 0, 0);
    pad_far_ = sparse_matrix::zero(0, 0);
}

int chain_complex::dim(int n) const {
    if (n < 0 || n > top_degree())
        return 0;
    return dims_[n];
}

const sparse_matrix& chain_complex::boundary(int n) const {
    if (n >= 0 && n <= top_degree())
        return boundaries_[n];
    if (n == top_degree() + 1)
        return pad_top_;
    return pad_far_;
}

std::string chain_complex::label(int n, int i) const {
    if (!labels_.empty() && n >= 0 && n <= top_degree())
        return labels_[n][i];
    return std::to_string(n) + ":" + std::to_string(i);
}

std::string chain_complex::dump() const {
    std::ostringstream out;
    for (int n = 0; n <= top_degree(); ++n) {
        out << "degree " << n << " (dim " << dim(n) << ")\n";
        for (int i = 0; i < dim(n); ++i) {
            out << "  " << label(n, i) << ":";
            for (const auto& [row, v] : boundary(n).columns[i])
                out << " " << v.get_str() << "*" << label(n - 1, row);
            out << "\n";
        }
    }
    return out.str();
}

bool same_complex(const chain_complex& a, const chain_complex& b) {
    if (a.top_degree() != b.top_degree())
        return false;
    for (int n = 0; n <= a.top_degree(); ++n) {
        if (a.dim(n) != b.dim(n))
            return false;
        if (n >= 1 && !(a.boundary(n) == b.boundary(n)))
            return false;
    }
    return true;
}

chain_complex direct_sum(const std::vector<const chain_complex*>& parts) {
    int top = -1;
    bool labelled = !parts.empty();
    for (const auto* p : parts) {
        top = std::max(top, p->top_degree());
        labelled = labelled && p->has_labels();
    }
    std::vector<int> dims(top + 1, 0);
    for (int n = 0; n <= top; ++n)
        for (const auto* p : parts)
            dims[n] += p->dim(n);
    std::vector<sparse_matrix> d;
    for (int n = 1; n <= top; ++n) {
        sparse_matrix m = sparse_matrix::zero(dims[n - 1], dims[n]);
        int row_off = 0, col_off = 0;
        for (const auto* p : parts) {
            const sparse_matrix& block = p->boundary(n);
            for (int j = 0; j < block.cols; ++j)
                for (const auto& [row, v] : block.columns[j])
                    m.columns[col_off + j].emplace_back(row_off + row, v);
            row_off += p->dim(n - 1);
            col_off += p->dim(n);
        }
        d.push_back(std::move(m));
    }
    std::vector<std::vector<std::string>> labels;
    if (labelled) {
        labels.resize(top + 1);
        for (int n = 0; n <= top; ++n)
            for (const auto* p : parts)
                for (int i = 0; i < p->dim(n); ++i)
                    labels[n].push_back(p->label(n, i));
    }
    return chain_complex(std::move(dims), std::move(d), std::move(labels));
}

namespace {

// verifies that masked generators have boundaries supported on masked rows
void check_closed(const chain_complex& full, const std::vector<std::vector<char>>& mask) {
    if (static_cast<int>(mask.size()) != full.top_degree() + 1)
        throw error("selection mask does not cover every degree");
    for (int n = 0; n <= full.top_degree(); ++n)
        if (static_cast<int>(mask[n].size()) != full.dim(n))
            throw error("selection mask has wrong size in degree " + std::to_string(n));
    for (int n = 1; n <= full.top_degree(); ++n)
        for (int j = 0; j < full.dim(n); ++j) {
            if (!mask[n][j])
                continue;
            for (const auto& [row, v] : full.boundary(n).columns[j])
                if (!mask[n - 1][row])
                    throw error("selection is not closed under the boundary: degree " +
                                std::to_string(n) + " generator " + full.label(n, j) +
                                " hits " + full.label(n - 1, row));
        }
}

basis_selection restrict_to(const chain_complex& full,
                            const std::vector<std::vector<char>>& keep_mask) {
    const int top = full.top_degree();
    std::vector<std::vector<int>> kept(top + 1);
    std::vector<std::vector<int>> renumber(top + 1);
    for (int n = 0; n <= top; ++n) {
        renumber[n].assign(full.dim(n), -1);
        for (int i = 0; i < full.dim(n); ++i)
            if (keep_mask[n][i]) {
                renumber[n][i] = static_cast<int>(kept[n].size());
                kept[n].push_back(i);
            }
    }
    std::vector<int> dims(top + 1);
    for (int n = 0; n <= top; ++n)
        dims[n] = static_cast<int>(kept[n].size());
    std::vector<sparse_matrix> d;
    for (int n = 1; n <= top; ++n) {
        sparse_matrix m = sparse_matrix::zero(dims[n - 1], dims[n]);
        for (int j = 0; j < dims[n]; ++j)
            for (const auto& [row, v] : full.boundary(n).columns[kept[n][j]])
                if (renumber[n - 1][row] >= 0)
                    m.columns[j].emplace_back(renumber[n - 1][row], v);
        d.push_back(std::move(m));
    }
    std::vector<std::vector<std::string>> labels;
    if (full.has_labels()) {
        labels.resize(top + 1);
        for (int n = 0; n <= top; ++n)
            for (int old : kept[n])
                labels[n].push_back(full.label(n, old));
    }
    return basis_selection{chain_complex(std::move(dims), std::move(d), std::move(labels)),
                           std::move(kept)};
}

}  // namespace

basis_selection subcomplex_of(const chain_complex& full,
                              const std::vector<std::vector<char>>& mask) {
    check_closed(full, mask);
    return restrict_to(full, mask);
}

basis_selection quotient_by(const chain_complex& full,
                            const std::vector<std::vector<char>>& sub_mask) {
    check_closed(full, sub_mask);
    std::vector<std::vector<char>> complement(sub_mask.size());
    for (size_t n = 0; n < sub_mask.size(); ++n) {
        complement[n].resize(sub_mask[n].size());
        for (size_t i = 0; i < sub_mask[n].size(); ++i)
            complement[n][i] = !sub_mask[n][i];
    }
    // dropping the sub rows from the surviving columns is exactly the induced
    // quotient boundary, and closure of the sub makes it a complex
    return restrict_to(full, complement);
}

int tensor_complex::find(int degree, const tensor_cell& cell) const {
    if (degree < 0 || degree >= static_cast<int>(index.size()))
        return -1;
    auto it = index[degree].find(cell);
    return it == index[degree].end() ? -1 : it->second;
}

tensor_complex tensor_and_sum(
    const std::vector<std::pair<const chain_complex*, const chain_complex*>>& parts) {
    int top = -1;
    for (const auto& [left, right] : parts)
        if (left->top_degree() >= 0 && right->top_degree() >= 0)
            top = std::max(top, left->top_degree() + right->top_degree());

    tensor_complex out;
    out.cells.resize(top + 1);
    out.index.resize(top + 1);
    bool labelled = top >= 0;
    for (const auto& [left, right] : parts)
        labelled = labelled && left->has_labels() && right->has_labels();

    for (int n = 0; n <= top; ++n)
        for (int s = 0; s < static_cast<int>(parts.size()); ++s) {
            const auto& [left, right] = parts[s];
            for (int m = 0; m <= n; ++m)
                for (int i = 0; i < left->dim(m); ++i)
                    for (int j = 0; j < right->dim(n - m); ++j) {
                        tensor_cell cell{s, m, i, j};
                        out.index[n].emplace(cell, static_cast<int>(out.cells[n].size()));
                        out.cells[n].push_back(cell);
                    }
        }

    std::vector<int> dims(top + 1);
    for (int n = 0; n <= top; ++n)
        dims[n] = static_cast<int>(out.cells[n].size());

    std::vector<sparse_matrix> d;
    for (int n = 1; n <= top; ++n) {
        sparse_matrix m = sparse_matrix::zero(dims[n - 1], dims[n]);
        for (int j = 0; j < dims[n]; ++j) {
            const tensor_cell& cell = out.cells[n][j];
            const auto& [left, right] = parts[cell.summand];
            std::map<int, bigint> acc;
            for (const auto& [row, v] : left->boundary(cell.left_degree).columns[cell.left_index])
                acc[out.index[n - 1].at(tensor_cell{cell.summand, cell.left_degree - 1, row,
                                                    cell.right_index})] += v;
            const int sign = cell.left_degree % 2 == 0 ? 1 : -1;
            for (const auto& [row, v] :
                 right->boundary(n - cell.left_degree).columns[cell.right_index])
                acc[out.index[n - 1].at(tensor_cell{cell.summand, cell.left_degree,
                                                    cell.left_index, row})] += sign * v;
            for (auto& [row, v] : acc)
                if (v != 0)
                    m.columns[j].emplace_back(row, std::move(v));
        }
        d.push_back(std::move(m));
    }

    std::vector<std::vector<std::string>> labels;
    if (labelled) {
        labels.resize(top + 1);
        for (int n = 0; n <= top; ++n)
            for (const tensor_cell& cell : out.cells[n]) {
                const auto& [left, right] = parts[cell.summand];
                labels[n].push_back("s" + std::to_string(cell.summand) + ":" +
                                    left->label(cell.left_degree, cell.left_index) + "(x)" +
                                    right->label(n - cell.left_degree, cell.right_index));
            }
    }
    out.cx = chain_complex(std::move(dims), std::move(d), std::move(labels));
    return out;
}

namespace {

const sparse_matrix& map_part(const std::vector<sparse_matrix>& f, int n,
                              const chain_complex& c, const chain_complex& d,
                              sparse_matrix& scratch) {
    if (n >= 0 && n < static_cast<int>(f.size())) {
        const sparse_matrix& m = f[n];
        if (m.rows != d.dim(n) || m.cols != c.dim(n))
            throw error("chain map part in degree " + std::to_string(n) + " has shape " +
                        std::to_string(m.rows) + "x" + std::to_string(m.cols) +
                        ", expected " + std::to_string(d.dim(n)) + "x" +
                        std::to_string(c.dim(n)));
        return m;
    }
    scratch = sparse_matrix::zero(d.dim(n), c.dim(n));
    return scratch;
}

}  // namespace

std::optional<chain_map_defect> verify_chain_map(const std::vector<sparse_matrix>& f,
                                                 const chain_complex& c,
                                                 const chain_complex& d) {
    sparse_matrix scratch_hi, scratch_lo;
    for (int n = 1; n <= c.top_degree(); ++n) {
        const sparse_matrix& fn = map_part(f, n, c, d, scratch_hi);
        const sparse_matrix& fn1 = map_part(f, n - 1, c, d, scratch_lo);
        sparse_matrix lhs = multiply(d.boundary(n), fn);
        sparse_matrix rhs = multiply(fn1, c.boundary(n));
        if (lhs == rhs)
            continue;
        for (int j = 0; j < lhs.cols; ++j)
            if (!(lhs.columns[j] == rhs.columns[j]))
                return chain_map_defect{n, j};
    }
    return std::nullopt;
}

chain_complex mapping_cone(const std::vector<sparse_matrix>& f, const chain_complex& c,
                           const chain_complex& d) {
    const int top = std::max(c.top_degree() + 1, d.top_degree());
    std::vector<int> dims(top + 1, 0);
    for (int n = 0; n <= top; ++n)
        dims[n] = c.dim(n - 1) + d.dim(n);
    sparse_matrix scratch;
    std::vector<sparse_matrix> bd;
    for (int n = 1; n <= top; ++n) {
        sparse_matrix m = sparse_matrix::zero(dims[n - 1], dims[n]);
        const int row_split = c.dim(n - 2);
        const sparse_matrix& fpart = map_part(f, n - 1, c, d, scratch);
        for (int j = 0; j < c.dim(n - 1); ++j) {
            std::map<int, bigint> acc;
            for (const auto& [row, v] : c.boundary(n - 1).columns[j])
                acc[row] -= v;
            for (const auto& [row, v] : fpart.columns[j])
                acc[row_split + row] -= v;
            for (auto& [row, v] : acc)
                if (v != 0)
                    m.columns[j].emplace_back(row, std::move(v));
        }
        for (int j = 0; j < d.dim(n); ++j)
            for (const auto& [row, v] : d.boundary(n).columns[j])
                m.columns[c.dim(n - 1) + j].emplace_back(row_split + row, v);
        bd.push_back(std::move(m));
    }
    return chain_complex(std::move(dims), std::move(bd));
}

}  // namespace maghom
