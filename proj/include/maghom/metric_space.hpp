#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maghom/rational.hpp"

namespace maghom {

// First violated metric axiom, with the witnessing point indices.
struct metric_violation {
    enum kind_t { symmetry, identity, positivity, triangle } kind;
    std::vector<int> points;
    std::string message;
};

// A finite metric space with exact rational distances. Immutable after
// construction; all operations are pure.
class metric_space {
public:
    // Structural checks only (square table, distinct labels); metric axioms
    // are checked separately by validate_metric.
    metric_space(std::vector<std::string> labels,
                 std::vector<std::vector<rational>> dist);

    int size() const { return static_cast<int>(labels_.size()); }
    const rational& dist(int i, int j) const { return dist_[i * size() + j]; }
    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<int> index_of(const std::string& label) const;

    // 0 on a one-point space.
    rational min_positive_distance() const;

private:
    std::vector<std::string> labels_;
    std::vector<rational> dist_;
    std::map<std::string, int> index_;
};

// Unweighted shortest-path metric of a connected simple graph. Vertices are
// 1-based and labelled by their decimal names. Throws on self-loops, edges
// out of range, or a disconnected graph (naming an unreachable pair).
metric_space from_graph(int vertex_count,
                        const std::vector<std::pair<int, int>>& edges);

std::optional<metric_violation> validate_metric(const metric_space& space);

// x ≺ y ≺ z: dist(x,z) = dist(x,y) + dist(y,z), exactly.
bool is_between(const metric_space& space, int x, int y, int z);

// Small graph builders shared by fixtures and tests.
metric_space path_graph(int n);      // I_n
metric_space complete_graph(int n);  // K_n
metric_space cycle_graph(int n);     // C_n, n >= 3

}  // namespace maghom
