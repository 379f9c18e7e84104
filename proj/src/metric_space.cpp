#include "maghom/metric_space.hpp"

#include <deque>
#include <sstream>

namespace maghom {

metric_space::metric_space(std::vector<std::string> labels,
                           std::vector<std::vector<rational>> dist)
    : labels_(std::move(labels)) {
    const int n = static_cast<int>(labels_.size());
    if (n == 0)
        throw error("metric space needs at least one point");
    if (static_cast<int>(dist.size()) != n)
        throw error("distance table has wrong number of rows");
    dist_.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(dist[i].size()) != n)
            throw error("distance table row " + std::to_string(i) + " has wrong length");
        for (int j = 0; j < n; ++j)
            dist_.push_back(dist[i][j]);
    }
    for (int i = 0; i < n; ++i) {
        auto [it, fresh] = index_.emplace(labels_[i], i);
        if (!fresh)
            throw error("duplicate point label '" + labels_[i] + "'");
    }
}

std::optional<int> metric_space::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

rational metric_space::min_positive_distance() const {
    rational best = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j) {
            const rational& d = dist(i, j);
            if (d > 0 && (best == 0 || d < best))
                best = d;
        }
    return best;
}

metric_space from_graph(int vertex_count,
                        const std::vector<std::pair<int, int>>& edges) {
    if (vertex_count < 1)
        throw error("graph needs at least one vertex");
    std::vector<std::vector<int>> adj(vertex_count);
    for (auto [u, v] : edges) {
        if (u < 1 || u > vertex_count || v < 1 || v > vertex_count)
            throw error("edge {" + std::to_string(u) + "," + std::to_string(v) +
                        "} references a vertex outside 1.." + std::to_string(vertex_count));
        if (u == v)
            throw error("self-loop at vertex " + std::to_string(u));
        adj[u - 1].push_back(v - 1);
        adj[v - 1].push_back(u - 1);
    }

    std::vector<std::vector<rational>> dist(
        vertex_count, std::vector<rational>(vertex_count, 0));
    std::vector<int> hops(vertex_count);
    for (int s = 0; s < vertex_count; ++s) {
        std::fill(hops.begin(), hops.end(), -1);
        hops[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : adj[u])
                if (hops[v] < 0) {
                    hops[v] = hops[u] + 1;
                    queue.push_back(v);
                }
        }
        for (int t = 0; t < vertex_count; ++t) {
            if (hops[t] < 0)
                throw error("graph is disconnected: no path between vertices " +
                            std::to_string(s + 1) + " and " + std::to_string(t + 1));
            dist[s][t] = hops[t];
        }
    }

    std::vector<std::string> labels;
    labels.reserve(vertex_count);
    for (int i = 1; i <= vertex_count; ++i)
        labels.push_back(std::to_string(i));
    return metric_space(std::move(labels), std::move(dist));
}

std::optional<metric_violation> validate_metric(const metric_space& space) {
    const int n = space.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (space.dist(i, j) != space.dist(j, i))
                return metric_violation{
                    metric_violation::symmetry,
                    {i, j},
                    "symmetry violated at (" + space.label(i) + "," + space.label(j) +
                        "): " + format_rational(space.dist(i, j)) + " vs " +
                        format_rational(space.dist(j, i))};
    for (int i = 0; i < n; ++i)
        if (space.dist(i, i) != 0)
            return metric_violation{metric_violation::identity,
                                    {i},
                                    "dist(" + space.label(i) + "," + space.label(i) +
                                        ") = " + format_rational(space.dist(i, i)) +
                                        ", expected 0"};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && !(space.dist(i, j) > 0))
                return metric_violation{metric_violation::positivity,
                                        {i, j},
                                        "dist(" + space.label(i) + "," + space.label(j) +
                                            ") = " + format_rational(space.dist(i, j)) +
                                            " is not positive"};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (space.dist(i, k) > space.dist(i, j) + space.dist(j, k))
                    return metric_violation{
                        metric_violation::triangle,
                        {i, j, k},
                        "triangle inequality violated at (" + space.label(i) + "," +
                            space.label(j) + "," + space.label(k) + ")"};
    return std::nullopt;
}

bool is_between(const metric_space& space, int x, int y, int z) {
    return space.dist(x, z) == space.dist(x, y) + space.dist(y, z);
}

metric_space path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i)
        edges.emplace_back(i, i + 1);
    return from_graph(n, edges);
}

metric_space complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            edges.emplace_back(i, j);
    return from_graph(n, edges);
}

metric_space cycle_graph(int n) {
    if (n < 3)
        throw error("cycle graph needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i)
        edges.emplace_back(i, i + 1);
    edges.emplace_back(n, 1);
    return from_graph(n, edges);
}

}  // namespace maghom
