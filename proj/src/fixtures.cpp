#include "maghom/fixtures.hpp"

namespace maghom::fixtures {

namespace {

metric_space relabel(const metric_space& space, std::vector<std::string> labels) {
    std::vector<std::vector<rational>> dist(space.size());
    for (int i = 0; i < space.size(); ++i)
        for (int j = 0; j < space.size(); ++j)
            dist[i].push_back(space.dist(i, j));
    return {std::move(labels), std::move(dist)};
}

// three concentric 4-cycles joined rung by rung, projecting onto one cycle
fibration make_ring_stack() {
    std::vector<std::pair<int, int>> edges;
    for (int ring = 0; ring < 3; ++ring) {
        int base = 4 * ring;
        for (int k = 1; k <= 4; ++k)
            edges.emplace_back(base + k, base + (k % 4) + 1);
    }
    for (int k = 1; k <= 8; ++k) edges.emplace_back(k, k + 4);
    metric_space total = from_graph(12, edges);
    metric_space base = cycle_graph(4);
    std::vector<int> proj(12);
    for (int i = 0; i < 12; ++i) proj[i] = i % 4;
    return require_fibration(total, base, proj);
}

// twisted double cover of a triangle: each fiber is an adjacent pair of
// points, glued so that going around the triangle swaps them
fibration make_twisted_triangle() {
    metric_space total = relabel(
        from_graph(6, {{3, 2}, {3, 1}, {2, 4}, {1, 4}, {3, 6}, {2, 5}, {5, 1}, {6, 4}, {6, 5}}),
        {"a", "b", "c", "d", "e", "f"});
    metric_space base = relabel(complete_graph(3), {"A", "B", "C"});
    return require_fibration(total, base, {0, 1, 2, 0, 1, 2});
}

}  // namespace

const std::vector<std::string>& names() {
    static const std::vector<std::string> list{"paper-E1", "paper-E2"};
    return list;
}

const fibration& get(const std::string& name) {
    if (name == "paper-E1") {
        static const fibration f = make_ring_stack();
        return f;
    }
    if (name == "paper-E2") {
        static const fibration f = make_twisted_triangle();
        return f;
    }
    throw input_error("unknown fixture \"" + name + "\"; available: paper-E1, paper-E2");
}

}  // namespace maghom::fixtures
