#include "maghom/fibration.hpp"

namespace maghom {

std::variant<fibration, fibration_failure> verify_fibration(metric_space total,
                                                            metric_space base,
                                                            std::vector<int> proj) {
    const int ne = total.size();
    const int nb = base.size();
    if (static_cast<int>(proj.size()) != ne)
        throw error("projection must assign a base point to every point");
    for (int x = 0; x < ne; ++x)
        if (proj[x] < 0 || proj[x] >= nb)
            throw error("projection of '" + total.label(x) + "' is out of range");

    std::vector<std::vector<int>> fibers(nb);
    for (int x = 0; x < ne; ++x)
        fibers[proj[x]].push_back(x);
    for (int b = 0; b < nb; ++b)
        if (fibers[b].empty())
            return fibration_failure{fibration_failure::not_surjective,
                                     {b},
                                     "no point projects to base point '" + base.label(b) + "'"};

    for (int x = 0; x < ne; ++x)
        for (int y = 0; y < ne; ++y)
            if (base.dist(proj[x], proj[y]) > total.dist(x, y))
                return fibration_failure{
                    fibration_failure::not_short,
                    {x, y},
                    "projection increases the distance between '" + total.label(x) +
                        "' and '" + total.label(y) + "'"};

    // x^b must satisfy d(x, x^b) = d(πx, b) and d(x, y) = d(x, x^b) + d(x^b, y)
    // for every y in the fiber over b
    std::vector<int> lifts(static_cast<size_t>(ne) * nb, -1);
    for (int x = 0; x < ne; ++x)
        for (int b = 0; b < nb; ++b) {
            int found = -1;
            for (int cand : fibers[b]) {
                if (total.dist(x, cand) != base.dist(proj[x], b))
                    continue;
                bool splits = true;
                for (int y : fibers[b])
                    if (total.dist(x, y) != total.dist(x, cand) + total.dist(cand, y)) {
                        splits = false;
                        break;
                    }
                if (!splits)
                    continue;
                if (found >= 0)
                    return fibration_failure{
                        fibration_failure::ambiguous_lift,
                        {x, b, found, cand},
                        "both '" + total.label(found) + "' and '" + total.label(cand) +
                            "' lift '" + total.label(x) + "' to base point '" +
                            base.label(b) + "'"};
                found = cand;
            }
            if (found < 0)
                return fibration_failure{fibration_failure::missing_lift,
                                         {x, b},
                                         "no lift of '" + total.label(x) +
                                             "' to base point '" + base.label(b) + "'"};
            lifts[x * nb + b] = found;
        }

    return fibration(std::move(total), std::move(base), std::move(proj),
                     std::move(lifts), std::move(fibers));
}

fibration require_fibration(metric_space total, metric_space base, std::vector<int> proj) {
    auto result = verify_fibration(std::move(total), std::move(base), std::move(proj));
    if (auto* fail = std::get_if<fibration_failure>(&result))
        throw error("not a metric fibration: " + fail->message);
    return std::get<fibration>(std::move(result));
}

fiber_space take_fiber(const fibration& fib, int b) {
    const auto& points = fib.fiber(b);
    const int k = static_cast<int>(points.size());
    std::vector<std::string> labels;
    labels.reserve(k);
    for (int p : points)
        labels.push_back(fib.total().label(p));
    std::vector<std::vector<rational>> dist(k, std::vector<rational>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            dist[i][j] = fib.total().dist(points[i], points[j]);
    return fiber_space{metric_space(std::move(labels), std::move(dist)), b, points};
}

fibration trivial_product(const metric_space& fiber, const metric_space& base) {
    const int nf = fiber.size();
    const int nb = base.size();
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(nf) * nb);
    std::vector<int> proj;
    proj.reserve(static_cast<size_t>(nf) * nb);
    for (int f = 0; f < nf; ++f)
        for (int b = 0; b < nb; ++b) {
            labels.push_back("(" + fiber.label(f) + "," + base.label(b) + ")");
            proj.push_back(b);
        }
    std::vector<std::vector<rational>> dist(labels.size(),
                                            std::vector<rational>(labels.size()));
    for (int f = 0; f < nf; ++f)
        for (int b = 0; b < nb; ++b)
            for (int g = 0; g < nf; ++g)
                for (int c = 0; c < nb; ++c)
                    dist[f * nb + b][g * nb + c] = fiber.dist(f, g) + base.dist(b, c);
    return require_fibration(metric_space(std::move(labels), std::move(dist)),
                             base, std::move(proj));
}

}  // namespace maghom
