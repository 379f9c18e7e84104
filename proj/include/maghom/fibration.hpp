#pragma once

#include <string>
#include <variant>
#include <vector>

#include "maghom/metric_space.hpp"

namespace maghom {

// why a claimed fibration was rejected
struct fibration_failure {
    enum kind_t { not_surjective, not_short, missing_lift, ambiguous_lift } kind;
    std::vector<int> witnesses;  // indices involved (total-space unless noted in message)
    std::string message;
};

// verified fibration: the projection never increases distances and every
// (point, base point) pair has exactly one compatible lift x^b
class fibration {
public:
    const metric_space& total() const { return total_; }
    const metric_space& base() const { return base_; }

    int project(int x) const { return proj_[x]; }
    // x^b: the point of the fiber over b closest to x, splitting all distances into that fiber
    int lift(int x, int b) const { return lifts_[x * base_.size() + b]; }
    const std::vector<int>& fiber(int b) const { return fibers_[b]; }

private:
    fibration(metric_space total, metric_space base, std::vector<int> proj,
              std::vector<int> lifts, std::vector<std::vector<int>> fibers)
        : total_(std::move(total)),
          base_(std::move(base)),
          proj_(std::move(proj)),
          lifts_(std::move(lifts)),
          fibers_(std::move(fibers)) {}

    friend std::variant<fibration, fibration_failure> verify_fibration(
        metric_space total, metric_space base, std::vector<int> proj);

    metric_space total_;
    metric_space base_;
    std::vector<int> proj_;
    std::vector<int> lifts_;  // flattened |E| x |B|
    std::vector<std::vector<int>> fibers_;
};

std::variant<fibration, fibration_failure> verify_fibration(metric_space total,
                                                            metric_space base,
                                                            std::vector<int> proj);

// throwing wrapper for inputs that are expected to verify
fibration require_fibration(metric_space total, metric_space base, std::vector<int> proj);

// a fiber viewed as a metric space of its own, with the embedding recorded
struct fiber_space {
    metric_space space;
    int base_point;
    std::vector<int> total_points;  // fiber index -> total-space index
};

fiber_space take_fiber(const fibration& fib, int b);

// F x B with the sum metric, projected onto the second coordinate;
// points are ordered fiber-major and labelled "(f,b)"
fibration trivial_product(const metric_space& fiber, const metric_space& base);

}  // namespace maghom
