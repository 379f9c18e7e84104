#pragma once

#include <atomic>
#include <future>
#include <vector>

namespace maghom {

// applies fn to 0..count-1 on up to `jobs` threads; results keep index order,
// so output is identical no matter how work gets scheduled
template <typename F>
auto parallel_map(int count, int jobs, F&& fn) {
    using R = decltype(fn(0));
    std::vector<R> out(count);
    if (jobs <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<int> cursor{0};
    int workers = std::min(jobs, count);
    std::vector<std::future<void>> running;
    running.reserve(workers);
    for (int w = 0; w < workers; ++w)
        running.push_back(std::async(std::launch::async, [&] {
            for (int i = cursor.fetch_add(1); i < count; i = cursor.fetch_add(1))
                out[i] = fn(i);
        }));
    for (auto& f : running) f.get();
    return out;
}

}  // namespace maghom
