#include "maghom/classify.hpp"

namespace maghom {

char classify_step(const fibration& fib, int x, int y) {
    if (x == y)
        throw error("step from '" + fib.total().label(x) + "' to itself has no type");
    const rational& de = fib.total().dist(x, y);
    const rational& db = fib.base().dist(fib.project(x), fib.project(y));
    if (db == 0)
        return 'v';
    if (de == db)
        return 'h';
    // db < de holds because the projection is distance-nonincreasing
    return 't';
}

std::string t_word(const fibration& fib, const std::vector<int>& tuple) {
    std::string word;
    word.reserve(tuple.size() > 0 ? tuple.size() - 1 : 0);
    for (size_t i = 0; i + 1 < tuple.size(); ++i)
        word.push_back(classify_step(fib, tuple[i], tuple[i + 1]));
    return word;
}

d_kind d_membership(const std::string& word) {
    size_t i = 0;
    while (i < word.size() && word[i] == 'v')
        ++i;
    size_t h_run = 0;
    while (i < word.size() && word[i] == 'h') {
        ++i;
        ++h_run;
    }
    if (i == word.size())
        return d_kind::outside;  // pure v^m h^k
    if (word[i] == 't')
        return d_kind::tilted_first;
    // word[i] == 'v' after at least one h
    return h_run >= 1 ? d_kind::hv_first : d_kind::outside;
}

std::vector<int> fill_hv(const fibration& fib, const std::vector<int>& tuple) {
    const std::string word = t_word(fib, tuple);
    if (d_membership(word) != d_kind::tilted_first)
        throw error("fill_hv needs a tuple whose first non-vertical, non-horizontal step is tilted");
    size_t gap = word.find('t');  // index of the first tilted step
    int inserted = fib.lift(tuple[gap], fib.project(tuple[gap + 1]));
    std::vector<int> filled;
    filled.reserve(tuple.size() + 1);
    filled.insert(filled.end(), tuple.begin(), tuple.begin() + gap + 1);
    filled.push_back(inserted);
    filled.insert(filled.end(), tuple.begin() + gap + 1, tuple.end());
#ifndef NDEBUG
    {
        rational before = 0, after = 0;
        for (size_t i = 0; i + 1 < tuple.size(); ++i)
            before += fib.total().dist(tuple[i], tuple[i + 1]);
        for (size_t i = 0; i + 1 < filled.size(); ++i)
            after += fib.total().dist(filled[i], filled[i + 1]);
        if (before != after)
            throw error("fill_hv changed the total length");
        if (d_membership(t_word(fib, filled)) != d_kind::hv_first)
            throw error("fill_hv produced a tuple outside the hv pattern");
    }
#endif
    return filled;
}

int weight(const fibration& fib, const std::vector<int>& tuple) {
    int total = 0;
    for (size_t i = 0; i + 1 < tuple.size(); ++i)
        if (classify_step(fib, tuple[i], tuple[i + 1]) == 'v')
            total += static_cast<int>(i);
    return total;
}

}  // namespace maghom
