#include "doctest.h"

#include <random>

#include "maghom/fixtures.hpp"
#include "maghom/homology.hpp"
#include "maghom/morse.hpp"

#include "../support/random_complex.hpp"

using namespace maghom;

namespace {

sparse_matrix from_dense(const std::vector<std::vector<int>>& a) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    sparse_matrix m = sparse_matrix::zero(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (a[r][c]) m.set(r, c, a[r][c]);
    return m;
}

}  // namespace

TEST_SUITE("morse") {

TEST_CASE("each defect of a matching is named") {
    chain_complex cx({2, 2}, {from_dense({{1, 1}, {1, 1}})});

    auto out_of_range = validate_matching(cx, {{{1, 5, 0}}});
    REQUIRE(out_of_range.has_value());
    CHECK(out_of_range->kind == matching_failure::bad_edge);

    auto reused = validate_matching(cx, {{{1, 0, 0}, {1, 1, 0}}});
    REQUIRE(reused.has_value());
    CHECK(reused->kind == matching_failure::shared_cell);

    chain_complex doubled({1, 1}, {from_dense({{2}})});
    auto non_unit = validate_matching(doubled, {{{1, 0, 0}}});
    REQUIRE(non_unit.has_value());
    CHECK(non_unit->kind == matching_failure::non_unit);
    CHECK(non_unit->message.find("incidence 2") != std::string::npos);

    // two pairs whose off-diagonal incidences chase each other forever
    auto loop = validate_matching(cx, {{{1, 0, 0}, {1, 1, 1}}});
    REQUIRE(loop.has_value());
    CHECK(loop->kind == matching_failure::cycle);
    CHECK(loop->involved.size() == 2);

    CHECK_FALSE(validate_matching(cx, {{{1, 0, 0}}}).has_value());
    CHECK_FALSE(validate_matching(cx, {}).has_value());
}

TEST_CASE("an empty matching returns the complex unchanged") {
    std::mt19937 rng(7);
    testgen::known_complex k = testgen::random_complex(rng);
    morse_reduction r = morse_reduce(k.cx, {});
    CHECK(same_complex(r.cx, k.cx));
    for (int n = 0; n <= k.cx.top_degree(); ++n)
        CHECK(static_cast<int>(r.critical[n].size()) == k.cx.dim(n));
}

TEST_CASE("cancelling one pair of an interval leaves a point") {
    chain_complex interval({2, 1}, {from_dense({{-1}, {1}})});
    morse_reduction r = morse_reduce(interval, {{{1, 0, 1}}});
    CHECK(r.cx.dim(0) == 1);
    CHECK(r.cx.top_degree() >= 0);
    CHECK(r.critical[0] == std::vector<int>{0});
    CHECK(r.critical[1].empty());
    CHECK(all_zero(homology(r.cx)) == false);  // still a point, H0 = Z
    CHECK(homology_at(r.cx, 0) == homology_group{1, {}});
}

TEST_CASE("random matchings never change the homology") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 20; ++trial) {
        testgen::known_complex k = testgen::random_complex(rng);
        morse_matching m = testgen::random_matching(k.cx, rng);
        morse_reduction r = morse_reduce(k.cx, m);
        CHECK(same_homology(homology(r.cx), k.expected));
        // matched cells disappeared, critical cells account for the rest
        int matched = static_cast<int>(m.edges.size());
        int before = 0, after = 0;
        for (int n = 0; n <= k.cx.top_degree(); ++n) before += k.cx.dim(n);
        for (int n = 0; n <= r.cx.top_degree(); ++n) after += r.cx.dim(n);
        CHECK(before - after == 2 * matched);
    }
}

TEST_CASE("reduction is deterministic") {
    std::mt19937 rng(5);
    testgen::known_complex k = testgen::random_complex(rng);
    morse_matching m = testgen::random_matching(k.cx, rng);
    morse_reduction a = morse_reduce(k.cx, m);
    morse_reduction b = morse_reduce(k.cx, m);
    CHECK(same_complex(a.cx, b.cx));
    CHECK(a.critical == b.critical);
}

TEST_CASE("reduce refuses an invalid matching") {
    chain_complex doubled({1, 1}, {from_dense({{2}})});
    CHECK_THROWS_AS(morse_reduce(doubled, {{{1, 0, 0}}}), error);
}

TEST_CASE("pairing by filling clears the distinguished complex") {
    for (const std::string& name : fixtures::names()) {
        const fibration& f = fixtures::get(name);
        for (int l = 1; l <= 3; ++l) {
            magnitude_complex sub = build_d_complex(f, l);
            morse_matching m = hv_matching(f, sub);
            CHECK_FALSE(validate_matching(sub.cx, m).has_value());
            int cells = 0;
            for (int n = 0; n <= sub.cx.top_degree(); ++n) cells += sub.cx.dim(n);
            // perfect: every cell sits in exactly one pair
            CHECK(static_cast<int>(m.edges.size()) * 2 == cells);
            morse_reduction r = morse_reduce(sub.cx, m);
            for (int n = 0; n <= r.cx.top_degree(); ++n) CHECK(r.cx.dim(n) == 0);
        }
    }
}

TEST_CASE("filling needs the full degree range") {
    const fibration& f = fixtures::get("paper-E2");
    magnitude_complex cut = build_d_complex(f, 2, 1);
    CHECK_THROWS_AS(hv_matching(f, cut), error);
    // and the full complex is not the distinguished one
    magnitude_complex full = build_complex(f.total(), 2);
    CHECK_THROWS_AS(hv_matching(f, full), error);
}

}  // TEST_SUITE
