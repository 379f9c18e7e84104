#include "doctest.h"

#include "maghom/fibration.hpp"
#include "maghom/fixtures.hpp"

using namespace maghom;

namespace {

metric_space two_points(const rational& d) {
    return metric_space({"A", "B"}, {{0, d}, {d, 0}});
}

}  // namespace

TEST_SUITE("fibration") {

TEST_CASE("both built-in data sets verify") {
    for (const std::string& name : fixtures::names()) {
        const fibration& f = fixtures::get(name);
        auto again = verify_fibration(f.total(), f.base(), [&] {
            std::vector<int> p;
            for (int i = 0; i < f.total().size(); ++i) p.push_back(f.project(i));
            return p;
        }());
        CHECK(std::holds_alternative<fibration>(again));
    }
    CHECK_THROWS_AS(fixtures::get("nope"), input_error);
}

TEST_CASE("fibers and lifts of the twisted triangle") {
    const fibration& f = fixtures::get("paper-E2");
    const metric_space& e = f.total();
    auto idx = [&](const char* l) { return *e.index_of(l); };
    auto bidx = [&](const char* l) { return *f.base().index_of(l); };

    CHECK(f.fiber(bidx("A")) == std::vector<int>{idx("a"), idx("d")});
    CHECK(f.fiber(bidx("C")) == std::vector<int>{idx("c"), idx("f")});

    // the two sheets over A are themselves adjacent, yet going around the
    // triangle a -> e -> f lands on d, not back on a
    CHECK(e.dist(idx("a"), idx("d")) == 1);
    CHECK(e.dist(idx("a"), idx("f")) == 2);
    CHECK(e.dist(idx("a"), idx("e")) == 1);
    CHECK(f.lift(idx("a"), bidx("B")) == idx("e"));
    CHECK(f.lift(idx("a"), bidx("C")) == idx("c"));
    CHECK(f.lift(idx("d"), bidx("B")) == idx("b"));
    CHECK(f.lift(idx("a"), bidx("A")) == idx("a"));
}

TEST_CASE("lifts of the ring stack") {
    const fibration& f = fixtures::get("paper-E1");
    const metric_space& e = f.total();
    // vertex 6 sits over base point 2; the lift of 1 into that fiber is 2
    CHECK(f.project(*e.index_of("6")) == 1);
    CHECK(f.lift(*e.index_of("1"), 1) == *e.index_of("2"));
    CHECK(e.dist(*e.index_of("1"), *e.index_of("6")) == 2);
}

TEST_CASE("transport between fibers is an isometry") {
    for (const std::string& name : fixtures::names()) {
        const fibration& f = fixtures::get(name);
        for (int b = 0; b < f.base().size(); ++b)
            for (int b2 = 0; b2 < f.base().size(); ++b2)
                for (int x : f.fiber(b))
                    for (int y : f.fiber(b)) {
                        CHECK(f.total().dist(f.lift(x, b2), f.lift(y, b2)) ==
                              f.total().dist(x, y));
                        // the lift splits every distance into the target fiber
                        CHECK(f.total().dist(x, f.lift(x, b2)) ==
                              f.base().dist(b, b2));
                    }
    }
}

TEST_CASE("each failure mode is reported as itself") {
    metric_space i2 = two_points(1);

    auto r1 = verify_fibration(i2, i2, {0, 0});
    REQUIRE(std::holds_alternative<fibration_failure>(r1));
    CHECK(std::get<fibration_failure>(r1).kind == fibration_failure::not_surjective);

    auto r2 = verify_fibration(i2, two_points(2), {0, 1});
    REQUIRE(std::holds_alternative<fibration_failure>(r2));
    CHECK(std::get<fibration_failure>(r2).kind == fibration_failure::not_short);

    auto r3 = verify_fibration(i2, two_points(rational(1, 2)), {0, 1});
    REQUIRE(std::holds_alternative<fibration_failure>(r3));
    CHECK(std::get<fibration_failure>(r3).kind == fibration_failure::missing_lift);

    // a degenerate distance slips past the structural checks and produces two
    // competing lifts
    metric_space squashed({"x", "y1", "y2"}, {{0, 1, 1}, {1, 0, 0}, {1, 0, 0}});
    auto r4 = verify_fibration(squashed, i2, {0, 1, 1});
    REQUIRE(std::holds_alternative<fibration_failure>(r4));
    CHECK(std::get<fibration_failure>(r4).kind == fibration_failure::ambiguous_lift);

    CHECK_THROWS_AS(require_fibration(i2, i2, {0, 0}), error);
    CHECK_THROWS_AS(verify_fibration(i2, i2, {0}), error);
    CHECK_THROWS_AS(verify_fibration(i2, i2, {0, 5}), error);
}

TEST_CASE("take_fiber restricts the metric") {
    const fibration& f = fixtures::get("paper-E2");
    fiber_space fs = take_fiber(f, 0);
    CHECK(fs.space.size() == 2);
    CHECK(fs.space.labels() == std::vector<std::string>{"a", "d"});
    CHECK(fs.space.dist(0, 1) == 1);
    CHECK(fs.base_point == 0);
    CHECK(fs.total_points.size() == 2);
}

TEST_CASE("the product fibration uses the sum metric") {
    metric_space fib = two_points(2);
    metric_space base = complete_graph(3);
    fibration p = trivial_product(fib, base);
    CHECK(p.total().size() == 6);
    CHECK(p.total().label(0) == "(A,1)");
    CHECK(p.total().label(5) == "(B,3)");
    // (A,1) -> (B,2): 2 across the fiber plus 1 across the base
    int x = *p.total().index_of("(A,1)");
    int y = *p.total().index_of("(B,2)");
    CHECK(p.total().dist(x, y) == 3);
    CHECK(p.project(y) == 1);
    for (int b = 0; b < 3; ++b) CHECK(static_cast<int>(p.fiber(b).size()) == 2);
}

}  // TEST_SUITE
