#include "doctest.h"

#include "maghom/metric_space.hpp"

#include "../support/oracles.hpp"

using namespace maghom;

TEST_SUITE("metspace") {

TEST_CASE("rational parsing accepts integers and fractions in lowest terms") {
    CHECK(*parse_rational("3") == rational(3));
    CHECK(*parse_rational("-7") == rational(-7));
    CHECK(*parse_rational("2/4") == rational(1, 2));
    CHECK(*parse_rational("-3/6") == rational(-1, 2));
    CHECK(*parse_rational("0/5") == 0);
    CHECK(format_rational(*parse_rational("10/4")) == "5/2");
    CHECK(format_rational(rational(-1, 3)) == "-1/3");
    CHECK(format_rational(rational(4)) == "4");
}

TEST_CASE("rational parsing rejects malformed text") {
    for (const char* bad : {"", "a", "1.5", "1/0", "--2", "1/", "/2", "1/-2", "2 "})
        CHECK_FALSE(parse_rational(bad).has_value());
}

TEST_CASE("graph metrics agree with triple-loop shortest paths") {
    std::vector<std::pair<int, int>> edges{{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}};
    metric_space s = from_graph(4, edges);
    auto d = oracle::floyd_warshall(4, edges);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(s.dist(i, j) == d[i][j]);
    CHECK_FALSE(validate_metric(s).has_value());
}

TEST_CASE("builders give the expected distances") {
    metric_space i3 = path_graph(3);
    CHECK(i3.dist(0, 2) == 2);
    CHECK(i3.label(2) == "3");
    metric_space k4 = complete_graph(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(k4.dist(i, j) == (i == j ? 0 : 1));
    metric_space c6 = cycle_graph(6);
    CHECK(c6.dist(0, 3) == 3);
    CHECK(c6.dist(0, 4) == 2);
    for (const metric_space* s : {&i3, &k4, &c6}) CHECK_FALSE(validate_metric(*s).has_value());
}

TEST_CASE("from_graph rejects bad graphs with named points") {
    CHECK_THROWS_WITH_AS(from_graph(3, {{1, 1}}), doctest::Contains("self-loop"), error);
    CHECK_THROWS_WITH_AS(from_graph(3, {{1, 4}}), doctest::Contains("outside"), error);
    CHECK_THROWS_WITH_AS(from_graph(4, {{1, 2}, {3, 4}}),
                         doctest::Contains("disconnected"), error);
    try {
        from_graph(4, {{1, 2}, {3, 4}});
    } catch (const error& e) {
        // the unreachable pair should be spelled out
        CHECK(std::string(e.what()).find("1") != std::string::npos);
        CHECK(std::string(e.what()).find("3") != std::string::npos);
    }
}

TEST_CASE("validate_metric pinpoints each axiom") {
    auto space = [](std::vector<std::vector<rational>> d) {
        std::vector<std::string> labels;
        for (size_t i = 0; i < d.size(); ++i) labels.push_back(std::string(1, char('p' + i)));
        return metric_space(labels, std::move(d));
    };

    auto sym = validate_metric(space({{0, 1}, {2, 0}}));
    REQUIRE(sym.has_value());
    CHECK(sym->kind == metric_violation::symmetry);

    auto ident = validate_metric(space({{0, 1}, {1, 1}}));
    REQUIRE(ident.has_value());
    CHECK(ident->kind == metric_violation::identity);

    auto pos = validate_metric(space({{0, 0}, {0, 0}}));
    REQUIRE(pos.has_value());
    CHECK(pos->kind == metric_violation::positivity);

    auto tri = validate_metric(space({{0, 1, 3}, {1, 0, 1}, {3, 1, 0}}));
    REQUIRE(tri.has_value());
    CHECK(tri->kind == metric_violation::triangle);
    CHECK(tri->message.find("p") != std::string::npos);
}

TEST_CASE("betweenness is exact on fractional distances") {
    metric_space s({"x", "y", "z"},
                   {{0, rational(1, 3), 1}, {rational(1, 3), 0, rational(2, 3)}, {1, rational(2, 3), 0}});
    CHECK_FALSE(validate_metric(s).has_value());
    CHECK(is_between(s, 0, 1, 2));   // 1/3 + 2/3 == 1
    CHECK_FALSE(is_between(s, 1, 0, 2));
    CHECK(s.min_positive_distance() == rational(1, 3));
}

TEST_CASE("labels resolve back to indices") {
    metric_space s = from_graph(3, {{1, 2}, {2, 3}});
    CHECK(*s.index_of("2") == 1);
    CHECK_FALSE(s.index_of("7").has_value());
    CHECK(s.labels() == std::vector<std::string>{"1", "2", "3"});
    CHECK_THROWS_AS(metric_space({"a", "a"}, {{0, 1}, {1, 0}}), error);
    CHECK_THROWS_AS(metric_space({"a", "b"}, {{0, 1}}), error);
}

}  // TEST_SUITE
