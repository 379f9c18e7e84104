#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "maghom/cli.hpp"
#include "maghom/io.hpp"

using namespace maghom;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream f(path);
    f << content;
    return path.string();
}

struct cli_result {
    int code;
    std::string out, err;
};

cli_result run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

const char* combined_over_point =
    R"({"total":{"type":"graph","vertices":2,"edges":[[1,2]]},
        "base":{"type":"matrix","labels":["*"],"dist":[[0]]},
        "projection":{"1":"*","2":"*"}})";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("spaces load from graph and matrix descriptions") {
    metric_space g = space_from_json(
        R"({"type":"graph","vertices":3,"edges":[[1,2],[2,3]]})", "test");
    CHECK(g.size() == 3);
    CHECK(g.label(0) == "1");
    CHECK(g.dist(0, 2) == 2);

    metric_space m = space_from_json(
        R"({"type":"matrix","labels":["x","y"],"dist":[[0,"3/2"],["3/2",0]]})", "test");
    CHECK(m.dist(0, 1) == rational(3, 2));
}

TEST_CASE("every malformed input names its source") {
    auto fails = [](const char* text, const char* phrase) {
        try {
            space_from_json(text, "badfile");
            return false;
        } catch (const input_error& e) {
            return contains(e.what(), "badfile") && contains(e.what(), phrase);
        }
    };
    CHECK(fails("{nope", "not valid JSON"));
    CHECK(fails(R"({"vertices":2})", "missing \"type\""));
    CHECK(fails(R"({"type":"blob"})", "unknown space type"));
    CHECK(fails(R"({"type":"graph","vertices":0,"edges":[]})", "positive"));
    CHECK(fails(R"({"type":"graph","vertices":2,"edges":[[1]]})", "pair"));
    CHECK(fails(R"({"type":"graph","vertices":3,"edges":[[1,2]]})", "disconnected"));
    CHECK(fails(R"({"type":"matrix","labels":["a"],"dist":[[0.5]]})",
                "integers or \"p/q\" strings"));
    CHECK(fails(R"({"type":"matrix","labels":["a"],"dist":[["1.5"]]})", "bad rational"));
    CHECK(fails(R"({"type":"matrix","labels":[1],"dist":[[0]]})", "labels must be strings"));
}

TEST_CASE("combined fibration files carry all three parts") {
    fibration_input in = fibration_from_json(combined_over_point, "test");
    CHECK(in.total.size() == 2);
    CHECK(in.base.size() == 1);
    CHECK(in.proj == std::vector<int>{0, 0});

    auto proj_fails = [&](const char* text, const char* phrase) {
        try {
            projection_from_json(text, in.total, in.base, "test");
            return false;
        } catch (const input_error& e) {
            return contains(e.what(), phrase);
        }
    };
    CHECK(proj_fails(R"({"9":"*"})", "unknown point"));
    CHECK(proj_fails(R"({"1":"*"})", "misses point"));
    CHECK(proj_fails(R"({"1":7,"2":"*"})", "must be labels"));
    CHECK(proj_fails(R"({"1":"*","2":"moon"})", "unknown base point"));
}

TEST_CASE("missing files are reported cleanly") {
    CHECK_THROWS_AS(read_file("/no/such/file.json"), input_error);
    auto r = run_cli({"mh", "--space", "/no/such/file.json"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "error: cannot read"));
}

TEST_CASE("argument errors exit with code two") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"mh", "--bogus"}).code == 2);
    CHECK(run_cli({"mh", "--fixture", "paper-E2", "--format", "xml"}).code == 2);
    CHECK(run_cli({"mh", "--fixture", "paper-E2", "--jobs", "0"}).code == 2);

    auto bad_l = run_cli({"mh", "--fixture", "paper-E2", "--lmax", "x"});
    CHECK(bad_l.code == 2);
    CHECK(contains(bad_l.err, "bad --lmax"));

    auto no_space = run_cli({"mh"});
    CHECK(no_space.code == 2);
    CHECK(contains(no_space.err, "no space given"));

    auto unknown = run_cli({"mh", "--fixture", "nope"});
    CHECK(unknown.code == 2);
    CHECK(contains(unknown.err, "unknown fixture"));

    auto help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(contains(help.out, "mh"));
    CHECK(contains(help.out, "fibcheck"));
}

TEST_CASE("homology tables come out row per degree") {
    auto r = run_cli({"mh", "--fixture", "paper-E2", "--lmax", "1"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "l n betti torsion\n"));
    CHECK(contains(r.out, "0 0 6 -\n"));
    CHECK(contains(r.out, "1 1 18 -\n"));

    auto s = run_cli({"mh", "--fixture", "paper-E2", "--lmax", "1", "--format", "structured"});
    CHECK(s.code == 0);
    auto j = nlohmann::json::parse(s.out);
    CHECK(j["schema"] == "maghom/1");
    CHECK(j["command"] == "mh");
    CHECK(j["rows"][0]["l"] == "0");
    CHECK(j["rows"][0]["H"][0]["betti"] == 6);
    CHECK(j["rows"][0]["H"][0]["torsion"].empty());
    CHECK(j["rows"][1]["H"][1]["betti"] == 18);
}

TEST_CASE("fractional length bounds work from the command line") {
    std::string tri = write_temp("maghom_unit_tri.json",
                                 R"({"type":"matrix","labels":["x","y","z"],
          "dist":[[0,1,"3/2"],[1,0,"3/2"],["3/2","3/2",0]]})");
    auto r = run_cli({"mh", "--space", tri, "--lmax", "3/2"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "3/2 1 "));
}

TEST_CASE("the metric checker flags broken tables") {
    auto good = run_cli({"validate", "--fixture", "paper-E1"});
    CHECK(good.code == 0);
    CHECK(contains(good.out, "points: 12"));
    CHECK(contains(good.out, "metric: valid"));

    std::string bent = write_temp("maghom_unit_bent.json",
                                  R"({"type":"matrix","labels":["a","b","c"],
          "dist":[[0,5,1],[5,0,1],[1,1,0]]})");
    auto bad = run_cli({"validate", "--space", bent});
    CHECK(bad.code == 1);
    CHECK(contains(bad.out, "violation:"));

    auto bad_json = run_cli({"validate", "--space", bent, "--format", "structured"});
    CHECK(bad_json.code == 1);
    auto j = nlohmann::json::parse(bad_json.out);
    CHECK(j["valid"] == false);
    CHECK(j["violation"].is_string());
}

TEST_CASE("fibration checking end to end") {
    auto r = run_cli({"fibcheck", "--fixture", "paper-E2"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "fibration verified: 6 points over 3"));
    CHECK(contains(r.out, "fiber A: a d"));
    CHECK(contains(r.out, "transport between fibers: isometric"));

    std::string combined = write_temp("maghom_unit_point.json", combined_over_point);
    CHECK(run_cli({"fibcheck", "--total", combined}).code == 0);

    std::string total = write_temp("maghom_unit_total.json",
                                   R"({"type":"graph","vertices":2,"edges":[[1,2]]})");
    std::string base = write_temp("maghom_unit_base.json",
                                  R"({"type":"matrix","labels":["A","B"],"dist":[[0,2],[2,0]]})");
    std::string proj = write_temp("maghom_unit_proj.json", R"({"1":"A","2":"B"})");
    auto stretched =
        run_cli({"fibcheck", "--total", total, "--base", base, "--proj", proj});
    CHECK(stretched.code == 1);
    CHECK(contains(stretched.out, "not a fibration"));

    auto s = run_cli({"fibcheck", "--fixture", "paper-E2", "--format", "structured"});
    auto j = nlohmann::json::parse(s.out);
    CHECK(j["valid"] == true);
    CHECK(j["transport_isometric"] == true);
    CHECK(j["fibers"].size() == 3);
}

TEST_CASE("verification commands succeed on the built-in data") {
    auto k = run_cli({"kunneth", "--fixture", "paper-E2", "--lmax", "2"});
    CHECK(k.code == 0);
    CHECK(contains(k.out, "basepoint: A"));
    CHECK(contains(k.out, "decomposition verified"));

    auto k2 = run_cli({"kunneth", "--fixture", "paper-E2", "--lmax", "2", "--basepoint", "C"});
    CHECK(k2.code == 0);
    CHECK(contains(k2.out, "basepoint: C"));
    CHECK(run_cli({"kunneth", "--fixture", "paper-E2", "--basepoint", "nope"}).code == 2);

    auto m = run_cli({"morse", "--fixture", "paper-E2", "--lmax", "2"});
    CHECK(m.code == 0);
    CHECK(contains(m.out, "matched=12"));
    CHECK(contains(m.out, "reduction verified"));

    auto d = run_cli({"deltaiso", "--fixture", "paper-E2", "--lmax", "2"});
    CHECK(d.code == 0);
    CHECK(contains(d.out, "cell structures match"));

    auto c = run_cli({"cau", "--fixture", "paper-E2", "--lmax", "1"});
    CHECK(c.code == 0);
    CHECK(contains(c.out, "fitted shift: 0"));
}

TEST_CASE("output is reproducible and indifferent to worker count") {
    std::vector<std::vector<std::string>> cases = {
        {"mh", "--fixture", "paper-E2", "--lmax", "2", "--format", "structured"},
        {"kunneth", "--fixture", "paper-E2", "--lmax", "2", "--format", "structured"},
        {"morse", "--fixture", "paper-E2", "--lmax", "2", "--format", "structured"},
        {"deltaiso", "--fixture", "paper-E2", "--lmax", "2", "--format", "structured"},
        {"cau", "--fixture", "paper-E2", "--lmax", "1", "--format", "structured"},
    };
    for (const auto& args : cases) {
        cli_result first = run_cli(args);
        cli_result again = run_cli(args);
        CHECK(first.code == 0);
        CHECK(first.out == again.out);

        std::vector<std::string> wide = args;
        wide.insert(wide.end(), {"--jobs", "8"});
        cli_result parallel = run_cli(wide);
        CHECK(parallel.out == first.out);
    }
}

}  // TEST_SUITE
