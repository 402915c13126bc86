#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ksadist/datasets.hpp"
#include "ksadist/dot.hpp"
#include "ksadist/io.hpp"
#include "support.hpp"

using namespace ksadist;
using namespace ksadist::test;

TEST_CASE("scenario parsing") {
    SUBCASE("minimal pool") {
        Json j = Json::parse(R"({"dimension":2,"field":"cyclotomic3",
            "vertices":[{"id":"a","vector":["1","0"]}]})");
        auto pool = parse_pool(j);
        CHECK(field_of(pool) == "cyclotomic3");
        CHECK(std::get<Pool<Cyclotomic>>(pool).size() == 1);
    }
    SUBCASE("scalar grammar inside vectors") {
        Json j = Json::parse(R"({"dimension":2,
            "vertices":[{"id":"a","vector":["1+1w","-1/2"]}]})");
        auto pool = std::get<Pool<Cyclotomic>>(parse_pool(j));
        // canonicalized on ingestion: leading entry scaled to 1, ratio kept
        CHECK(pool[0].entries[0] == Cyclotomic(1));
        CHECK(pool[0].entries[1] ==
              Cyclotomic(Rational(-1, 2)) / Cyclotomic(Rational(1), Rational(1)));
    }
    SUBCASE("duplicates after canonicalization are rejected with ids") {
        Json j = Json::parse(R"({"dimension":2,"vertices":[
            {"id":"a","vector":["1","0"]},{"id":"b","vector":["2","0"]}]})");
        CHECK_THROWS_WITH_AS(parse_pool(j),
                             "duplicate projector: 'b' equals 'a' up to scale", InputError);
    }
    SUBCASE("malformed scalars, dimensions, fields") {
        CHECK_THROWS_AS(parse_pool(Json::parse(
                            R"({"dimension":2,"vertices":[{"id":"a","vector":["x","0"]}]})")),
                        InputError);
        CHECK_THROWS_AS(parse_pool(Json::parse(
                            R"({"dimension":3,"vertices":[{"id":"a","vector":["1","0"]}]})")),
                        InputError);
        CHECK_THROWS_AS(parse_pool(Json::parse(
                            R"({"dimension":2,"field":"octonion",
                                "vertices":[{"id":"a","vector":["1","0"]}]})")),
                        InputError);
        CHECK_THROWS_AS(parse_pool(Json::parse(R"({"vertices":[]})")), InputError);
    }
    SUBCASE("contexts recomputed when absent, validated when present") {
        Json j = Json::parse(R"({"dimension":2,"vertices":[
            {"id":"a","vector":["1","0"]},{"id":"b","vector":["0","1"]}]})");
        auto sc = std::get<Scenario<Cyclotomic>>(parse_scenario(j));
        REQUIRE(sc.contexts.size() == 1);

        Json jc = j;
        jc["contexts"] = Json::array({Json::array({"a", "b"})});
        auto sc2 = std::get<Scenario<Cyclotomic>>(parse_scenario(jc));
        CHECK(sc2.contexts == sc.contexts);

        jc["contexts"] = Json::array({Json::array({"a", "a"})});
        CHECK_THROWS_AS(parse_scenario(jc), InputError);
        jc["contexts"] = Json::array({Json::array({"a", "zzz"})});
        CHECK_THROWS_AS(parse_scenario(jc), InputError);
    }
    SUBCASE("float backend scenario") {
        Json j = Json::parse(R"js({"dimension":2,"field":"float","vertices":[
            {"id":"p","vector":["(0.7071067811865476,0)","(0.7071067811865476,0)"]},
            {"id":"m","vector":["(0.7071067811865476,0)","(-0.7071067811865476,0)"]}]})js");
        auto sc = std::get<Scenario<FloatComplex>>(parse_scenario(j));
        REQUIRE(sc.contexts.size() == 1);
        CHECK(sc.contexts[0] == std::vector<int>{0, 1});
    }
}

TEST_CASE("parse-serialize-parse identity on canonical files") {
    for (const auto& name : dataset_names()) {
        Dataset d = load_dataset(name);
        auto sc = enumerate_contexts(d.pool);
        Json j = to_json(sc);
        auto back = std::get<Scenario<Cyclotomic>>(parse_scenario(j));
        Json j2 = to_json(back);
        CHECK(j == j2);
    }
}

TEST_CASE("pvm parsing") {
    Dataset d = load_dataset("pbr");
    SUBCASE("by pool ids") {
        Json j = Json::parse(R"({"dimension":4,
            "elements":[["xi1"],["xi2"],["xi3"],["xi4"]]})");
        auto pvm = parse_pvm<Cyclotomic>(j, d.pool);
        CHECK(validate_pvm(pvm));
    }
    SUBCASE("inline vectors and merged elements") {
        Json j = Json::parse(R"({"dimension":4,"elements":[
            [["0","1","1","0"],["1","-1","1","1"]],
            [{"id":"x3","vector":["1","1","-1","1"]}],
            [["1","0","0","-1"]]]})");
        auto pvm = parse_pvm<Cyclotomic>(j, d.pool);
        CHECK(pvm.outcome_count() == 3);
        CHECK(pvm.total_rank() == 4);
        CHECK(validate_pvm(pvm));
    }
    SUBCASE("unknown ids and field mismatches") {
        CHECK_THROWS_AS(parse_pvm<Cyclotomic>(
                            Json::parse(R"({"dimension":4,"elements":[["nope"]]})"), d.pool),
                        InputError);
        CHECK_THROWS_AS(parse_pvm<Cyclotomic>(
                            Json::parse(R"({"dimension":4,"field":"float",
                                            "elements":[["xi1"]]})"),
                            d.pool),
                        InputError);
    }
}

TEST_CASE("witness and verdict json shapes") {
    Dataset d = load_dataset("yuoh13");
    auto sc = enumerate_contexts(d.pool);
    auto a = ks_color(sc);
    Json w = witness_json(sc, a);
    CHECK(w["status"] == "sat");
    CHECK(w["assignment"].size() == 13);
    int ones = 0;
    for (const auto& [id, val] : w["assignment"].items())
        ones += val.get<int>();
    CHECK(ones >= 1);

    Json u = witness_json(sc, std::optional<Assignment>{});
    CHECK(u["status"] == "unsat");
    CHECK_FALSE(u.contains("assignment"));
}

TEST_CASE("dot export") {
    SUBCASE("single context in d=2: 3 nodes, 2 edges") {
        auto sc = enumerate_contexts(ipool(2, {{1, 0}, {0, 1}}));
        std::string dot = export_dot(sc);
        CHECK(std::count(dot.begin(), dot.end(), '[') == 3); // node attribute blocks
        std::size_t edges = 0, pos = 0;
        while ((pos = dot.find(" -- ", pos)) != std::string::npos) {
            ++edges;
            pos += 4;
        }
        CHECK(edges == 2);
        CHECK(dot.find("graph scenario {") == 0);
    }
    SUBCASE("dataset counts") {
        auto check_counts = [](const std::string& name, int verts, int ctxs) {
            auto sc = enumerate_contexts(load_dataset(name).pool);
            std::string dot = export_dot(sc);
            CHECK(std::count(dot.begin(), dot.end(), '[') == verts + ctxs);
            std::size_t edges = 0, pos = 0;
            while ((pos = dot.find(" -- ", pos)) != std::string::npos) {
                ++edges;
                pos += 4;
            }
            CHECK(edges == static_cast<std::size_t>(verts) * 2);
        };
        check_counts("cabello18", 18, 9);
        check_counts("lisonek21", 21, 7);
    }
    SUBCASE("deterministic output") {
        auto sc = enumerate_contexts(load_dataset("yuoh13").pool);
        CHECK(export_dot(sc) == export_dot(sc));
    }
}

TEST_CASE("float tolerance control") {
    double saved = float_eps();
    set_float_eps(1e-3);
    CHECK(FloatComplex(5e-4).is_zero());
    set_float_eps(saved);
    CHECK_FALSE(FloatComplex(5e-4).is_zero());
    CHECK_THROWS_AS(set_float_eps(0.0), PreconditionError);
}
