#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ksadist/analysis.hpp"
#include "ksadist/datasets.hpp"
#include "support.hpp"

using namespace ksadist;
using namespace ksadist::test;

TEST_CASE("load_dataset basics") {
    CHECK(dataset_names().size() == 4);
    CHECK_THROWS_AS(load_dataset("nope"), InputError);
}

TEST_CASE("cabello18 structure") {
    Dataset d = load_dataset("cabello18");
    CHECK(d.dim == 4);
    CHECK(d.pool.size() == 18);
    auto sc = enumerate_contexts(d.pool);
    CHECK(sc.contexts.size() == 9);
    std::vector<int> deg(18, 0);
    for (const auto& ctx : sc.contexts)
        for (int v : ctx)
            ++deg[v];
    for (int v = 0; v < 18; ++v)
        CHECK(deg[v] == 2);
    // the two named vectors are present and orthogonal
    auto a = d.pool.find_id("1000");
    auto b = d.pool.find_id("010m");
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(orthogonal(d.pool[*a], d.pool[*b]));
}

TEST_CASE("lisonek21 structure") {
    Dataset d = load_dataset("lisonek21");
    CHECK(d.dim == 6);
    CHECK(d.pool.size() == 21);
    auto sc = enumerate_contexts(d.pool);
    REQUIRE(sc.contexts.size() == 7);
    // any two contexts share exactly one vector
    for (std::size_t a = 0; a < sc.contexts.size(); ++a)
        for (std::size_t b = a + 1; b < sc.contexts.size(); ++b) {
            int shared = 0;
            for (int v : sc.contexts[a])
                shared += std::count(sc.contexts[b].begin(), sc.contexts[b].end(), v);
            CHECK(shared == 1);
        }
    // the anchor label encodes its entries
    auto anchor = d.pool.find_id("10ab10");
    REQUIRE(anchor.has_value());
    const auto& v = d.pool[*anchor];
    CHECK(v.entries[0] == Cyclotomic(1));
    CHECK(v.entries[1].is_zero());
    CHECK(v.entries[2] == Cyclotomic::omega());
    CHECK(v.entries[3] == Cyclotomic::omega() * Cyclotomic::omega());
    CHECK(v.entries[4] == Cyclotomic(1));
    CHECK(v.entries[5].is_zero());
}

TEST_CASE("yuoh13 structure") {
    Dataset d = load_dataset("yuoh13");
    CHECK(d.dim == 3);
    CHECK(d.pool.size() == 13);
    auto sc = enumerate_contexts(d.pool);
    CHECK(sc.contexts.size() == 4);
    CHECK_FALSE(is_scenario_contextual(sc));
}

TEST_CASE("pbr structure") {
    Dataset d = load_dataset("pbr");
    CHECK(d.dim == 4);
    CHECK(d.pool.size() == 8);
    // pairwise overlaps of the four states are 1/2 or 1/4
    auto states = d.state_ids;
    for (std::size_t a = 0; a < states.size(); ++a)
        for (std::size_t b = a + 1; b < states.size(); ++b) {
            auto ov = overlap(d.pool[*d.pool.find_id(states[a])],
                              d.pool[*d.pool.find_id(states[b])]);
            CHECK((ov == Rational(1, 2) || ov == Rational(1, 4)));
        }
}

TEST_CASE("annotated contextual sets re-derive as contextual") {
    for (const auto& name : dataset_names()) {
        Dataset d = load_dataset(name);
        for (const auto& ids : d.known_contextual_sets) {
            std::vector<StateVector<Cyclotomic>> states;
            for (const auto& id : ids)
                states.push_back(d.pool[*d.pool.find_id(id)]);
            auto v = is_set_contextual<Cyclotomic>(states, d.pool, 0);
            CHECK(v.status == Verdict::Contextual);
        }
    }
}
