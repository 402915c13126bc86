#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ksadist/coloring.hpp"
#include "ksadist/datasets.hpp"
#include "ksadist/scenario.hpp"
#include "support.hpp"

using namespace ksadist;
using namespace ksadist::test;

TEST_CASE("pool dedup and ids") {
    Pool<Cyclotomic> p(2);
    p.push(ivec("a", {1, 0}));
    CHECK_THROWS_AS(p.push(ivec("b", {2, 0})), InputError); // same ray
    CHECK_THROWS_AS(p.push(ivec("a", {0, 1})), InputError); // same id
    CHECK(p.insert(ivec("c", {3, 0})) == 0);                // dedup, existing index
    CHECK(p.insert(ivec("c", {1, 1})) == 1);
    CHECK(p.size() == 2);
    CHECK(p.find_id("c").has_value());
    CHECK_THROWS_AS(Pool<Cyclotomic>(0), PreconditionError);
    CHECK_THROWS_AS(p.push(ivec("d", {1, 0, 0})), PreconditionError);
}

TEST_CASE("context enumeration on a 2d pool") {
    auto pool = ipool(2, {{1, 0}, {0, 1}, {1, 1}, {1, -1}});
    auto sc = enumerate_contexts(pool);
    REQUIRE(sc.contexts.size() == 2);
    CHECK(sc.contexts[0] == std::vector<int>{0, 1});
    CHECK(sc.contexts[1] == std::vector<int>{2, 3});
}

TEST_CASE("zero contexts is a valid outcome") {
    auto sc = enumerate_contexts(ipool(3, {{1, 0, 0}, {1, 1, 0}}));
    CHECK(sc.contexts.empty());
}

TEST_CASE("every enumerated context is an exact orthogonal resolution of identity") {
    for (const auto& name : dataset_names()) {
        Dataset d = load_dataset(name);
        auto sc = enumerate_contexts(d.pool);
        for (const auto& ctx : sc.contexts) {
            REQUIRE(static_cast<int>(ctx.size()) == d.dim);
            std::vector<StateVector<Cyclotomic>> vs;
            for (int v : ctx)
                vs.push_back(sc.vertices[v]);
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (std::size_t j = i + 1; j < vs.size(); ++j)
                    CHECK(inner_product(vs[i], vs[j]).is_zero());
            CHECK(is_identity(projector_sum(vs)));
        }
    }
}

TEST_CASE("implied projectors") {
    auto pool = ipool(2, {{1, 0}, {0, 1}, {1, 1}});
    std::vector<StateVector<Cyclotomic>> s{ivec("s", {1, 0})};
    CHECK(implied_projectors<Cyclotomic>(s, pool) == std::vector<int>{1});

    SUBCASE("members excluded even with different scale") {
        std::vector<StateVector<Cyclotomic>> s2{ivec("s", {5, 0})};
        CHECK(implied_projectors<Cyclotomic>(s2, pool) == std::vector<int>{1});
    }

    SUBCASE("monotone in the state set") {
        Dataset d = load_dataset("yuoh13");
        std::mt19937 rng(5);
        for (int t = 0; t < 30; ++t) {
            std::vector<StateVector<Cyclotomic>> a, b;
            for (int i = 0; i < d.pool.size(); ++i) {
                bool ina = rng() % 3 == 0;
                bool inb = ina || rng() % 3 == 0;
                if (ina)
                    a.push_back(d.pool[i]);
                if (inb)
                    b.push_back(d.pool[i]);
            }
            if (a.empty() || b.empty())
                continue;
            auto ia = implied_projectors<Cyclotomic>(a, d.pool);
            auto ib = implied_projectors<Cyclotomic>(b, d.pool);
            // a subset of b: implied(a) minus b-members must appear in implied(b)
            for (int v : ia) {
                bool is_b_member = false;
                for (const auto& st : b)
                    is_b_member = is_b_member || same_ray(d.pool[v], st);
                if (!is_b_member)
                    CHECK(std::find(ib.begin(), ib.end(), v) != ib.end());
            }
        }
    }
}

TEST_CASE("yu-oh implied set: h2 is not implied by {y1m, y2p, y3m}") {
    Dataset d = load_dataset("yuoh13");
    std::vector<StateVector<Cyclotomic>> s;
    for (const auto& id : std::vector<std::string>{"y1m", "y2p", "y3m"})
        s.push_back(d.pool[*d.pool.find_id(id)]);
    auto implied = implied_projectors<Cyclotomic>(s, d.pool);
    CHECK(implied.size() == 9);
    std::vector<std::string> ids;
    for (int v : implied)
        ids.push_back(d.pool[v].id);
    CHECK(std::find(ids.begin(), ids.end(), "h2") == ids.end());
    for (const char* present : {"h0", "h1", "h3", "y1p", "y2m", "y3p", "z1", "z2", "z3"})
        CHECK(std::find(ids.begin(), ids.end(), present) != ids.end());
}

TEST_CASE("is_generated_by") {
    SUBCASE("single context, one state generates") {
        auto sc = enumerate_contexts(ipool(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
        std::vector<int> s{0};
        CHECK(is_generated_by(sc, s));
    }
    SUBCASE("full yu-oh scenario is not generated by the orange triple") {
        Dataset d = load_dataset("yuoh13");
        auto sc = enumerate_contexts(d.pool);
        std::vector<int> s{*d.pool.find_id("y1m"), *d.pool.find_id("y2p"),
                           *d.pool.find_id("y3m")};
        CHECK_FALSE(is_generated_by(sc, s)); // h2 is orthogonal to none of them
    }
    SUBCASE("sign-pattern triples do generate the full yu-oh scenario") {
        Dataset d = load_dataset("yuoh13");
        auto sc = enumerate_contexts(d.pool);
        std::vector<int> s{*d.pool.find_id("y1p"), *d.pool.find_id("y2m"),
                           *d.pool.find_id("y3p")};
        CHECK(is_generated_by(sc, s));
    }
    SUBCASE("missing contexts break condition (iii)") {
        auto pool = ipool(2, {{1, 0}, {0, 1}});
        Scenario<Cyclotomic> sc;
        sc.dim = 2;
        sc.vertices = pool.vectors();
        std::vector<int> s{0};
        CHECK_FALSE(is_generated_by(sc, s)); // context list empty, enumeration has one
    }
    SUBCASE("invalid index") {
        auto sc = enumerate_contexts(ipool(2, {{1, 0}, {0, 1}}));
        std::vector<int> bad{7};
        CHECK_THROWS_AS(is_generated_by(sc, bad), PreconditionError);
    }
}

TEST_CASE("generate_scenario") {
    SUBCASE("trivial pair") {
        auto pool = ipool(2, {{1, 0}, {0, 1}});
        std::vector<StateVector<Cyclotomic>> s{ivec("s", {1, 0})};
        auto sc = generate_scenario<Cyclotomic>(s, pool);
        CHECK(sc.vertices.size() == 2);
        CHECK(sc.contexts.size() == 1);
        std::vector<int> si{0};
        CHECK(is_generated_by(sc, si));
    }
    SUBCASE("orthogonal states are rejected") {
        auto pool = ipool(2, {{1, 0}, {0, 1}});
        std::vector<StateVector<Cyclotomic>> s{ivec("a", {1, 0}), ivec("b", {0, 1})};
        CHECK_THROWS_AS(generate_scenario<Cyclotomic>(s, pool), PreconditionError);
    }
    SUBCASE("pbr states over states+xi pool") {
        Dataset d = load_dataset("pbr");
        std::vector<StateVector<Cyclotomic>> s;
        for (const auto& id : d.state_ids)
            s.push_back(d.pool[*d.pool.find_id(id)]);
        auto sc = generate_scenario<Cyclotomic>(s, d.pool);
        CHECK(sc.vertices.size() == 8);
        REQUIRE(sc.contexts.size() == 1);
        std::vector<std::string> ctx_ids;
        for (int v : sc.contexts[0])
            ctx_ids.push_back(sc.vertices[v].id);
        CHECK(ctx_ids == std::vector<std::string>{"xi1", "xi2", "xi3", "xi4"});
    }
    SUBCASE("yu-oh orange triple generates a 12-vertex scenario") {
        Dataset d = load_dataset("yuoh13");
        std::vector<StateVector<Cyclotomic>> s;
        for (const auto& id : d.state_ids)
            s.push_back(d.pool[*d.pool.find_id(id)]);
        auto sc = generate_scenario<Cyclotomic>(s, d.pool);
        CHECK(sc.vertices.size() == 12); // h2 is not implied
        std::vector<int> si{0, 1, 2};
        CHECK(is_generated_by(sc, si));
        CHECK(sc.contexts.size() == 4);
    }
    SUBCASE("generated scenarios always satisfy is_generated_by") {
        Dataset d = load_dataset("cabello18");
        std::mt19937 rng(29);
        OrthoGraph g = build_orthogonality<Cyclotomic>(d.pool.vectors());
        int done = 0;
        while (done < 15) {
            std::vector<int> pick;
            while (pick.size() < 3) {
                int v = static_cast<int>(rng() % d.pool.size());
                bool ok = std::find(pick.begin(), pick.end(), v) == pick.end();
                for (int u : pick)
                    ok = ok && !g.edge(u, v);
                if (ok)
                    pick.push_back(v);
            }
            std::vector<StateVector<Cyclotomic>> s;
            for (int v : pick)
                s.push_back(d.pool[v]);
            auto sc = generate_scenario<Cyclotomic>(s, d.pool);
            std::vector<int> si(s.size());
            for (std::size_t i = 0; i < si.size(); ++i)
                si[i] = static_cast<int>(i);
            CHECK(is_generated_by(sc, si));
            ++done;
        }
    }
}

TEST_CASE("a context admits at most one member of a pairwise non-orthogonal set") {
    Dataset d = load_dataset("lisonek21");
    auto sc = enumerate_contexts(d.pool);
    OrthoGraph g = build_orthogonality<Cyclotomic>(d.pool.vectors());
    std::mt19937 rng(31);
    for (int t = 0; t < 50; ++t) {
        std::vector<int> pick;
        for (int tries = 0; tries < 60 && pick.size() < 4; ++tries) {
            int v = static_cast<int>(rng() % d.pool.size());
            bool ok = std::find(pick.begin(), pick.end(), v) == pick.end();
            for (int u : pick)
                ok = ok && !g.edge(u, v);
            if (ok)
                pick.push_back(v);
        }
        for (const auto& ctx : sc.contexts) {
            int members = 0;
            for (int v : ctx)
                members += std::find(pick.begin(), pick.end(), v) != pick.end();
            CHECK(members <= 1);
        }
    }
}

TEST_CASE("closure") {
    SUBCASE("one round in d=2 completes each singleton") {
        Pool<Cyclotomic> start(2);
        start.push(ivec("a", {1, 1}));
        start.push(ivec("b", {1, 0}));
        auto grown = closure(start, 1);
        REQUIRE(grown.size() == 4);
        CHECK(entries_equal(grown[2], ivec("x", {1, -1})));
        CHECK(entries_equal(grown[3], ivec("x", {0, 1})));
    }
    SUBCASE("single vector in d=3 is a fixpoint") {
        Pool<Cyclotomic> start(3);
        start.push(ivec("a", {1, 0, 0}));
        CHECK(closure(start, 5).size() == 1);
    }
    SUBCASE("yu-oh orange triple reaches the z basis within 3 rounds") {
        Dataset d = load_dataset("yuoh13");
        Pool<Cyclotomic> start(3);
        for (const auto& id : d.state_ids)
            start.push(d.pool[*d.pool.find_id(id)]);
        auto grown = closure(start, 3);
        for (const char* z : {"z1", "z2", "z3"}) {
            auto zv = d.pool[*d.pool.find_id(z)];
            CHECK(grown.find(zv).has_value());
        }
        CHECK_FALSE(closure(start, 2).find(d.pool[*d.pool.find_id("z1")]).has_value());
    }
    SUBCASE("monotone in rounds and idempotent at fixpoint") {
        auto start = ipool(2, {{1, 1}, {1, 0}});
        auto one = closure(start, 1);
        auto two = closure(start, 2);
        for (int i = 0; i < one.size(); ++i)
            CHECK(two.find(one[i]).has_value());
        // d=2 closure is complete after one round here: same pool again
        CHECK(two.size() == one.size());
        auto again = closure(one, 1);
        CHECK(again.size() == one.size());
    }
}
