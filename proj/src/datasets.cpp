#include "ksadist/datasets.hpp"

#include <initializer_list>

#include "ksadist/antidist.hpp"
#include "ksadist/coloring.hpp"

namespace ksadist {

namespace {

struct RawVector {
    const char* id;
    std::initializer_list<const char*> entries;
};

Pool<Cyclotomic> make_pool(int dim, std::initializer_list<RawVector> raw) {
    Pool<Cyclotomic> pool(dim);
    for (const auto& rv : raw) {
        std::vector<Cyclotomic> entries;
        entries.reserve(rv.entries.size());
        for (const char* e : rv.entries)
            entries.push_back(parse_cyclotomic(e));
        pool.push(StateVector<Cyclotomic>(rv.id, std::move(entries)));
    }
    return pool;
}

// 18 rank-1 projectors in dimension 4 forming nine complete bases, every
// vector in exactly two; the classic 18-vector Kochen-Specker proof, in the
// coordinate frame that contains (1,0,0,0) and (0,1,0,-1).
Dataset cabello18() {
    Dataset d;
    d.name = "cabello18";
    d.title = "18 vectors, 9 contexts, d=4";
    d.dim = 4;
    d.pool = make_pool(4, {
        {"1000", {"1", "0", "0", "0"}},
        {"0001", {"0", "0", "0", "1"}},
        {"0110", {"0", "1", "1", "0"}},
        {"01m0", {"0", "1", "-1", "0"}},
        {"0010", {"0", "0", "1", "0"}},
        {"0101", {"0", "1", "0", "1"}},
        {"010m", {"0", "1", "0", "-1"}},
        {"1m1m", {"1", "-1", "1", "-1"}},
        {"11mm", {"1", "1", "-1", "-1"}},
        {"1111", {"1", "1", "1", "1"}},
        {"1001", {"1", "0", "0", "1"}},
        {"10m0", {"1", "0", "-1", "0"}},
        {"1100", {"1", "1", "0", "0"}},
        {"1m00", {"1", "-1", "0", "0"}},
        {"001m", {"0", "0", "1", "-1"}},
        {"111m", {"1", "1", "1", "-1"}},
        {"1mmm", {"1", "-1", "-1", "-1"}},
        {"1m11", {"1", "-1", "1", "1"}},
    });
    d.expected_contexts = 9;
    d.expected_vertex_degree = 2;
    d.expected_colorable = false;
    d.known_contextual_sets = {{"1000", "1m1m", "111m"}};
    return d;
}

// 21 rank-1 projectors in dimension 6 with entries in {0,1,w,w^2}: seven
// complete bases, any two sharing exactly one vector, every vector in
// exactly two. Labels spell the entries with a=w, b=w^2.
Dataset lisonek21() {
    Dataset d;
    d.name = "lisonek21";
    d.title = "21 vectors, 7 contexts, d=6";
    d.dim = 6;
    d.pool = make_pool(6, {
        {"000001", {"0", "0", "0", "0", "0", "1"}},
        {"000010", {"0", "0", "0", "0", "1", "0"}},
        {"000100", {"0", "0", "0", "1", "0", "0"}},
        {"001000", {"0", "0", "1", "0", "0", "0"}},
        {"001111", {"0", "0", "1", "1", "1", "1"}},
        {"010000", {"0", "1", "0", "0", "0", "0"}},
        {"0101ab", {"0", "1", "0", "1", "1w", "-1-1w"}},
        {"0110ba", {"0", "1", "1", "0", "-1-1w", "1w"}},
        {"01ab01", {"0", "1", "1w", "-1-1w", "0", "1"}},
        {"01ba10", {"0", "1", "-1-1w", "1w", "1", "0"}},
        {"100000", {"1", "0", "0", "0", "0", "0"}},
        {"1001ba", {"1", "0", "0", "1", "-1-1w", "1w"}},
        {"1010ab", {"1", "0", "1", "0", "1w", "-1-1w"}},
        {"10ab10", {"1", "0", "1w", "-1-1w", "1", "0"}},
        {"10ba01", {"1", "0", "-1-1w", "1w", "0", "1"}},
        {"110011", {"1", "1", "0", "0", "1", "1"}},
        {"111100", {"1", "1", "1", "1", "0", "0"}},
        {"1a0b0b", {"1", "1w", "0", "-1-1w", "0", "-1-1w"}},
        {"1ab0b0", {"1", "1w", "-1-1w", "0", "-1-1w", "0"}},
        {"1b0aa0", {"1", "-1-1w", "0", "1w", "1w", "0"}},
        {"1ba00a", {"1", "-1-1w", "1w", "0", "0", "1w"}},
    });
    d.expected_contexts = 7;
    d.expected_vertex_degree = 2;
    d.expected_colorable = false;
    d.known_contextual_sets = {{"000001", "001111", "110011"}};
    return d;
}

// The 13-projector set in dimension 3: four complete bases (the z basis and
// one per y pair); the h vectors sit in no context. The scenario itself is
// colorable, yet {y1m, y2p, y3m} forced to 1 breaks it, witnessed by the z
// context, which excludes each of the three exclusively.
Dataset yuoh13() {
    Dataset d;
    d.name = "yuoh13";
    d.title = "13 vectors, 4 contexts, d=3";
    d.dim = 3;
    d.pool = make_pool(3, {
        {"h0", {"1", "1", "1"}},
        {"h1", {"-1", "1", "1"}},
        {"h2", {"1", "-1", "1"}},
        {"h3", {"1", "1", "-1"}},
        {"y1m", {"0", "1", "-1"}},
        {"y1p", {"0", "1", "1"}},
        {"y2m", {"-1", "0", "1"}},
        {"y2p", {"1", "0", "1"}},
        {"y3m", {"1", "-1", "0"}},
        {"y3p", {"1", "1", "0"}},
        {"z1", {"1", "0", "0"}},
        {"z2", {"0", "1", "0"}},
        {"z3", {"0", "0", "1"}},
    });
    d.expected_contexts = 4;
    d.expected_vertex_degree = -1; // h vectors lie in no context
    d.expected_colorable = true;
    d.state_ids = {"y1m", "y2p", "y3m"};
    d.known_pvm_ids = {"z1", "z2", "z3"};
    d.known_contextual_sets = {{"y1m", "y2p", "y3m"}};
    return d;
}

// Four two-qubit product states (|0>,|+>)x(|0>,|+>), unnormalized, plus the
// entangled basis that excludes state i at outcome i.
Dataset pbr() {
    Dataset d;
    d.name = "pbr";
    d.title = "4 states + 4-outcome excluding basis, d=4";
    d.dim = 4;
    d.pool = make_pool(4, {
        {"rho1", {"1", "0", "0", "0"}},
        {"rho2", {"1", "1", "0", "0"}},
        {"rho3", {"1", "0", "1", "0"}},
        {"rho4", {"1", "1", "1", "1"}},
        {"xi1", {"0", "1", "1", "0"}},
        {"xi2", {"1", "-1", "1", "1"}},
        {"xi3", {"1", "1", "-1", "1"}},
        {"xi4", {"1", "0", "0", "-1"}},
    });
    d.expected_contexts = 1;
    d.expected_vertex_degree = -1;
    d.expected_colorable = true;
    d.state_ids = {"rho1", "rho2", "rho3", "rho4"};
    d.known_pvm_ids = {"xi1", "xi2", "xi3", "xi4"};
    d.known_contextual_sets = {{"rho1", "rho2", "rho3", "rho4"}};
    return d;
}

void validate(const Dataset& d) {
    Scenario<Cyclotomic> sc = enumerate_contexts(d.pool);
    if (static_cast<int>(sc.contexts.size()) != d.expected_contexts)
        throw Error("dataset " + d.name + ": expected " + std::to_string(d.expected_contexts) +
                    " contexts, found " + std::to_string(sc.contexts.size()));
    if (d.expected_vertex_degree >= 0) {
        std::vector<int> deg(sc.vertices.size(), 0);
        for (const auto& ctx : sc.contexts)
            for (int v : ctx)
                ++deg[v];
        for (int v = 0; v < static_cast<int>(deg.size()); ++v)
            if (deg[v] != d.expected_vertex_degree)
                throw Error("dataset " + d.name + ": vertex '" + sc.vertices[v].id +
                            "' lies in " + std::to_string(deg[v]) + " contexts");
    }
    if (ks_color(sc).has_value() != d.expected_colorable)
        throw Error("dataset " + d.name + ": colorability does not match");
    for (const auto& id : d.state_ids)
        if (!d.pool.find_id(id))
            throw Error("dataset " + d.name + ": unknown annotated id " + id);
    if (!d.known_pvm_ids.empty()) {
        Pvm<Cyclotomic> pvm;
        pvm.dim = d.dim;
        for (const auto& id : d.known_pvm_ids)
            pvm.elements.push_back({{d.pool[*d.pool.find_id(id)]}});
        if (!validate_pvm(pvm))
            throw Error("dataset " + d.name + ": annotated measurement is not a PVM");
    }
}

} // namespace

std::vector<std::string> dataset_names() {
    return {"cabello18", "lisonek21", "yuoh13", "pbr"};
}

Dataset load_dataset(const std::string& name) {
    Dataset d;
    if (name == "cabello18")
        d = cabello18();
    else if (name == "lisonek21")
        d = lisonek21();
    else if (name == "yuoh13")
        d = yuoh13();
    else if (name == "pbr")
        d = pbr();
    else
        throw InputError("unknown dataset '" + name + "' (try: cabello18, lisonek21, yuoh13, pbr)");
    validate(d);
    return d;
}

} // namespace ksadist
