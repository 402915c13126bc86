#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ksadist/algebra.hpp"
#include "ksadist/graph.hpp"

namespace ksadist {

/// Duplicate-free ordered family of canonicalized rays of one dimension.
/// A finite stand-in for the continuum of rank-1 projectors: everything
/// quantified "over all projectors" downstream is relative to a pool.
template <typename S> class Pool {
  public:
    explicit Pool(int dim) : dim_(dim) {
        if (dim <= 0)
            throw PreconditionError("pool dimension must be positive");
    }

    int dim() const { return dim_; }
    int size() const { return static_cast<int>(vectors_.size()); }
    const StateVector<S>& operator[](int i) const { return vectors_[i]; }
    const std::vector<StateVector<S>>& vectors() const { return vectors_; }

    std::optional<int> find(const StateVector<S>& v) const {
        StateVector<S> c = canonicalize(v);
        for (int i = 0; i < size(); ++i)
            if (entries_equal(vectors_[i], c))
                return i;
        return std::nullopt;
    }

    std::optional<int> find_id(std::string_view id) const {
        for (int i = 0; i < size(); ++i)
            if (vectors_[i].id == id)
                return i;
        return std::nullopt;
    }

    /// Canonicalizes and appends; rejects rays already present.
    int push(const StateVector<S>& v) {
        check_dim(v);
        StateVector<S> c = canonicalize(v);
        for (int i = 0; i < size(); ++i)
            if (entries_equal(vectors_[i], c))
                throw InputError("duplicate projector: '" + v.id + "' equals '" +
                                 vectors_[i].id + "' up to scale");
        if (find_id(c.id))
            throw InputError("duplicate vector id '" + c.id + "'");
        vectors_.push_back(std::move(c));
        return size() - 1;
    }

    /// Canonicalizes and appends unless the ray is already present; returns
    /// the index either way. Picks a fresh id on collision.
    int insert(const StateVector<S>& v) {
        check_dim(v);
        StateVector<S> c = canonicalize(v);
        for (int i = 0; i < size(); ++i)
            if (entries_equal(vectors_[i], c))
                return i;
        while (find_id(c.id))
            c.id += "'";
        vectors_.push_back(std::move(c));
        return size() - 1;
    }

  private:
    void check_dim(const StateVector<S>& v) const {
        if (v.dim() != dim_)
            throw PreconditionError("vector '" + v.id + "' has dimension " +
                                    std::to_string(v.dim()) + ", pool expects " +
                                    std::to_string(dim_));
    }

    int dim_ = 0;
    std::vector<StateVector<S>> vectors_;
};

/// Contextuality hypergraph: canonicalized vertices plus contexts, each a
/// sorted set of exactly dim pairwise-orthogonal vertex indices.
template <typename S> struct Scenario {
    int dim = 0;
    std::vector<StateVector<S>> vertices;
    std::vector<std::vector<int>> contexts;
};

/// All maximal-size orthogonal cliques of the pool, i.e. every context its
/// vectors can form. Vertex order follows the pool; contexts come out in
/// lexicographic index order. Zero contexts is a valid outcome.
template <typename S>
Scenario<S> enumerate_contexts(const Pool<S>& pool, Exec exec = Exec::Parallel) {
    Scenario<S> sc;
    sc.dim = pool.dim();
    sc.vertices = pool.vectors();
    OrthoGraph g = build_orthogonality<S>(sc.vertices, exec);
    sc.contexts = enumerate_cliques(g, pool.dim(), exec);
    return sc;
}

/// Indices of pool rays orthogonal to at least one of the given states,
/// excluding rays equal to a given state.
template <typename S>
std::vector<int> implied_projectors(std::span<const StateVector<S>> states, const Pool<S>& pool) {
    std::vector<StateVector<S>> canon;
    canon.reserve(states.size());
    for (const auto& s : states) {
        if (s.dim() != pool.dim())
            throw PreconditionError("state '" + s.id + "' dimension mismatch with pool");
        canon.push_back(canonicalize(s));
    }
    std::vector<int> out;
    for (int i = 0; i < pool.size(); ++i) {
        bool member = false, orth = false;
        for (const auto& s : canon) {
            if (entries_equal(pool[i], s))
                member = true;
            else if (orthogonal(pool[i], s))
                orth = true;
        }
        if (!member && orth)
            out.push_back(i);
    }
    return out;
}

/// The three generation conditions: the states are vertices, every other
/// vertex is orthogonal to at least one state, and the context list is the
/// full enumeration over the vertex set.
template <typename S>
bool is_generated_by(const Scenario<S>& sc, std::span<const int> state_indices) {
    std::vector<char> in_s(sc.vertices.size(), 0);
    for (int idx : state_indices) {
        if (idx < 0 || idx >= static_cast<int>(sc.vertices.size()))
            throw PreconditionError("state index out of range");
        in_s[idx] = 1;
    }
    OrthoGraph g = build_orthogonality<S>(sc.vertices);
    for (int v = 0; v < g.n; ++v) {
        if (in_s[v])
            continue;
        bool covered = false;
        for (int idx : state_indices)
            covered = covered || g.edge(v, idx);
        if (!covered)
            return false;
    }
    auto all = enumerate_cliques(g, sc.dim);
    auto sorted_copy = [](std::vector<std::vector<int>> v) {
        for (auto& c : v)
            std::sort(c.begin(), c.end());
        std::sort(v.begin(), v.end());
        return v;
    };
    return sorted_copy(all) == sorted_copy(sc.contexts);
}

template <typename S>
void require_pairwise_nonorthogonal(std::span<const StateVector<S>> states) {
    for (std::size_t i = 0; i < states.size(); ++i)
        for (std::size_t j = i + 1; j < states.size(); ++j) {
            if (same_ray(states[i], states[j]))
                throw PreconditionError("states '" + states[i].id + "' and '" + states[j].id +
                                        "' are the same projector");
            if (orthogonal(states[i], states[j]))
                throw PreconditionError("states '" + states[i].id + "' and '" + states[j].id +
                                        "' are orthogonal; a non-orthogonal set is required");
        }
}

/// Scenario generated by the states over the pool: vertices are the states
/// followed by their implied pool rays (pool order), contexts fully
/// enumerated. The states must be pairwise non-orthogonal.
template <typename S>
Scenario<S> generate_scenario(std::span<const StateVector<S>> states, const Pool<S>& pool,
                              Exec exec = Exec::Parallel) {
    require_pairwise_nonorthogonal(states);
    Pool<S> verts(pool.dim());
    for (const auto& s : states)
        verts.push(s);
    for (int i : implied_projectors(states, pool))
        verts.insert(pool[i]);
    return enumerate_contexts(verts, exec);
}

/// Pool growth toward the (infinite) implied-projector set: each round takes
/// every linearly independent (dim-1)-subset of the current pool and inserts
/// the ray orthogonal to its span. Stops at a fixpoint or after max_rounds.
/// Deterministic: subsets in lexicographic order, completions appended in
/// that order.
template <typename S>
Pool<S> closure(const Pool<S>& start, int max_rounds, Exec exec = Exec::Parallel) {
    Pool<S> pool = start;
    int counter = 0;
    int prev_frozen = 0;
    for (int round = 0; round < max_rounds; ++round) {
        const int frozen = pool.size();
        auto all_subs = combinations(frozen, pool.dim() - 1);
        // subsets entirely inside the previous snapshot were already handled
        std::vector<std::vector<int>> subs;
        subs.reserve(all_subs.size());
        for (auto& sub : all_subs)
            if (sub.empty() || sub.back() >= prev_frozen)
                subs.push_back(std::move(sub));
        prev_frozen = frozen;
        std::vector<std::optional<std::vector<S>>> rays(subs.size());
        auto solve_one = [&](std::size_t t) {
            std::vector<StateVector<S>> vv;
            vv.reserve(subs[t].size());
            for (int i : subs[t])
                vv.push_back(pool[i]);
            rays[t] = null_ray<S>(vv, pool.dim());
        };
        if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
            for (std::int64_t t = 0; t < static_cast<std::int64_t>(subs.size()); ++t)
                solve_one(static_cast<std::size_t>(t));
        } else {
            for (std::size_t t = 0; t < subs.size(); ++t)
                solve_one(t);
        }
        bool grew = false;
        for (std::size_t t = 0; t < subs.size(); ++t) {
            if (!rays[t])
                continue;
            StateVector<S> v("g" + std::to_string(counter), std::move(*rays[t]));
            int before = pool.size();
            if (pool.insert(v) == before) {
                ++counter;
                grew = true;
            }
        }
        if (!grew)
            break;
    }
    return pool;
}

} // namespace ksadist
