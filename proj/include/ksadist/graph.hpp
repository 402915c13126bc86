#pragma once

#include <span>
#include <vector>

#include "ksadist/algebra.hpp"
#include "ksadist/exec.hpp"

namespace ksadist {

/// Orthogonality graph of a vector family: adj[i][j] iff <v_i,v_j> = 0.
struct OrthoGraph {
    int n = 0;
    std::vector<std::vector<char>> adj;

    bool edge(int i, int j) const { return adj[i][j] != 0; }
    std::vector<int> neighbors(int i) const {
        std::vector<int> out;
        for (int j = 0; j < n; ++j)
            if (adj[i][j])
                out.push_back(j);
        return out;
    }
};

/// Builds the pairwise-orthogonality matrix. Parallel variant splits the
/// row loop across OpenMP threads; entries are independent.
template <typename S>
OrthoGraph build_orthogonality(std::span<const StateVector<S>> vectors,
                               Exec exec = Exec::Parallel) {
    OrthoGraph g;
    g.n = static_cast<int>(vectors.size());
    g.adj.assign(g.n, std::vector<char>(g.n, 0));
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < g.n; ++i)
            for (int j = i + 1; j < g.n; ++j)
                g.adj[i][j] = orthogonal(vectors[i], vectors[j]) ? 1 : 0;
        for (int i = 0; i < g.n; ++i)
            for (int j = i + 1; j < g.n; ++j)
                g.adj[j][i] = g.adj[i][j];
    } else {
        for (int i = 0; i < g.n; ++i)
            for (int j = i + 1; j < g.n; ++j)
                g.adj[i][j] = g.adj[j][i] = orthogonal(vectors[i], vectors[j]) ? 1 : 0;
    }
    return g;
}

/// All k-cliques, each sorted ascending, listed in lexicographic order.
/// The parallel variant fans out over the smallest clique member and
/// concatenates per-branch results in order, so output is identical to the
/// serial reference.
std::vector<std::vector<int>> enumerate_cliques(const OrthoGraph& g, int k,
                                                Exec exec = Exec::Parallel);

/// k-cliques of the subgraph induced by `vertices` (indices into g), reported
/// as indices into g, lexicographic with respect to the order of `vertices`.
std::vector<std::vector<int>> enumerate_cliques_within(const OrthoGraph& g,
                                                       std::span<const int> vertices, int k,
                                                       Exec exec = Exec::Serial);

/// All size-k index subsets of {0..n-1}, lexicographic.
std::vector<std::vector<int>> combinations(int n, int k);

} // namespace ksadist
