#include "ksadist/graph.hpp"

namespace ksadist {

namespace {

// Extends the current clique with candidates drawn from cand[pos..]; cand is
// always sorted, so results come out lexicographic.
void extend(const OrthoGraph& g, int k, std::vector<int>& clique, const std::vector<int>& cand,
            std::vector<std::vector<int>>& out) {
    int need = k - static_cast<int>(clique.size());
    if (need == 0) {
        out.push_back(clique);
        return;
    }
    int m = static_cast<int>(cand.size());
    for (int t = 0; t + need <= m; ++t) {
        int u = cand[t];
        std::vector<int> next;
        next.reserve(m - t);
        for (int s = t + 1; s < m; ++s)
            if (g.edge(u, cand[s]))
                next.push_back(cand[s]);
        clique.push_back(u);
        extend(g, k, clique, next, out);
        clique.pop_back();
    }
}

std::vector<std::vector<int>> branch(const OrthoGraph& g, int k, int start) {
    std::vector<std::vector<int>> out;
    std::vector<int> cand;
    for (int j = start + 1; j < g.n; ++j)
        if (g.edge(start, j))
            cand.push_back(j);
    std::vector<int> clique{start};
    extend(g, k, clique, cand, out);
    return out;
}

} // namespace

std::vector<std::vector<int>> enumerate_cliques(const OrthoGraph& g, int k, Exec exec) {
    if (k <= 0)
        return {};
    if (k == 1) {
        std::vector<std::vector<int>> out;
        for (int i = 0; i < g.n; ++i)
            out.push_back({i});
        return out;
    }
    std::vector<std::vector<std::vector<int>>> per_start(g.n);
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int s = 0; s < g.n; ++s)
            per_start[s] = branch(g, k, s);
    } else {
        for (int s = 0; s < g.n; ++s)
            per_start[s] = branch(g, k, s);
    }
    std::vector<std::vector<int>> out;
    for (auto& part : per_start)
        for (auto& cl : part)
            out.push_back(std::move(cl));
    return out;
}

std::vector<std::vector<int>> enumerate_cliques_within(const OrthoGraph& g,
                                                       std::span<const int> vertices, int k,
                                                       Exec exec) {
    OrthoGraph sub;
    sub.n = static_cast<int>(vertices.size());
    sub.adj.assign(sub.n, std::vector<char>(sub.n, 0));
    for (int a = 0; a < sub.n; ++a)
        for (int b = 0; b < sub.n; ++b)
            sub.adj[a][b] = a != b && g.edge(vertices[a], vertices[b]);
    auto local = enumerate_cliques(sub, k, exec);
    for (auto& cl : local)
        for (int& v : cl)
            v = vertices[v];
    return local;
}

std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n)
        return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return out;
}

} // namespace ksadist
