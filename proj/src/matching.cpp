#include "ksadist/matching.hpp"

namespace ksadist {

namespace {

bool augment(const std::vector<std::vector<char>>& edges, int u, std::vector<char>& visited,
             std::vector<int>& match_r) {
    int nr = match_r.empty() ? 0 : static_cast<int>(match_r.size());
    for (int v = 0; v < nr; ++v) {
        if (!edges[u][v] || visited[v])
            continue;
        visited[v] = 1;
        if (match_r[v] < 0 || augment(edges, match_r[v], visited, match_r)) {
            match_r[v] = u;
            return true;
        }
    }
    return false;
}

} // namespace

std::vector<int> max_bipartite_matching(const std::vector<std::vector<char>>& edges) {
    int nl = static_cast<int>(edges.size());
    int nr = nl == 0 ? 0 : static_cast<int>(edges[0].size());
    std::vector<int> match_r(nr, -1);
    for (int u = 0; u < nl; ++u) {
        std::vector<char> visited(nr, 0);
        augment(edges, u, visited, match_r);
    }
    std::vector<int> match_l(nl, -1);
    for (int v = 0; v < nr; ++v)
        if (match_r[v] >= 0)
            match_l[match_r[v]] = v;
    return match_l;
}

bool has_perfect_matching(const std::vector<std::vector<char>>& edges) {
    int nl = static_cast<int>(edges.size());
    int nr = nl == 0 ? 0 : static_cast<int>(edges[0].size());
    if (nl != nr)
        return false;
    auto match_l = max_bipartite_matching(edges);
    for (int v : match_l)
        if (v < 0)
            return false;
    return true;
}

} // namespace ksadist
