#pragma once

#include <string>
#include <vector>

#include "ksadist/scenario.hpp"

namespace ksadist {

/// Bipartite DOT rendering of a hypergraph: one ellipse node per vertex
/// (labeled by id), one box node per context, one edge per incidence.
/// Node and edge order is deterministic.
std::string hypergraph_dot(const std::vector<std::string>& vertex_ids,
                           const std::vector<std::vector<int>>& contexts);

template <typename S> std::string export_dot(const Scenario<S>& sc) {
    std::vector<std::string> ids;
    ids.reserve(sc.vertices.size());
    for (const auto& v : sc.vertices)
        ids.push_back(v.id);
    return hypergraph_dot(ids, sc.contexts);
}

} // namespace ksadist
