#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ksadist/exec.hpp"
#include "ksadist/graph.hpp"

namespace ksadist {

/// A value-assignment search problem: vertices 0..n-1, contexts that must
/// each contain exactly one 1, and an orthogonality graph whose adjacent
/// pairs may not both be 1 (enforced for every orthogonal pair, whether or
/// not it shares a context).
struct ColoringInstance {
    int n = 0;
    std::vector<std::vector<int>> contexts;
    const OrthoGraph* graph = nullptr; // must outlive the instance
};

using Forced = std::vector<std::pair<int, int>>; // (vertex, value in {0,1})

/// Backtracking with unit propagation. Deterministic: branches on the lowest
/// unassigned vertex, value 1 before 0, and returns the first total witness.
/// Contradictory forcing yields nullopt (UNSAT), not an error.
std::optional<std::vector<std::uint8_t>> solve_coloring(const ColoringInstance& inst,
                                                        const Forced& forced = {});

/// Independent witness check: exactly one 1 per context, no orthogonal pair
/// both 1, forcing respected.
bool assignment_valid(const ColoringInstance& inst, const std::vector<std::uint8_t>& values,
                      const Forced& forced = {});

/// Reference decision procedure scanning all 2^n assignments; usable up to
/// max_bits vertices. The parallel variant splits the mask range over OpenMP
/// threads (pure reduction, verdict identical to the serial scan).
bool exhaustive_colorable(const ColoringInstance& inst, const Forced& forced = {},
                          Exec exec = Exec::Serial, int max_bits = 25);

} // namespace ksadist
