#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "ksadist/scenario.hpp"
#include "ksadist/solver.hpp"

namespace ksadist {

/// Vertex values; -1 marks "unset" in partial assignments.
struct Assignment {
    std::vector<std::int8_t> values;

    bool total() const {
        for (auto v : values)
            if (v != 0 && v != 1)
                return false;
        return true;
    }
};

/// Noncontextual value assignment search: exactly one 1 per context plus
/// zero-products over every orthogonal vertex pair (also pairs that share no
/// context; on scenarios whose orthogonal pairs all lie in some context the
/// two constraint sets coincide). Returns the first witness under ascending
/// vertex order with value 1 tried before 0, or nullopt when none exists.
/// Contradictory forcing is UNSAT, not an error.
template <typename S>
std::optional<Assignment> ks_color(const Scenario<S>& sc, const Forced& forced = {}) {
    OrthoGraph g = build_orthogonality<S>(sc.vertices);
    ColoringInstance inst{static_cast<int>(sc.vertices.size()), sc.contexts, &g};
    auto res = solve_coloring(inst, forced);
    if (!res)
        return std::nullopt;
    Assignment a;
    a.values.assign(res->begin(), res->end());
    return a;
}

/// Re-validates a witness independently of the solver.
template <typename S>
bool assignment_satisfies(const Scenario<S>& sc, const Assignment& a, const Forced& forced = {}) {
    OrthoGraph g = build_orthogonality<S>(sc.vertices);
    ColoringInstance inst{static_cast<int>(sc.vertices.size()), sc.contexts, &g};
    std::vector<std::uint8_t> vals;
    for (auto v : a.values) {
        if (v != 0 && v != 1)
            return false;
        vals.push_back(static_cast<std::uint8_t>(v));
    }
    return assignment_valid(inst, vals, forced);
}

template <typename S> bool is_scenario_contextual(const Scenario<S>& sc) {
    return !ks_color(sc).has_value();
}

/// Whether forcing every state of the generating set to 1 makes the scenario
/// uncolorable. Requires the scenario to be generated by those states and the
/// states to be pairwise non-orthogonal.
template <typename S>
bool is_contextual_instance(std::span<const int> state_indices, const Scenario<S>& sc) {
    std::vector<StateVector<S>> states;
    for (int idx : state_indices) {
        if (idx < 0 || idx >= static_cast<int>(sc.vertices.size()))
            throw PreconditionError("state index out of range");
        states.push_back(sc.vertices[idx]);
    }
    require_pairwise_nonorthogonal<S>(states);
    if (!is_generated_by(sc, state_indices))
        throw PreconditionError("scenario is not generated by the given states");
    Forced forced;
    for (int idx : state_indices)
        forced.emplace_back(idx, 1);
    return !ks_color(sc, forced).has_value();
}

} // namespace ksadist
