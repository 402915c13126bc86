#include "ksadist/solver.hpp"

#include <algorithm>
#include <bit>

#include "ksadist/errors.hpp"

namespace ksadist {

namespace {

constexpr std::int8_t kUnset = -1;

struct Search {
    const ColoringInstance& inst;
    std::vector<std::vector<int>> contexts_of; // vertex -> context indices
    std::vector<std::int8_t> value;

    explicit Search(const ColoringInstance& in) : inst(in), value(in.n, kUnset) {
        contexts_of.resize(in.n);
        for (std::size_t c = 0; c < in.contexts.size(); ++c)
            for (int v : in.contexts[c])
                contexts_of[v].push_back(static_cast<int>(c));
    }

    // Sets v := val and propagates; returns false on conflict. Every change
    // is recorded on the trail for backtracking.
    bool assign(int v, int val, std::vector<int>& trail) {
        if (value[v] != kUnset)
            return value[v] == val;
        value[v] = static_cast<std::int8_t>(val);
        trail.push_back(v);
        if (val == 1) {
            for (int u = 0; u < inst.n; ++u)
                if (u != v && inst.graph->edge(v, u) && !assign(u, 0, trail))
                    return false;
        }
        for (int c : contexts_of[v])
            if (!propagate_context(c, trail))
                return false;
        return true;
    }

    bool propagate_context(int c, std::vector<int>& trail) {
        int ones = 0, unset = 0, last_unset = -1;
        for (int u : inst.contexts[c]) {
            if (value[u] == 1)
                ++ones;
            else if (value[u] == kUnset) {
                ++unset;
                last_unset = u;
            }
        }
        if (ones > 1)
            return false;
        if (ones == 1)
            return true; // orthogonality propagation already zeroed the rest
        if (unset == 0)
            return false; // all zero, sum cannot reach 1
        if (unset == 1)
            return assign(last_unset, 1, trail);
        return true;
    }

    void undo(std::vector<int>& trail, std::size_t mark) {
        while (trail.size() > mark) {
            value[trail.back()] = kUnset;
            trail.pop_back();
        }
    }

    bool run(std::vector<int>& trail) {
        int v = -1;
        for (int i = 0; i < inst.n; ++i)
            if (value[i] == kUnset) {
                v = i;
                break;
            }
        if (v < 0)
            return true;
        for (int val : {1, 0}) {
            std::size_t mark = trail.size();
            if (assign(v, val, trail) && run(trail))
                return true;
            undo(trail, mark);
        }
        return false;
    }
};

void check_instance(const ColoringInstance& inst, const Forced& forced) {
    if (!inst.graph || inst.graph->n != inst.n)
        throw PreconditionError("coloring instance has no matching orthogonality graph");
    for (const auto& ctx : inst.contexts)
        for (int v : ctx)
            if (v < 0 || v >= inst.n)
                throw PreconditionError("context references vertex out of range");
    for (auto [v, val] : forced) {
        if (v < 0 || v >= inst.n)
            throw PreconditionError("forced vertex out of range");
        if (val != 0 && val != 1)
            throw PreconditionError("forced value must be 0 or 1");
    }
}

} // namespace

std::optional<std::vector<std::uint8_t>> solve_coloring(const ColoringInstance& inst,
                                                        const Forced& forced) {
    check_instance(inst, forced);
    Search search(inst);
    std::vector<int> trail;
    for (auto [v, val] : forced)
        if (!search.assign(v, val, trail))
            return std::nullopt;
    // contexts with no unset vertex and no one must be rejected even before
    // branching (e.g. an empty context list is fine, an all-forced-0 context
    // is not)
    for (std::size_t c = 0; c < inst.contexts.size(); ++c)
        if (!search.propagate_context(static_cast<int>(c), trail))
            return std::nullopt;
    if (!search.run(trail))
        return std::nullopt;
    std::vector<std::uint8_t> out(inst.n);
    for (int i = 0; i < inst.n; ++i)
        out[i] = static_cast<std::uint8_t>(search.value[i]);
    return out;
}

bool assignment_valid(const ColoringInstance& inst, const std::vector<std::uint8_t>& values,
                      const Forced& forced) {
    if (static_cast<int>(values.size()) != inst.n)
        return false;
    for (std::uint8_t v : values)
        if (v != 0 && v != 1)
            return false;
    for (auto [v, val] : forced)
        if (values[v] != val)
            return false;
    for (const auto& ctx : inst.contexts) {
        int ones = 0;
        for (int v : ctx)
            ones += values[v];
        if (ones != 1)
            return false;
    }
    for (int i = 0; i < inst.n; ++i)
        for (int j = i + 1; j < inst.n; ++j)
            if (inst.graph->edge(i, j) && values[i] == 1 && values[j] == 1)
                return false;
    return true;
}

bool exhaustive_colorable(const ColoringInstance& inst, const Forced& forced, Exec exec,
                          int max_bits) {
    check_instance(inst, forced);
    if (inst.n > max_bits)
        throw PreconditionError("exhaustive scan limited to " + std::to_string(max_bits) +
                                " vertices, got " + std::to_string(inst.n));
    const std::uint64_t total = 1ull << inst.n;
    std::uint64_t fixed_mask = 0, fixed_value = 0;
    for (auto [v, val] : forced) {
        std::uint64_t bit = 1ull << v;
        if ((fixed_mask & bit) && ((fixed_value >> v) & 1) != static_cast<std::uint64_t>(val))
            return false;
        fixed_mask |= bit;
        if (val)
            fixed_value |= bit;
    }
    std::vector<std::uint64_t> ctx_masks;
    ctx_masks.reserve(inst.contexts.size());
    for (const auto& ctx : inst.contexts) {
        std::uint64_t m = 0;
        for (int v : ctx)
            m |= 1ull << v;
        ctx_masks.push_back(m);
    }
    std::vector<std::uint64_t> nbr_masks(inst.n, 0);
    for (int i = 0; i < inst.n; ++i)
        for (int j = 0; j < inst.n; ++j)
            if (j != i && inst.graph->edge(i, j))
                nbr_masks[i] |= 1ull << j;

    auto ok = [&](std::uint64_t mask) {
        if ((mask & fixed_mask) != fixed_value)
            return false;
        for (std::uint64_t cm : ctx_masks)
            if (std::popcount(mask & cm) != 1)
                return false;
        std::uint64_t ones = mask;
        while (ones) {
            int v = std::countr_zero(ones);
            ones &= ones - 1;
            if (mask & nbr_masks[v])
                return false;
        }
        return true;
    };

    bool found = false;
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static) reduction(|| : found)
        for (std::int64_t mask = 0; mask < static_cast<std::int64_t>(total); ++mask) {
            if (!found)
                found = found || ok(static_cast<std::uint64_t>(mask));
        }
    } else {
        for (std::uint64_t mask = 0; mask < total && !found; ++mask)
            found = ok(mask);
    }
    return found;
}

} // namespace ksadist
