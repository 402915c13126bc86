#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ksadist/coloring.hpp"
#include "ksadist/matching.hpp"
#include "ksadist/scenario.hpp"

namespace ksadist {

/// One measurement outcome: mutually orthogonal vectors spanning its
/// projector's subspace (rank = vector count).
template <typename S> struct PvmElement {
    std::vector<StateVector<S>> spanning;
    int rank() const { return static_cast<int>(spanning.size()); }
};

/// Projection-valued measure: elements whose spanning vectors are pairwise
/// orthogonal across the whole measure and total exactly dim (completeness).
template <typename S> struct Pvm {
    int dim = 0;
    std::vector<PvmElement<S>> elements;

    int outcome_count() const { return static_cast<int>(elements.size()); }
    int total_rank() const {
        int r = 0;
        for (const auto& e : elements)
            r += e.rank();
        return r;
    }
};

/// Rank-1 PVM from a context of a scenario.
template <typename S>
Pvm<S> context_pvm(const Scenario<S>& sc, std::span<const int> context) {
    Pvm<S> pvm;
    pvm.dim = sc.dim;
    for (int v : context)
        pvm.elements.push_back({{sc.vertices[v]}});
    return pvm;
}

template <typename S> bool validate_pvm(const Pvm<S>& pvm) {
    std::vector<const StateVector<S>*> all;
    for (const auto& e : pvm.elements)
        for (const auto& v : e.spanning) {
            if (v.dim() != pvm.dim)
                return false;
            all.push_back(&v);
        }
    if (static_cast<int>(all.size()) != pvm.dim)
        return false;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (!orthogonal(*all[i], *all[j]))
                return false;
    return true;
}

/// Tr(pi rho) = 0 iff rho is orthogonal to every vector spanning pi.
template <typename S>
bool outcome_excludes(const PvmElement<S>& element, const StateVector<S>& state) {
    for (const auto& v : element.spanning)
        if (!orthogonal(v, state))
            return false;
    return true;
}

/// Per outcome, which states it excludes; per state, which outcomes exclude
/// it and nothing else.
struct ExclusionReport {
    std::vector<std::vector<int>> excluded_by_outcome; // outcome -> state indices
    std::vector<std::vector<int>> exclusive_outcomes;  // state -> outcome indices
};

template <typename S>
ExclusionReport exclusion_report(const Pvm<S>& pvm, std::span<const StateVector<S>> states) {
    if (!validate_pvm(pvm))
        throw PreconditionError("invalid PVM: elements must be pairwise orthogonal with total rank dim");
    for (const auto& s : states)
        if (s.dim() != pvm.dim)
            throw PreconditionError("state '" + s.id + "' dimension mismatch with PVM");
    ExclusionReport rep;
    rep.excluded_by_outcome.resize(pvm.elements.size());
    rep.exclusive_outcomes.resize(states.size());
    for (std::size_t j = 0; j < pvm.elements.size(); ++j)
        for (std::size_t i = 0; i < states.size(); ++i)
            if (outcome_excludes(pvm.elements[j], states[i]))
                rep.excluded_by_outcome[j].push_back(static_cast<int>(i));
    for (std::size_t j = 0; j < pvm.elements.size(); ++j)
        if (rep.excluded_by_outcome[j].size() == 1)
            rep.exclusive_outcomes[rep.excluded_by_outcome[j][0]].push_back(static_cast<int>(j));
    return rep;
}

enum class AdLevel { None, WA, SA };

inline const char* to_string(AdLevel level) {
    switch (level) {
    case AdLevel::WA: return "WA";
    case AdLevel::SA: return "SA";
    default: return "NONE";
    }
}

/// Classification of a PVM against a state set. `a_matchable` records
/// whether outcomes can be relabeled one-to-one so outcome i excludes state
/// i (requires equal cardinalities; decided by bipartite matching).
struct AdClass {
    AdLevel level = AdLevel::None;
    bool a_matchable = false;
    std::vector<int> matching; // outcome -> state index, -1 if a_matchable is false
    ExclusionReport report;

    bool weakly() const { return level != AdLevel::None; }
    bool strongly() const { return level == AdLevel::SA; }
};

/// WA: every outcome excludes at least one state. SA: additionally every
/// state has an outcome excluding it exclusively.
template <typename S>
AdClass classify(const Pvm<S>& pvm, std::span<const StateVector<S>> states) {
    AdClass cls;
    cls.report = exclusion_report(pvm, states);
    bool wa = !pvm.elements.empty();
    for (const auto& excl : cls.report.excluded_by_outcome)
        wa = wa && !excl.empty();
    bool sa = wa && !states.empty();
    for (const auto& outs : cls.report.exclusive_outcomes)
        sa = sa && !outs.empty();
    cls.level = sa ? AdLevel::SA : wa ? AdLevel::WA : AdLevel::None;
    cls.matching.assign(pvm.elements.size(), -1);
    if (pvm.outcome_count() == static_cast<int>(states.size()) && !states.empty()) {
        std::vector<std::vector<char>> edges(pvm.elements.size(),
                                             std::vector<char>(states.size(), 0));
        for (std::size_t j = 0; j < pvm.elements.size(); ++j)
            for (int i : cls.report.excluded_by_outcome[j])
                edges[j][i] = 1;
        auto match = max_bipartite_matching(edges);
        bool perfect = true;
        for (int v : match)
            perfect = perfect && v >= 0;
        if (perfect) {
            cls.a_matchable = true;
            cls.matching = std::move(match);
        }
    }
    return cls;
}

/// Merges the outcomes of a strongly antidistinguishing PVM into one element
/// per state: outcome j joins the group of the smallest state index it
/// excludes. The result is a valid PVM with exactly |states| outcomes and
/// Tr(gamma_i rho_i) = 0 for every i.
template <typename S>
Pvm<S> coarse_grain_sa_to_a(const Pvm<S>& pvm, std::span<const StateVector<S>> states) {
    AdClass cls = classify(pvm, states);
    if (!cls.strongly())
        throw PreconditionError("coarse graining requires a strongly antidistinguishing PVM");
    Pvm<S> out;
    out.dim = pvm.dim;
    out.elements.resize(states.size());
    for (std::size_t j = 0; j < pvm.elements.size(); ++j) {
        int target = cls.report.excluded_by_outcome[j][0]; // smallest excluded state index
        for (const auto& v : pvm.elements[j].spanning)
            out.elements[target].spanning.push_back(v);
    }
    return out;
}

/// A weakly antidistinguishing context found inside the scenario the states
/// generate over a pool.
template <typename S> struct WaSearchResult {
    Scenario<S> scenario;
    std::vector<int> context; // vertex indices into scenario
    Pvm<S> pvm;
};

/// Searches the generated scenario for a context disjoint from the states
/// whose members are all implied (orthogonal to some state); returns the
/// first such context as a rank-1 PVM. Any hit classifies at least WA.
template <typename S>
std::optional<WaSearchResult<S>> find_wa_pvm(std::span<const StateVector<S>> states,
                                             const Pool<S>& pool, Exec exec = Exec::Parallel) {
    Scenario<S> sc = generate_scenario(states, pool, exec);
    std::vector<char> is_state(sc.vertices.size(), 0);
    for (std::size_t k = 0; k < states.size(); ++k)
        is_state[k] = 1; // generated scenarios list the states first
    std::vector<char> implied(sc.vertices.size(), 0);
    for (std::size_t v = 0; v < sc.vertices.size(); ++v)
        for (const auto& s : states)
            if (!same_ray(sc.vertices[v], s) && orthogonal(sc.vertices[v], s))
                implied[v] = 1;
    for (const auto& ctx : sc.contexts) {
        bool usable = true;
        for (int v : ctx)
            usable = usable && !is_state[v] && implied[v];
        if (usable) {
            WaSearchResult<S> res;
            res.context = ctx;
            res.pvm = context_pvm(sc, ctx);
            res.scenario = std::move(sc);
            return res;
        }
    }
    return std::nullopt;
}

/// Three-state antidistinguishability criterion on pairwise overlaps:
/// d1 + d2 + d3 < 1  and  (d1 + d2 + d3 - 1)^2 >= 4 d1 d2 d3, exactly.
bool triple_criterion(const Rational& d1, const Rational& d2, const Rational& d3);
/// Float-backend variant with plain floating comparisons.
bool triple_criterion(double d1, double d2, double d3);

} // namespace ksadist
