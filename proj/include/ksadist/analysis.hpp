#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ksadist/antidist.hpp"

namespace ksadist {

enum class Verdict { Contextual, NotContextual, Unknown };

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Contextual: return "CONTEXTUAL";
    case Verdict::NotContextual: return "NOT_CONTEXTUAL";
    default: return "UNKNOWN";
    }
}

/// Pool-relative contextuality verdict for a state set. CONTEXTUAL always
/// carries a re-checkable witness (a weakly antidistinguishing context or an
/// exact overlap-criterion evaluation); NOT_CONTEXTUAL carries the exact
/// certificate tag in `method`; UNKNOWN only when a finite pool search came
/// up empty, which can never refute existence.
template <typename S> struct ContextualityVerdict {
    using real = typename scalar_traits<S>::real;

    Verdict status = Verdict::Unknown;
    std::string method;
    std::optional<WaSearchResult<S>> wa_witness;
    std::optional<std::array<real, 3>> overlaps; // three-state path evaluation
    std::optional<bool> criterion_holds;
};

namespace detail {

template <typename S>
std::array<typename scalar_traits<S>::real, 3> pairwise_overlaps(
    std::span<const StateVector<S>> states) {
    return {overlap(states[0], states[1]), overlap(states[0], states[2]),
            overlap(states[1], states[2])};
}

} // namespace detail

/// Decision ladder:
///   |S| = 1 -> UNKNOWN (single-state contextuality left undecided)
///   |S| = 2 -> NOT_CONTEXTUAL (a non-orthogonal pair admits no weakly
///              antidistinguishing measurement)
///   |S| = 3 -> exact three-state overlap criterion, either way
///   |S| >= 4 -> closure-grown pool search for a weakly antidistinguishing
///              context; hit = CONTEXTUAL with witness, miss = UNKNOWN
/// Orthogonal pairs (and empty sets) are rejected.
template <typename S>
ContextualityVerdict<S> is_set_contextual(std::span<const StateVector<S>> states,
                                          const Pool<S>& pool, int closure_rounds = 1,
                                          Exec exec = Exec::Parallel) {
    if (states.empty())
        throw PreconditionError("empty state set");
    require_pairwise_nonorthogonal(states);
    ContextualityVerdict<S> verdict;
    if (states.size() == 1) {
        verdict.status = Verdict::Unknown;
        verdict.method = "single-state-undefined";
        return verdict;
    }
    if (states.size() == 2) {
        verdict.status = Verdict::NotContextual;
        verdict.method = "pairwise-nonorthogonal";
        return verdict;
    }
    if (states.size() == 3) {
        verdict.overlaps = detail::pairwise_overlaps(states);
        bool holds = triple_criterion((*verdict.overlaps)[0], (*verdict.overlaps)[1],
                                      (*verdict.overlaps)[2]);
        verdict.criterion_holds = holds;
        verdict.status = holds ? Verdict::Contextual : Verdict::NotContextual;
        verdict.method = "three-state-overlap-criterion";
        return verdict;
    }
    Pool<S> grown = pool;
    for (const auto& s : states)
        grown.insert(s);
    grown = closure(grown, closure_rounds, exec);
    if (auto hit = find_wa_pvm(states, grown, exec)) {
        verdict.status = Verdict::Contextual;
        verdict.method = "wa-context-search";
        verdict.wa_witness = std::move(hit);
        return verdict;
    }
    verdict.status = Verdict::Unknown;
    verdict.method = "pool-search-exhausted";
    return verdict;
}

enum class Maximality { Maximal, NotMaximal, Unknown };

inline const char* to_string(Maximality m) {
    switch (m) {
    case Maximality::Maximal: return "MAXIMAL";
    case Maximality::NotMaximal: return "NOT_MAXIMAL";
    default: return "UNKNOWN";
    }
}

/// Maximality additionally requires the set itself to be contextual; proper
/// subsets alone deciding it (the vacuous reading) is rejected, and the
/// method string records that convention.
template <typename S> struct MaximalityVerdict {
    Maximality status = Maximality::Unknown;
    std::string method;
    ContextualityVerdict<S> set_verdict;
    std::optional<std::vector<int>> contextual_subset; // indices into the input set
    ContextualityVerdict<S> subset_verdict;            // verdict for that subset
};

/// A set is maximal when it is contextual and no proper subset is. Checks
/// all 3-subsets exactly, then sizes 4..|S|-1 pool-relatively; size-2
/// subsets are never contextual. Subset checks fan out in parallel but
/// report the lexicographically first contextual subset. An undecidable
/// (pool-relative) subset makes the overall verdict UNKNOWN.
template <typename S>
MaximalityVerdict<S> is_maximally_contextual(std::span<const StateVector<S>> states,
                                             const Pool<S>& pool, int closure_rounds = 1,
                                             Exec exec = Exec::Parallel) {
    MaximalityVerdict<S> out;
    out.method = "proper-subset-exhaustion; the set itself must be contextual";
    out.set_verdict = is_set_contextual(states, pool, closure_rounds, exec);
    if (out.set_verdict.status == Verdict::NotContextual) {
        out.status = Maximality::NotMaximal;
        return out;
    }
    if (out.set_verdict.status == Verdict::Unknown) {
        out.status = Maximality::Unknown;
        return out;
    }
    const int n = static_cast<int>(states.size());
    bool any_unknown = false;
    for (int k = 3; k < n; ++k) {
        auto subs = combinations(n, k);
        std::vector<signed char> results(subs.size(), -2); // -2 skip, else Verdict int
        auto eval = [&](std::size_t t) {
            std::vector<StateVector<S>> sub;
            for (int i : subs[t])
                sub.push_back(states[i]);
            // proper subsets of a pairwise non-orthogonal set stay pairwise
            // non-orthogonal, so the ladder applies directly
            auto v = is_set_contextual<S>(sub, pool, closure_rounds, Exec::Serial);
            results[t] = static_cast<signed char>(v.status);
        };
        if (exec == Exec::Parallel && k >= 4) {
#pragma omp parallel for schedule(dynamic)
            for (std::int64_t t = 0; t < static_cast<std::int64_t>(subs.size()); ++t)
                eval(static_cast<std::size_t>(t));
        } else {
            for (std::size_t t = 0; t < subs.size(); ++t)
                eval(t);
        }
        for (std::size_t t = 0; t < subs.size(); ++t) {
            auto status = static_cast<Verdict>(results[t]);
            if (status == Verdict::Contextual) {
                out.status = Maximality::NotMaximal;
                out.contextual_subset = subs[t];
                std::vector<StateVector<S>> sub;
                for (int i : subs[t])
                    sub.push_back(states[i]);
                out.subset_verdict = is_set_contextual<S>(sub, pool, closure_rounds, exec);
                return out;
            }
            any_unknown = any_unknown || status == Verdict::Unknown;
        }
    }
    out.status = any_unknown ? Maximality::Unknown : Maximality::Maximal;
    return out;
}

/// Both directions of the equivalence between weak antidistinguishability
/// and pool-relative contextuality, each verified constructively.
template <typename S> struct EquivalenceReport {
    bool contextual_instance = false; // forcing the states breaks the generated scenario
    bool wa_context_found = false;    // a disjoint all-implied context exists

    // direction A: from a contextual instance, the all-zero context extracted
    // from the canonical assignment classifies at least WA
    std::optional<std::vector<int>> extracted_context;
    std::optional<AdLevel> extracted_level;
    bool instance_to_wa_ok = true;

    // direction B: from a found WA context, the scenario rebuilt out of
    // per-projector completions is uncolorable under forcing
    std::optional<int> rebuilt_vertex_count;
    bool wa_to_instance_ok = true;

    bool consistent = false; // the two premises agree
};

/// Runs the constructive correspondence between exclusion measurements and
/// contextual instances over the given pool.
template <typename S>
EquivalenceReport<S> wa_contextuality_roundtrip(std::span<const StateVector<S>> states,
                                                const Pool<S>& pool, Exec exec = Exec::Parallel) {
    require_pairwise_nonorthogonal(states);
    EquivalenceReport<S> rep;
    Scenario<S> sc = generate_scenario(states, pool, exec);
    std::vector<int> state_indices(states.size());
    for (std::size_t i = 0; i < states.size(); ++i)
        state_indices[i] = static_cast<int>(i);
    rep.contextual_instance = is_contextual_instance<S>(state_indices, sc);

    if (rep.contextual_instance) {
        // canonical assignment: states 1, implied projectors 0; some context
        // must sum to zero, i.e. avoid the states entirely
        std::optional<std::vector<int>> zero_ctx;
        for (const auto& ctx : sc.contexts) {
            bool disjoint = true;
            for (int v : ctx)
                disjoint = disjoint && v >= static_cast<int>(states.size());
            if (disjoint) {
                zero_ctx = ctx;
                break;
            }
        }
        rep.instance_to_wa_ok = zero_ctx.has_value();
        if (zero_ctx) {
            rep.extracted_context = *zero_ctx;
            auto cls = classify(context_pvm(sc, *zero_ctx), states);
            rep.extracted_level = cls.level;
            rep.instance_to_wa_ok = cls.weakly();
        }
    }

    auto hit = find_wa_pvm(states, pool, exec);
    rep.wa_context_found = hit.has_value();
    if (hit) {
        // fine-grain the measurement, then embed each projector in a full
        // context alongside a state it excludes
        Pool<S> verts(pool.dim());
        for (const auto& s : states)
            verts.push(s);
        int aux = 0;
        for (const auto& element : hit->pvm.elements) {
            auto grains = fine_grain<S>(element.spanning);
            for (const auto& pi : grains) {
                const StateVector<S>* excluded = nullptr;
                for (const auto& s : states)
                    if (orthogonal(pi, s)) {
                        excluded = &s;
                        break;
                    }
                if (!excluded)
                    continue;
                // orthogonal basis of the whole space containing rho and pi
                std::vector<StateVector<S>> seed{*excluded, pi};
                for (int k = 0; k < pool.dim(); ++k) {
                    std::vector<S> e(pool.dim(), S{});
                    e[k] = S{1};
                    seed.emplace_back("aux" + std::to_string(aux++), std::move(e));
                }
                for (const auto& basis_vec : fine_grain<S>(seed))
                    verts.insert(basis_vec);
            }
        }
        Scenario<S> rebuilt = enumerate_contexts(verts, exec);
        rep.rebuilt_vertex_count = static_cast<int>(rebuilt.vertices.size());
        Forced forced;
        for (std::size_t i = 0; i < states.size(); ++i)
            forced.emplace_back(static_cast<int>(i), 1);
        rep.wa_to_instance_ok = !ks_color(rebuilt, forced).has_value();
    }

    rep.consistent = rep.contextual_instance == rep.wa_context_found;
    return rep;
}

/// All pairwise non-orthogonal vertex subsets of size <= max_size for which
/// every other vertex is orthogonal to at least one member; ascending size,
/// lexicographic within each size. Candidate evaluation fans out over
/// OpenMP, collection order stays deterministic.
template <typename S>
std::vector<std::vector<int>> find_generating_subsets(const Scenario<S>& sc, int max_size,
                                                      Exec exec = Exec::Parallel) {
    const int n = static_cast<int>(sc.vertices.size());
    OrthoGraph g = build_orthogonality<S>(sc.vertices, exec);
    std::vector<std::vector<int>> out;
    for (int k = 1; k <= max_size && k <= n; ++k) {
        auto subs = combinations(n, k);
        std::vector<char> keep(subs.size(), 0);
        auto eval = [&](std::size_t t) {
            const auto& sub = subs[t];
            for (std::size_t a = 0; a < sub.size(); ++a)
                for (std::size_t b = a + 1; b < sub.size(); ++b)
                    if (g.edge(sub[a], sub[b]))
                        return;
            std::vector<char> in(n, 0);
            for (int v : sub)
                in[v] = 1;
            for (int v = 0; v < n; ++v) {
                if (in[v])
                    continue;
                bool covered = false;
                for (int s : sub)
                    covered = covered || g.edge(v, s);
                if (!covered)
                    return;
            }
            keep[t] = 1;
        };
        if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 64)
            for (std::int64_t t = 0; t < static_cast<std::int64_t>(subs.size()); ++t)
                eval(static_cast<std::size_t>(t));
        } else {
            for (std::size_t t = 0; t < subs.size(); ++t)
                eval(t);
        }
        for (std::size_t t = 0; t < subs.size(); ++t)
            if (keep[t])
                out.push_back(std::move(subs[t]));
    }
    return out;
}

} // namespace ksadist
