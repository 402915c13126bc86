#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "ksadist/analysis.hpp"
#include "ksadist/antidist.hpp"
#include "ksadist/coloring.hpp"
#include "ksadist/scenario.hpp"

namespace ksadist {

using Json = nlohmann::json;

using AnyPool = std::variant<Pool<Cyclotomic>, Pool<FloatComplex>>;
using AnyScenario = std::variant<Scenario<Cyclotomic>, Scenario<FloatComplex>>;

/// Scenario/pool file:
///   {"dimension": d, "field": "cyclotomic3"|"float",
///    "vertices": [{"id": str, "vector": [scalar-strings]}],
///    "contexts": [[ids]]}            // optional; recomputed when absent
/// Vertices equal up to scale are rejected with the offending ids.
AnyScenario parse_scenario(const Json& j);
AnyPool parse_pool(const Json& j);
std::string field_of(const AnyPool& pool);
std::string field_of(const AnyScenario& sc);

/// PVM file: {"dimension": d, "field": ..., "elements": [[vector-ref]]}
/// where vector-ref is a pool id, a ["scalar", ...] array, or
/// {"id": str, "vector": [...]}.
template <typename S> Pvm<S> parse_pvm(const Json& j, const Pool<S>& pool);

template <typename S> Json to_json(const Pool<S>& pool);
template <typename S> Json to_json(const Scenario<S>& sc);
template <typename S> Json to_json(const Pvm<S>& pvm);

/// Witness: {"status": "sat"|"unsat", "assignment": {id: 0|1}}
template <typename S> Json witness_json(const Scenario<S>& sc, const std::optional<Assignment>& a);

template <typename S>
Json classification_json(const AdClass& cls, const Pvm<S>& pvm,
                         std::span<const StateVector<S>> states);

/// Verdict: {"status", "method", "witness": {...}}
template <typename S> Json verdict_json(const ContextualityVerdict<S>& v);
template <typename S>
Json maximality_json(const MaximalityVerdict<S>& v, std::span<const StateVector<S>> states);
template <typename S> Json roundtrip_json(const EquivalenceReport<S>& rep);

} // namespace ksadist
