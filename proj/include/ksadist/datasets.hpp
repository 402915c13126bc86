#pragma once

#include <string>
#include <vector>

#include "ksadist/scenario.hpp"

namespace ksadist {

/// A canonical vector family from the quantum contextuality literature,
/// with machine-checked structural facts. Annotations are starting points
/// for analysis, re-derived by the test suite rather than trusted.
struct Dataset {
    std::string name;
    std::string title;
    int dim = 0;
    Pool<Cyclotomic> pool{1};

    /// For measurement-vs-state-set datasets: ids of the states under test
    /// (empty when the whole pool is the object of interest).
    std::vector<std::string> state_ids;
    /// Ids forming a known antidistinguishing measurement, one id per rank-1
    /// outcome (empty when none is annotated).
    std::vector<std::string> known_pvm_ids;
    /// Known pairwise non-orthogonal sets whose forcing breaks the scenario.
    std::vector<std::vector<std::string>> known_contextual_sets;

    int expected_contexts = 0;
    int expected_vertex_degree = 0; // contexts per vertex; -1 when irregular
    bool expected_colorable = false;
};

/// Names accepted by load_dataset, in display order.
std::vector<std::string> dataset_names();

/// Loads one of: "cabello18", "lisonek21", "yuoh13", "pbr". Validates the
/// advertised structure (context count, per-vertex context degree,
/// colorability) on load and throws if the data does not reproduce it.
Dataset load_dataset(const std::string& name);

} // namespace ksadist
