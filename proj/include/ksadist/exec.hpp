#pragma once

namespace ksadist {

/// Execution policy for the data-parallel kernels. Serial variants are the
/// reference implementations; Parallel uses OpenMP when available. Both
/// produce identical results (deterministic lexicographic merges).
enum class Exec { Serial, Parallel };

/// Worker cap for Exec::Parallel (0 = hardware default).
void set_max_threads(int n);
int max_threads();

} // namespace ksadist
