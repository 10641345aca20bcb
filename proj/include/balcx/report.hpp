#pragma once

#include <cstdint>
#include <vector>

#include "balcx/json_io.hpp"

namespace balcx {

/// decide_balanceable and is_minimal for each listed characteristic, plus the
/// sublist where the complex balances.
Json char_sweep_report(const Complex& complex, const std::vector<std::uint64_t>& characteristics,
                       const SolverOptions& options = SolverOptions::from_environment());

/// enumerate_minimal_graphs cross-tabulated against classify_graph: per-tag
/// counts and the graphs whose pattern verdict disagrees.
Json catalogue_report(int max_vertices, FieldSpec field,
                      const EnumerationOptions& options = EnumerationOptions::from_environment());

}  // namespace balcx
