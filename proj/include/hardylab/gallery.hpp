#pragma once

#include <vector>

#include "hardylab/scenario.hpp"

namespace hardylab {

/// Curated scenario bundle: the worked positive and negative instances for
/// every check, a Blaschke isometry case with its analytic tail value, and a
/// unitary-equivalence pair plus an inconclusive-negative pair.  Every entry
/// runs to a consistent verdict (exit 0).
std::vector<json> gallery();

}  // namespace hardylab
