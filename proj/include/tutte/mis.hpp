#pragma once

#include "tutte/graph.hpp"

#include <cstdint>
#include <vector>

namespace tutte {

struct MisReport {
  int max_size = 0;
  std::uint64_t count_at_max = 0;
  std::vector<std::uint64_t> count_by_size;  // index = set size
};

/// Exact independent-set census. Vertices carrying a loop are never independent.
MisReport mis_oracle(const WeightedMultigraph& g, int vertex_cap = 32);

}  // namespace tutte
