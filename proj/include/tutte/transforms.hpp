#pragma once

#include "tutte/graph.hpp"

#include <vector>

namespace tutte {

struct CubicizeResult {
  WeightedMultigraph graph;  // 3-regular, embedded
  int mis_offset = 0;        // MIS(graph) = MIS(input) + mis_offset
  int pad_copies = 0;
  std::vector<int> edge_origin;  // input edge id, or -1 for padding edges
};

/// Pads every vertex of degree d < 3 with 3-d copies of the six-vertex pad
/// {r,v,a,b,c,d; rv va vb ac ad bc bd cd}, identifying r with the deficient vertex.
/// Each copy adds five vertices and raises the maximum independent set by 2.
CubicizeResult cubicize(const WeightedMultigraph& g);

/// Replaces each edge e=(u,v) of a cubic planar graph by the path
/// u - (n0+2e) - (n0+2e+1) - v with edge ids 3e, 3e+1, 3e+2.
/// The result carries a rotation spliced from the input's embedding.
WeightedMultigraph three_stretch(const WeightedMultigraph& h);

bool is_cubic(const WeightedMultigraph& g);

struct MisInstance {
  WeightedMultigraph graph;
  int bound_K = 1;
};

/// Validates 1 <= K <= ceil(5n/8).
MisInstance make_mis_instance(WeightedMultigraph stretched, int K);

}  // namespace tutte
