#pragma once

#include "tutte/graph.hpp"

#include <optional>
#include <vector>

namespace tutte {

/// Planar rotation system for g, or nullopt when g is not planar.
std::optional<Rotation> planarity_embed(const WeightedMultigraph& g);

/// Copy of g carrying a planar rotation; throws when g is not planar.
WeightedMultigraph embedded(const WeightedMultigraph& g);

struct FaceStructure {
  std::vector<int> face_of_dart;
  std::vector<std::vector<int>> faces;  // darts in boundary-walk order
};

/// Orbits of the face permutation: dart d is followed by the dart after reverse(d)
/// around the head of d.
FaceStructure trace_faces(const WeightedMultigraph& g, const Rotation& rot);

/// V - E + F = 2 for every connected component (an edgeless component has one face).
bool euler_check(const WeightedMultigraph& g, const Rotation& rot);

/// Face-vertex dual of a connected plane graph. Dual edge e crosses primal edge e
/// and keeps its weight; the dual carries its own rotation system.
WeightedMultigraph planar_dual(const WeightedMultigraph& g);

}  // namespace tutte
