#pragma once

#include "tutte/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tutte {

struct Edge {
  int u = 0;
  int v = 0;
  bool is_loop() const { return u == v; }
  int other(int x) const { return x == u ? v : u; }
};

/// A dart is one end of an edge: 2*e is the end at edge(e).u, 2*e+1 the end at edge(e).v.
inline int dart_of(int edge_id, int side) { return 2 * edge_id + side; }
inline int dart_edge(int dart) { return dart >> 1; }
inline int dart_reverse(int dart) { return dart ^ 1; }

/// Per-vertex cyclic order of incident darts.
struct Rotation {
  std::vector<std::vector<int>> around;
};

/// Undirected multigraph with loops, parallel edges and exact rational edge weights.
/// Edge ids are dense: 0..edge_count()-1.
class WeightedMultigraph {
 public:
  WeightedMultigraph() = default;
  explicit WeightedMultigraph(int vertex_count);

  int add_vertex();
  int add_edge(int u, int v, Rational weight = Rational(1));

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(int id) const { return edges_.at(id); }
  std::span<const Edge> edges() const { return edges_; }
  const Rational& weight(int id) const { return weights_.at(id); }
  std::span<const Rational> weights() const { return weights_; }
  void set_weight(int id, Rational w) { weights_.at(id) = std::move(w); }
  void set_all_weights(const Rational& w);

  /// Degree with loops counted twice.
  int degree(int v) const;
  std::vector<int> degrees() const;
  std::vector<std::vector<int>> incident_darts() const;

  const std::optional<Rotation>& rotation() const { return rotation_; }
  /// Validates that every incident dart appears exactly once around its vertex.
  void set_rotation(Rotation rot);
  void clear_rotation() { rotation_.reset(); }

  int dart_tail(int dart) const {
    const Edge& e = edges_[dart_edge(dart)];
    return (dart & 1) ? e.v : e.u;
  }

  /// Connected components: label per vertex and the number of components.
  std::vector<int> component_labels(int* count = nullptr) const;
  int component_count() const;

  bool has_loops() const;

  /// Disjoint union; the other graph's vertices and edges are appended.
  void append(const WeightedMultigraph& other);

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<Rational> weights_;
  std::optional<Rotation> rotation_;
};

/// True when both graphs have identical edge ids, weights and endpoints up to a
/// vertex bijection that the shared edge ids induce.
bool isomorphic_with_edge_ids(const WeightedMultigraph& a, const WeightedMultigraph& b,
                              bool compare_weights = true);

/// Disjoint-set forest over 0..n-1.
class UnionFind {
 public:
  explicit UnionFind(int n);
  int find(int x);
  bool unite(int a, int b);
  int sets() const { return sets_; }
  void reset();

 private:
  std::vector<int> parent_;
  std::vector<std::uint8_t> rank_;
  int sets_;
};

}  // namespace tutte
