#include "tutte/graph.hpp"

#include <numeric>

namespace tutte {

WeightedMultigraph::WeightedMultigraph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw Error("negative vertex count");
}

int WeightedMultigraph::add_vertex() {
  if (rotation_) rotation_->around.emplace_back();
  return vertex_count_++;
}

int WeightedMultigraph::add_edge(int u, int v, Rational weight) {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) {
    throw Error("edge endpoint out of range");
  }
  rotation_.reset();
  edges_.push_back({u, v});
  weights_.push_back(std::move(weight));
  return edge_count() - 1;
}

void WeightedMultigraph::set_all_weights(const Rational& w) {
  for (auto& x : weights_) x = w;
}

int WeightedMultigraph::degree(int v) const {
  int d = 0;
  for (const Edge& e : edges_) d += (e.u == v) + (e.v == v);
  return d;
}

std::vector<int> WeightedMultigraph::degrees() const {
  std::vector<int> d(vertex_count_, 0);
  for (const Edge& e : edges_) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

std::vector<std::vector<int>> WeightedMultigraph::incident_darts() const {
  std::vector<std::vector<int>> inc(vertex_count_);
  for (int e = 0; e < edge_count(); ++e) {
    inc[edges_[e].u].push_back(dart_of(e, 0));
    inc[edges_[e].v].push_back(dart_of(e, 1));
  }
  return inc;
}

void WeightedMultigraph::set_rotation(Rotation rot) {
  if (static_cast<int>(rot.around.size()) != vertex_count_) {
    throw Error("rotation does not cover every vertex");
  }
  std::vector<int> seen(2 * edges_.size(), 0);
  for (int v = 0; v < vertex_count_; ++v) {
    for (int d : rot.around[v]) {
      if (d < 0 || d >= static_cast<int>(seen.size())) throw Error("rotation names an unknown edge end");
      if (dart_tail(d) != v) throw Error("rotation lists an edge end at the wrong vertex");
      if (seen[d]++) throw Error("rotation lists an edge end twice");
    }
  }
  for (int s : seen) {
    if (s != 1) throw Error("rotation misses an edge end");
  }
  rotation_ = std::move(rot);
}

std::vector<int> WeightedMultigraph::component_labels(int* count) const {
  UnionFind uf(vertex_count_);
  for (const Edge& e : edges_) uf.unite(e.u, e.v);
  std::vector<int> label(vertex_count_, -1);
  std::vector<int> root_label(vertex_count_, -1);
  int next = 0;
  for (int v = 0; v < vertex_count_; ++v) {
    int r = uf.find(v);
    if (root_label[r] < 0) root_label[r] = next++;
    label[v] = root_label[r];
  }
  if (count) *count = next;
  return label;
}

int WeightedMultigraph::component_count() const {
  int c = 0;
  component_labels(&c);
  return c;
}

bool WeightedMultigraph::has_loops() const {
  for (const Edge& e : edges_) {
    if (e.is_loop()) return true;
  }
  return false;
}

void WeightedMultigraph::append(const WeightedMultigraph& other) {
  const int offset = vertex_count_;
  vertex_count_ += other.vertex_count_;
  rotation_.reset();
  for (int e = 0; e < other.edge_count(); ++e) {
    edges_.push_back({other.edges_[e].u + offset, other.edges_[e].v + offset});
    weights_.push_back(other.weights_[e]);
  }
}

bool isomorphic_with_edge_ids(const WeightedMultigraph& a, const WeightedMultigraph& b,
                              bool compare_weights) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> fwd(a.vertex_count(), -1), back(b.vertex_count(), -1);
  auto bind = [&](int x, int y) {
    if (fwd[x] < 0 && back[y] < 0) {
      fwd[x] = y;
      back[y] = x;
      return true;
    }
    return fwd[x] == y && back[y] == x;
  };
  for (int e = 0; e < a.edge_count(); ++e) {
    if (compare_weights && a.weight(e) != b.weight(e)) return false;
    const Edge& ea = a.edge(e);
    const Edge& eb = b.edge(e);
    // An edge may be stored in either orientation; try the stored one first.
    bool straight_ok = (fwd[ea.u] < 0 || fwd[ea.u] == eb.u) && (fwd[ea.v] < 0 || fwd[ea.v] == eb.v) &&
                       (back[eb.u] < 0 || back[eb.u] == ea.u) && (back[eb.v] < 0 || back[eb.v] == ea.v);
    if (straight_ok && bind(ea.u, eb.u) && bind(ea.v, eb.v)) continue;
    if (!bind(ea.u, eb.v) || !bind(ea.v, eb.u)) return false;
  }
  // isolated vertices pair up freely
  return true;
}

UnionFind::UnionFind(int n) : parent_(n), rank_(n, 0), sets_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int UnionFind::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  --sets_;
  return true;
}

void UnionFind::reset() {
  std::iota(parent_.begin(), parent_.end(), 0);
  std::fill(rank_.begin(), rank_.end(), 0);
  sets_ = static_cast<int>(parent_.size());
}

}  // namespace tutte
