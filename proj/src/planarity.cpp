#include "tutte/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

#include <map>

namespace tutte {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

}  // namespace

std::optional<Rotation> planarity_embed(const WeightedMultigraph& g) {
  const int n = g.vertex_count();
  // Simple skeleton: one representative per adjacent pair; the rest are bundled.
  std::map<std::pair<int, int>, std::vector<int>> bundles;
  std::vector<std::vector<int>> loops(n);
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) {
      loops[ed.u].push_back(e);
    } else {
      bundles[{std::min(ed.u, ed.v), std::max(ed.u, ed.v)}].push_back(e);
    }
  }

  BoostGraph bg(n);
  std::vector<int> rep_of_index;
  for (const auto& [key, ids] : bundles) {
    boost::add_edge(key.first, key.second, static_cast<int>(rep_of_index.size()), bg);
    rep_of_index.push_back(ids.front());
  }

  std::vector<std::vector<BoostEdge>> emb(n);
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(emb.begin(), boost::get(boost::vertex_index, bg)));
  if (!planar) return std::nullopt;

  auto edge_index = boost::get(boost::edge_index, bg);
  Rotation rot;
  rot.around.assign(n, {});
  for (int v = 0; v < n; ++v) {
    auto& out = rot.around[v];
    for (const BoostEdge& be : emb[v]) {
      const int rep = rep_of_index[boost::get(edge_index, be)];
      const Edge& r = g.edge(rep);
      const auto& ids = bundles.at({std::min(r.u, r.v), std::max(r.u, r.v)});
      // nested: ascending around the smaller endpoint, descending around the larger
      const bool low_end = v == std::min(r.u, r.v);
      for (std::size_t k = 0; k < ids.size(); ++k) {
        int e = low_end ? ids[k] : ids[ids.size() - 1 - k];
        out.push_back(dart_of(e, g.edge(e).u == v ? 0 : 1));
      }
    }
    for (int e : loops[v]) {
      out.push_back(dart_of(e, 0));
      out.push_back(dart_of(e, 1));
    }
  }
  return rot;
}

WeightedMultigraph embedded(const WeightedMultigraph& g) {
  auto rot = planarity_embed(g);
  if (!rot) throw Error("graph is not planar");
  WeightedMultigraph out = g;
  out.set_rotation(std::move(*rot));
  return out;
}

FaceStructure trace_faces(const WeightedMultigraph& g, const Rotation& rot) {
  const int darts = 2 * g.edge_count();
  std::vector<int> next_around(darts, -1);
  for (const auto& cyc : rot.around) {
    for (std::size_t i = 0; i < cyc.size(); ++i) next_around[cyc[i]] = cyc[(i + 1) % cyc.size()];
  }
  FaceStructure fs;
  fs.face_of_dart.assign(darts, -1);
  for (int start = 0; start < darts; ++start) {
    if (fs.face_of_dart[start] >= 0) continue;
    const int id = static_cast<int>(fs.faces.size());
    fs.faces.emplace_back();
    int d = start;
    do {
      fs.face_of_dart[d] = id;
      fs.faces.back().push_back(d);
      d = next_around[dart_reverse(d)];
    } while (d != start);
  }
  return fs;
}

bool euler_check(const WeightedMultigraph& g, const Rotation& rot) {
  int comps = 0;
  const auto label = g.component_labels(&comps);
  std::vector<long> v(comps, 0), e(comps, 0), f(comps, 0);
  for (int x = 0; x < g.vertex_count(); ++x) ++v[label[x]];
  for (const Edge& ed : g.edges()) ++e[label[ed.u]];
  const FaceStructure fs = trace_faces(g, rot);
  for (const auto& face : fs.faces) ++f[label[g.dart_tail(face.front())]];
  for (int c = 0; c < comps; ++c) {
    if (e[c] == 0) f[c] = 1;
    if (v[c] - e[c] + f[c] != 2) return false;
  }
  return true;
}

WeightedMultigraph planar_dual(const WeightedMultigraph& g) {
  if (g.component_count() != 1) throw Error("planar_dual: graph must be connected");
  Rotation rot;
  if (g.rotation()) {
    rot = *g.rotation();
  } else {
    auto r = planarity_embed(g);
    if (!r) throw Error("planar_dual: graph is not planar");
    rot = std::move(*r);
  }
  if (!euler_check(g, rot)) throw Error("planar_dual: rotation is not planar");
  const FaceStructure fs = trace_faces(g, rot);
  const int faces = g.edge_count() == 0 ? 1 : static_cast<int>(fs.faces.size());
  WeightedMultigraph dual(faces);
  for (int e = 0; e < g.edge_count(); ++e) {
    dual.add_edge(fs.face_of_dart[dart_of(e, 0)], fs.face_of_dart[dart_of(e, 1)], g.weight(e));
  }
  Rotation drot;
  drot.around.assign(faces, {});
  for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f) drot.around[f] = fs.faces[f];
  dual.set_rotation(std::move(drot));
  return dual;
}

}  // namespace tutte
