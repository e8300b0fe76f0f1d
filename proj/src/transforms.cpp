#include "tutte/transforms.hpp"

#include "tutte/planarity.hpp"

namespace tutte {

bool is_cubic(const WeightedMultigraph& g) {
  for (int d : g.degrees()) {
    if (d != 3) return false;
  }
  return true;
}

CubicizeResult cubicize(const WeightedMultigraph& g) {
  const auto deg = g.degrees();
  for (int d : deg) {
    if (d > 3) throw Error("cubicize: vertex degree exceeds 3");
  }
  if (!planarity_embed(g)) throw Error("cubicize: graph is not planar");

  CubicizeResult out;
  WeightedMultigraph h(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    h.add_edge(g.edge(e).u, g.edge(e).v, g.weight(e));
    out.edge_origin.push_back(e);
  }
  for (int x = 0; x < g.vertex_count(); ++x) {
    for (int copy = deg[x]; copy < 3; ++copy) {
      const int v = h.add_vertex();
      const int a = h.add_vertex();
      const int b = h.add_vertex();
      const int c = h.add_vertex();
      const int d = h.add_vertex();
      const int pad[8][2] = {{x, v}, {v, a}, {v, b}, {a, c}, {a, d}, {b, c}, {b, d}, {c, d}};
      for (const auto& p : pad) {
        h.add_edge(p[0], p[1]);
        out.edge_origin.push_back(-1);
      }
      ++out.pad_copies;
    }
  }
  out.mis_offset = 2 * out.pad_copies;
  out.graph = embedded(h);
  return out;
}

WeightedMultigraph three_stretch(const WeightedMultigraph& h) {
  if (!is_cubic(h)) throw Error("three_stretch: graph is not cubic");
  const WeightedMultigraph src = h.rotation() ? h : embedded(h);
  const int n0 = src.vertex_count();
  WeightedMultigraph out(n0 + 2 * src.edge_count());
  for (int e = 0; e < src.edge_count(); ++e) {
    const Edge& ed = src.edge(e);
    out.add_edge(ed.u, n0 + 2 * e, src.weight(e));
    out.add_edge(n0 + 2 * e, n0 + 2 * e + 1, src.weight(e));
    out.add_edge(n0 + 2 * e + 1, ed.v, src.weight(e));
  }
  Rotation rot;
  rot.around.assign(out.vertex_count(), {});
  for (int v = 0; v < n0; ++v) {
    for (int d : src.rotation()->around[v]) {
      const int e = dart_edge(d);
      // the u-end of e becomes the u-end of 3e, the v-end becomes the v-end of 3e+2
      rot.around[v].push_back((d & 1) ? dart_of(3 * e + 2, 1) : dart_of(3 * e, 0));
    }
  }
  for (int e = 0; e < src.edge_count(); ++e) {
    rot.around[n0 + 2 * e] = {dart_of(3 * e, 1), dart_of(3 * e + 1, 0)};
    rot.around[n0 + 2 * e + 1] = {dart_of(3 * e + 1, 1), dart_of(3 * e + 2, 0)};
  }
  out.set_rotation(std::move(rot));
  return out;
}

MisInstance make_mis_instance(WeightedMultigraph stretched, int K) {
  const long n = stretched.vertex_count();
  if (K < 1) throw Error("MIS bound must be positive");
  if (8L * K > 5 * n + 7) throw Error("MIS bound exceeds ceil(5n/8)");
  return {std::move(stretched), K};
}

}  // namespace tutte
