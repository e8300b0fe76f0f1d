#include "tutte/planarity.hpp"
#include "tutte/reduction.hpp"

namespace tutte {

PipelineResult shift_pipeline(const WeightedMultigraph& instance, const Rational& q,
                              const std::array<Implementation, 3>& certificate) {
  if (q == 0) throw Error("q must be nonzero");
  std::array<TwoTerminalGadget, 3> built;
  std::optional<Rational> base;
  for (int i = 0; i < 3; ++i) {
    if (certificate[i].q != q) throw Error("certificate gadget built for a different q");
    built[i] = certificate[i].gadget.materialize();
    for (const Rational& w : built[i].graph.weights()) {
      if (!base) base = w;
      if (*base != w) throw Error("certificate gadgets use more than one base weight");
    }
  }
  if (!base || *base == 0) throw Error("base weight must be nonzero");

  PipelineResult out;
  out.base_weight = *base;
  out.scale = 1;
  out.graph = WeightedMultigraph(instance.vertex_count());
  for (int e = 0; e < instance.edge_count(); ++e) {
    const Rational& w = instance.weight(e);
    int pick = -1;
    for (int i = 0; i < 3 && pick < 0; ++i) {
      if (certificate[i].effective_weight == w) pick = i;
    }
    if (pick < 0) throw Error("edge " + std::to_string(e) + " weight " + to_string(w) + " matches no certificate");
    out.replaced_by.push_back(pick);
    out.scale *= certificate[pick].scale;
    const TwoTerminalGadget& tg = built[pick];
    std::vector<int> where(tg.graph.vertex_count(), -1);
    where[tg.s] = instance.edge(e).u;
    where[tg.t] = instance.edge(e).v;
    for (int& v : where) {
      if (v < 0) v = out.graph.add_vertex();
    }
    for (int f = 0; f < tg.graph.edge_count(); ++f) {
      out.graph.add_edge(where[tg.graph.edge(f).u], where[tg.graph.edge(f).v], *base);
    }
  }
  if (instance.rotation()) {
    auto rot = planarity_embed(out.graph);
    if (!rot) throw Error("splice produced a non-planar graph");
    out.graph.set_rotation(std::move(*rot));
  }
  out.base_x = q / *base + 1;
  out.base_y = *base + 1;
  out.tutte_factor = pow(out.base_x - 1, out.graph.component_count()) * pow(out.base_y - 1, out.graph.vertex_count());
  return out;
}

}  // namespace tutte
