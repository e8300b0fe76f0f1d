#include "tutte/planarity.hpp"
#include "tutte/reduction.hpp"

#include <algorithm>
#include <functional>

namespace tutte {

YNetwork assemble_network(const WeightedMultigraph& host, const std::vector<PortLink>& links, const Rational& q,
                          const Rational& link, const Rational& a, const Rational& b) {
  const int n = host.vertex_count();
  if (static_cast<int>(links.size()) != host.edge_count()) throw Error("need one port link per host edge");
  for (int i = 0; i < host.edge_count(); ++i) {
    const Edge& e = host.edge(i);
    const PortLink& l = links[i];
    const bool same = (l.x == e.u && l.y == e.v) || (l.x == e.v && l.y == e.u);
    if (!same) throw Error("port link " + std::to_string(i) + " does not match its host edge");
    for (int p : {l.shared_x, l.shared_y, l.link_x, l.link_y}) {
      if (p < 0 || p > 2) throw Error("port index out of range");
    }
  }

  YNetwork net;
  net.q = q;
  net.triangle_weight = a;
  net.spoke_weight = b;
  net.link_weight = link;
  net.links = links;
  net.source = MisInstance{host, 1};

  UnionFind uf(6 * n);
  for (const PortLink& l : links) {
    uf.unite(6 * l.x + l.shared_x, 6 * l.y + l.shared_y);
    net.merged.push_back({l.x, l.shared_x, l.y, l.shared_y});
  }
  std::vector<int> id(6 * n, -1);
  int count = 0;
  for (int s = 0; s < 6 * n; ++s) {
    int r = uf.find(s);
    if (id[r] < 0) id[r] = count++;
    id[s] = id[r];
  }
  net.graph = WeightedMultigraph(count);
  net.ports.resize(n);
  net.corners.resize(n);
  for (int x = 0; x < n; ++x) {
    for (int k = 0; k < 3; ++k) {
      net.ports[x][k] = id[6 * x + k];
      net.corners[x][k] = id[6 * x + 3 + k];
    }
    for (int k = 0; k < 3; ++k) {
      net.graph.add_edge(net.ports[x][k], net.corners[x][k], b);
      net.roles.push_back(EdgeRole::Spoke);
    }
    for (int k = 0; k < 3; ++k) {
      net.graph.add_edge(net.corners[x][k], net.corners[x][(k + 1) % 3], a);
      net.roles.push_back(EdgeRole::Triangle);
    }
  }
  for (const PortLink& l : links) {
    net.link_edges.push_back(net.graph.add_edge(net.ports[l.x][l.link_x], net.ports[l.y][l.link_y], link));
    net.roles.push_back(EdgeRole::Link);
  }
  if (auto rot = planarity_embed(net.graph)) net.graph.set_rotation(std::move(*rot));
  return net;
}

YNetwork assemble_ghat(const WeightedMultigraph& h, int K, const Rational& q, const Rational& link, const Rational& a,
                       const Rational& b, const ParamSet& params) {
  if (!is_cubic(h)) throw Error("assemble_ghat: graph is not cubic");
  const WeightedMultigraph plane = h.rotation() ? h : embedded(h);
  WeightedMultigraph stretched = three_stretch(plane);
  MisInstance source = make_mis_instance(stretched, K);
  const int n = stretched.vertex_count();
  const int m = stretched.edge_count();
  if (params.n != n || params.m != m || params.K != K || params.q != q) {
    throw Error("constant ledger was computed for a different instance");
  }

  const int n0 = plane.vertex_count();
  auto position = [&](int v, int dart) {
    const auto& around = plane.rotation()->around[v];
    return static_cast<int>(std::find(around.begin(), around.end(), dart) - around.begin());
  };
  for (int orientation : {1, -1}) {
    std::vector<PortLink> links;
    for (int e = 0; e < plane.edge_count(); ++e) {
      const Edge& ed = plane.edge(e);
      const int i = ((orientation * position(ed.u, dart_of(e, 0))) % 3 + 3) % 3;
      const int j = ((orientation * position(ed.v, dart_of(e, 1))) % 3 + 3) % 3;
      const int uv = n0 + 2 * e, vu = n0 + 2 * e + 1;
      links.push_back({ed.u, uv, i, 0, (i + 2) % 3, 1});
      links.push_back({uv, vu, 2, 1, 1, 2});
      links.push_back({vu, ed.v, 0, j, 1, (j + 2) % 3});
    }
    YNetwork net = assemble_network(stretched, links, q, link, a, b);
    if (!net.graph.rotation()) continue;
    net.source = source;
    net.params = params;
    net.threshold = psi_threshold(y_closed_forms(q, a, b), params, n, K);
    return net;
  }
  throw Error("no port orientation gives a planar network");
}

Rational psi_threshold(const YGadgetReport& y, const Rational& ratio_floor, const Rational& chi, long nu, long n,
                       long K) {
  if (y.all_apart == 0) throw Error("degenerate gadget: all-apart value is 0");
  if (K < 1) throw Error("K must be positive");
  const Rational fugacity = abs(y.q * y.q * y.joined / y.all_apart);
  return pow(fugacity, K - 1) * ratio_floor * pow(abs(y.all_apart), n) * pow(abs(y.q), -3 * n) * pow(chi, nu);
}

Rational psi_threshold(const YGadgetReport& y, const ParamSet& params, long n, long K) {
  return psi_threshold(y, params.big_r.safe(), params.chi.safe(), params.nu, n, K);
}

Rational z_sdt_exact(const YNetwork& net, const std::vector<PortPattern>& patterns, int edge_cap) {
  const int n = net.gadget_count();
  if (static_cast<int>(patterns.size()) != n) throw Error("one pattern per gadget required");
  if (net.graph.edge_count() > edge_cap) throw Error("z_sdt_exact: edge cap exceeded");
  const WeightedMultigraph& g = net.graph;
  const int links = static_cast<int>(net.link_edges.size());

  std::vector<Rational> qpow(g.vertex_count() + 1, Rational(1));
  for (std::size_t i = 1; i < qpow.size(); ++i) qpow[i] = qpow[i - 1] * net.q;
  std::vector<Rational> link_weight(std::size_t{1} << links, Rational(1));
  for (unsigned B = 1; B < link_weight.size(); ++B) {
    int low = __builtin_ctz(B);
    link_weight[B] = link_weight[B & (B - 1)] * g.weight(net.link_edges[low]);
  }

  std::vector<unsigned> chosen(n, 0);
  Rational total = 0;
  std::function<void(int, const Rational&)> walk = [&](int x, const Rational& wa) {
    if (x == n) {
      for (unsigned B = 0; B < link_weight.size(); ++B) {
        UnionFind uf(g.vertex_count());
        for (int y = 0; y < n; ++y) {
          for (int k = 0; k < 6; ++k) {
            if (chosen[y] >> k & 1u) {
              const Edge& e = g.edge(net.gadget_edge(y, k));
              uf.unite(e.u, e.v);
            }
          }
        }
        for (int l = 0; l < links; ++l) {
          if (B >> l & 1u) {
            const Edge& e = g.edge(net.link_edges[l]);
            uf.unite(e.u, e.v);
          }
        }
        total += wa * link_weight[B] * qpow[uf.sets()];
      }
      return;
    }
    for (unsigned mask = 0; mask < 64; ++mask) {
      if (y_pattern(mask) != patterns[x]) continue;
      Rational w = wa;
      for (int k = 0; k < 6; ++k) {
        if (mask >> k & 1u) w *= g.weight(net.gadget_edge(x, k));
      }
      chosen[x] = mask;
      walk(x + 1, w);
    }
  };
  walk(0, Rational(1));
  return total;
}

Interconnect interconnect_graph(const YNetwork& net, const std::vector<bool>& chosen, bool drop_loops) {
  const int n = net.gadget_count();
  if (static_cast<int>(chosen.size()) != n) throw Error("one flag per gadget required");
  const int V = net.graph.vertex_count();
  UnionFind uf(V);
  for (int x = 0; x < n; ++x) {
    if (chosen[x]) {
      uf.unite(net.ports[x][0], net.ports[x][1]);
      uf.unite(net.ports[x][0], net.ports[x][2]);
    }
  }
  std::vector<int> id(V, -1);
  int count = 0;
  for (int x = 0; x < n; ++x) {
    for (int k = 0; k < 3; ++k) {
      int r = uf.find(net.ports[x][k]);
      if (id[r] < 0) id[r] = count++;
    }
  }
  Interconnect out;
  out.graph = WeightedMultigraph(count);
  for (int le : net.link_edges) {
    const Edge& e = net.graph.edge(le);
    int u = id[uf.find(e.u)], v = id[uf.find(e.v)];
    if (u == v && drop_loops) {
      ++out.loops_dropped;
      continue;
    }
    out.graph.add_edge(u, v, net.graph.weight(le));
  }
  return out;
}

Rational independent_class_value(const YNetwork& net, const std::vector<bool>& chosen, const EngineOptions& opt) {
  for (const PortLink& l : net.links) {
    if (chosen.at(l.x) && chosen.at(l.y)) throw Error("chosen gadgets are not independent");
  }
  const long n = net.gadget_count();
  const long k = std::count(chosen.begin(), chosen.end(), true);
  YGadgetReport y = y_closed_forms(net.q, net.triangle_weight, net.spoke_weight);
  if (y.all_apart == 0) throw Error("degenerate gadget: all-apart value is 0");
  const Rational fugacity = net.q * net.q * y.joined / y.all_apart;
  Rational z = z_delcon(interconnect_graph(net, chosen).graph, net.q, opt);
  return pow(fugacity, k) * pow(y.all_apart, n) * pow(net.q, -3 * n) * z;
}

}  // namespace tutte
