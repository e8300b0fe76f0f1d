#include "tutte/gadget.hpp"

#include "tutte/planarity.hpp"

#include <functional>
#include <unordered_map>

namespace tutte {

struct Gadget::Node {
  Kind kind = Kind::Edge;
  Rational weight;
  long k = 1;
  std::vector<Gadget> parts;
  long edges = 1;
};

Gadget Gadget::edge(Rational w) {
  auto n = std::make_shared<Node>();
  n->weight = std::move(w);
  return Gadget(n);
}

Gadget Gadget::series(const Gadget& a, const Gadget& b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Series;
  n->parts = {a, b};
  n->edges = a.edge_count() + b.edge_count();
  return Gadget(n);
}

Gadget Gadget::parallel(const Gadget& a, const Gadget& b) { return parallel(std::vector<Gadget>{a, b}); }

Gadget Gadget::parallel(const std::vector<Gadget>& parts) {
  if (parts.empty()) throw Error("parallel composition of nothing");
  if (parts.size() == 1) return parts.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Parallel;
  n->parts = parts;
  n->edges = 0;
  for (const Gadget& p : parts) n->edges += p.edge_count();
  return Gadget(n);
}

Gadget Gadget::thicken(const Gadget& a, long k) {
  if (k < 1) throw Error("thickening needs k >= 1");
  if (k == 1) return a;
  auto n = std::make_shared<Node>();
  n->kind = Kind::Thicken;
  n->k = k;
  n->parts = {a};
  n->edges = k * a.edge_count();
  return Gadget(n);
}

Gadget Gadget::stretch(const Gadget& a, long k) {
  if (k < 1) throw Error("stretching needs k >= 1");
  if (k == 1) return a;
  auto n = std::make_shared<Node>();
  n->kind = Kind::Stretch;
  n->k = k;
  n->parts = {a};
  n->edges = k * a.edge_count();
  return Gadget(n);
}

Gadget::Kind Gadget::kind() const { return node_->kind; }
long Gadget::edge_count() const { return node_->edges; }
long Gadget::multiplicity() const { return node_->k; }
const std::vector<Gadget>& Gadget::parts() const { return node_->parts; }
const Rational& Gadget::weight() const { return node_->weight; }

namespace {

WeightScale series_step(const WeightScale& a, const WeightScale& b, const Rational& q) {
  Rational d = q + a.weight + b.weight;
  if (d == 0) throw Error("degenerate series composition: q + w1 + w2 = 0");
  return {a.weight * b.weight / d, a.scale * b.scale * d};
}

WeightScale parallel_step(const WeightScale& a, const WeightScale& b) {
  return {(1 + a.weight) * (1 + b.weight) - 1, a.scale * b.scale};
}

WeightScale stretch_step(const WeightScale& a, const Rational& q, long k) {
  Rational top = pow(q + a.weight, k);
  Rational bottom = pow(a.weight, k);
  Rational d = top - bottom;
  if (d == 0) throw Error("degenerate stretch: (q + w)^k = w^k");
  return {q * bottom / d, pow(a.scale, k) * d / q};
}

WeightScale thicken_step(const WeightScale& a, long k) {
  return {pow(1 + a.weight, k) - 1, pow(a.scale, k)};
}

}  // namespace

namespace {

Integer ipow(const Integer& b, long k) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

// Weights are folded bottom-up. The scale is a product of one factor per node raised to
// the number of times that node occurs in the expanded gadget, multiplied out at the end.
WeightScale Gadget::closed_form(const Rational& q) const {
  if (q == 0) throw Error("closed forms need q != 0");
  struct Info {
    Rational weight;
    Rational factor{1};
    long uses = 0;
  };
  std::unordered_map<const Node*, Info> info;
  std::vector<const Gadget*> order;  // children before parents
  std::function<const Rational&(const Gadget&)> eval = [&](const Gadget& g) -> const Rational& {
    auto it = info.find(g.node_.get());
    if (it != info.end()) return it->second.weight;
    Info r;
    switch (g.kind()) {
      case Kind::Edge:
        r.weight = g.weight();
        break;
      case Kind::Series: {
        WeightScale s = series_step({eval(g.parts()[0]), Rational(1)}, {eval(g.parts()[1]), Rational(1)}, q);
        r.weight = s.weight;
        r.factor = s.scale;
        break;
      }
      case Kind::Parallel:
        r.weight = eval(g.parts()[0]);
        for (std::size_t i = 1; i < g.parts().size(); ++i) {
          r.weight = parallel_step({r.weight, Rational(1)}, {eval(g.parts()[i]), Rational(1)}).weight;
        }
        break;
      case Kind::Thicken:
        r.weight = thicken_step({eval(g.parts()[0]), Rational(1)}, g.multiplicity()).weight;
        break;
      case Kind::Stretch: {
        WeightScale s = stretch_step({eval(g.parts()[0]), Rational(1)}, q, g.multiplicity());
        r.weight = s.weight;
        r.factor = s.scale;
        break;
      }
    }
    order.push_back(&g);
    return info.emplace(g.node_.get(), std::move(r)).first->second.weight;
  };
  const Rational weight = eval(*this);

  info[node_.get()].uses = 1;
  std::vector<Integer> nums, dens;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Gadget& g = **it;
    const Info& me = info[g.node_.get()];
    const long each = (g.kind() == Kind::Thicken || g.kind() == Kind::Stretch) ? g.multiplicity() : 1;
    for (const Gadget& c : g.parts()) info[c.node_.get()].uses += me.uses * each;
    if (me.factor != 1) {
      nums.push_back(ipow(me.factor.get_num(), me.uses));
      dens.push_back(ipow(me.factor.get_den(), me.uses));
    }
  }
  Rational scale(product_tree(std::move(nums)), product_tree(std::move(dens)));
  scale.canonicalize();
  return {weight, scale};
}

TwoTerminalGadget Gadget::materialize() const {
  TwoTerminalGadget out;
  out.graph = WeightedMultigraph(2);
  WeightedMultigraph& g = out.graph;
  std::function<void(const Gadget&, int, int)> build = [&](const Gadget& x, int s, int t) {
    switch (x.kind()) {
      case Kind::Edge:
        g.add_edge(s, t, x.weight());
        break;
      case Kind::Series: {
        int mid = g.add_vertex();
        build(x.parts()[0], s, mid);
        build(x.parts()[1], mid, t);
        break;
      }
      case Kind::Parallel:
        for (const Gadget& p : x.parts()) build(p, s, t);
        break;
      case Kind::Thicken:
        for (long i = 0; i < x.multiplicity(); ++i) build(x.parts()[0], s, t);
        break;
      case Kind::Stretch: {
        int prev = s;
        for (long i = 0; i < x.multiplicity(); ++i) {
          int next = (i + 1 == x.multiplicity()) ? t : g.add_vertex();
          build(x.parts()[0], prev, next);
          prev = next;
        }
        break;
      }
    }
  };
  build(*this, 0, 1);

  // Embed with an extra s-t edge, then drop it: s and t then share a face.
  WeightedMultigraph probe = g;
  int extra = probe.add_edge(0, 1);
  auto rot = planarity_embed(probe);
  if (!rot) throw Error("series-parallel gadget failed to embed");
  for (auto& around : rot->around) {
    std::erase_if(around, [&](int d) { return dart_edge(d) == extra; });
  }
  g.set_rotation(std::move(*rot));
  return out;
}

std::string Gadget::describe() const {
  switch (kind()) {
    case Kind::Edge:
      return "e[" + to_string(weight()) + "]";
    case Kind::Series:
      return "S(" + parts()[0].describe() + "," + parts()[1].describe() + ")";
    case Kind::Parallel: {
      std::string s = "P(";
      for (std::size_t i = 0; i < parts().size(); ++i) s += (i ? "," : "") + parts()[i].describe();
      return s + ")";
    }
    case Kind::Thicken:
      return "T" + std::to_string(multiplicity()) + "(" + parts()[0].describe() + ")";
    case Kind::Stretch:
      return "S" + std::to_string(multiplicity()) + "(" + parts()[0].describe() + ")";
  }
  return {};
}

WeightScale parallel_series_weight(Composition kind, const Rational& w1, const Rational& w2, const Rational& q) {
  if (q == 0) throw Error("q must be nonzero");
  WeightScale a{w1, Rational(1)}, b{w2, Rational(1)};
  return kind == Composition::Parallel ? parallel_step(a, b) : series_step(a, b, q);
}

ShiftPoint ShiftPoint::from_weight(const Rational& alpha, const Rational& q) {
  if (q == 0) throw Error("q must be nonzero");
  if (alpha == 0) throw Error("weight 0 has no finite x coordinate");
  return {q / alpha + 1, alpha + 1, q, alpha};
}

ShiftPoint ShiftPoint::from_y(const Rational& y, const Rational& q) { return from_weight(y - 1, q); }

RepeatResult thicken_stretch_weight(Repetition kind, const Rational& alpha, const Rational& q, long k) {
  if (q == 0) throw Error("q must be nonzero");
  if (k < 1) throw Error("k must be positive");
  WeightScale one{alpha, Rational(1)};
  WeightScale r = kind == Repetition::Thicken ? thicken_step(one, k) : stretch_step(one, q, k);
  RepeatResult out{r.weight, r.scale, r.weight + 1, std::nullopt};
  if (r.weight != 0) out.x = q / r.weight + 1;
  return out;
}

WeightScale effective_weight(const TwoTerminalGadget& g, const Rational& q, const EngineOptions& opt) {
  if (q == 0) throw Error("q must be nonzero");
  if (g.s == g.t) throw Error("terminals must differ");
  auto parts = z_terminal_partitions(g.graph, q, {g.s, g.t}, Method::Auto, opt);
  const Rational& joined = parts[PartitionKey{0, 0}];
  const Rational& apart = parts[PartitionKey{0, 1}];
  if (apart == 0) throw Error("non-implementing gadget: Z(s|t) = 0");
  return {q * joined / apart, apart / (q * q)};
}

Implementation make_implementation(const Gadget& g, const Rational& q, const Rational& target) {
  Implementation impl;
  impl.gadget = g;
  impl.q = q;
  WeightScale ws = g.closed_form(q);
  impl.effective_weight = ws.weight;
  impl.scale = ws.scale;
  impl.target = target;
  Rational diff = ws.weight - target;
  impl.error = {diff, diff};
  return impl;
}

bool recheck(const Implementation& impl, const EngineOptions& opt) {
  WeightScale ws = effective_weight(impl.gadget.materialize(), impl.q, opt);
  return ws.weight == impl.effective_weight && ws.scale == impl.scale &&
         impl.error.contains(ws.weight - impl.target);
}

Substitution substitute_edge(const WeightedMultigraph& g, int f, const Implementation& impl, bool flip) {
  if (f < 0 || f >= g.edge_count()) throw Error("no such edge");
  const Edge host = g.edge(f);
  if (host.is_loop()) throw Error("cannot substitute a gadget for a loop");
  TwoTerminalGadget tg = impl.gadget.materialize();
  const WeightedMultigraph& h = tg.graph;

  Substitution out;
  out.graph = WeightedMultigraph(g.vertex_count());
  std::vector<int> where(h.vertex_count(), -1);
  where[tg.s] = flip ? host.v : host.u;
  where[tg.t] = flip ? host.u : host.v;
  for (int v = 0; v < h.vertex_count(); ++v) {
    if (where[v] < 0) where[v] = out.graph.add_vertex();
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (e == f) {
      const Edge& ge = h.edge(0);
      out.graph.add_edge(where[ge.u], where[ge.v], h.weight(0));
      out.edge_origin.push_back(-1);
    } else {
      out.graph.add_edge(g.edge(e).u, g.edge(e).v, g.weight(e));
      out.edge_origin.push_back(e);
    }
  }
  for (int e = 1; e < h.edge_count(); ++e) {
    out.graph.add_edge(where[h.edge(e).u], where[h.edge(e).v], h.weight(e));
    out.edge_origin.push_back(-1);
  }
  if (g.rotation()) {
    if (auto rot = planarity_embed(out.graph)) out.graph.set_rotation(std::move(*rot));
  }
  out.scale = impl.scale;
  return out;
}

}  // namespace tutte
