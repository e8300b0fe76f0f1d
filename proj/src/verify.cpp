#include "tutte/verify.hpp"

#include "tutte/classify.hpp"
#include "tutte/mis.hpp"
#include "tutte/planarity.hpp"
#include "tutte/reduction.hpp"
#include "tutte/transforms.hpp"
#include "tutte/tutte.hpp"

#include <random>

namespace tutte {

namespace {

using Rng = std::mt19937_64;

Rational rand_rational(Rng& rng, int lim = 5, int den = 4) {
  std::uniform_int_distribution<int> num(-lim, lim), d(1, den);
  return Rational(num(rng)) / d(rng);
}

Rational rand_nonzero(Rng& rng, int lim = 5, int den = 4) {
  Rational x;
  do x = rand_rational(rng, lim, den);
  while (x == 0);
  return x;
}

WeightedMultigraph rand_multigraph(Rng& rng, int max_n, int max_m) {
  const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
  const int m = std::uniform_int_distribution<int>(0, max_m)(rng);
  std::uniform_int_distribution<int> vd(0, n - 1);
  WeightedMultigraph g(n);
  for (int i = 0; i < m; ++i) g.add_edge(vd(rng), vd(rng), rand_rational(rng));
  return g;
}

WeightedMultigraph rand_simple(Rng& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  WeightedMultigraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) g.add_edge(i, j);
    }
  }
  return g;
}

WeightedMultigraph rand_connected(Rng& rng, int n, double p) {
  WeightedMultigraph g = rand_simple(rng, n, p);
  for (int v = 1; v < n; ++v) g.add_edge(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  return g;
}

Gadget rand_gadget(Rng& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 4 : 0);
  switch (pick(rng)) {
    case 1:
      return Gadget::series(rand_gadget(rng, depth - 1), rand_gadget(rng, depth - 1));
    case 2:
      return Gadget::parallel(rand_gadget(rng, depth - 1), rand_gadget(rng, depth - 1));
    case 3:
      return Gadget::thicken(rand_gadget(rng, depth - 1), std::uniform_int_distribution<int>(1, 3)(rng));
    case 4:
      return Gadget::stretch(rand_gadget(rng, depth - 1), std::uniform_int_distribution<int>(1, 3)(rng));
    default:
      return Gadget::edge(rand_nonzero(rng, 3, 2));
  }
}

struct Runner {
  std::string suite;
  const std::function<void(const CheckResult&)>& sink;
  std::vector<CheckResult>& out;

  // body returns an empty string on success, a counterexample otherwise.
  void check(const std::string& name, long trials, const std::function<std::string(long)>& body) {
    CheckResult r{suite, name, 0, true, ""};
    for (long i = 0; i < trials; ++i) {
      std::string bad;
      try {
        bad = body(i);
      } catch (const std::exception& e) {
        bad = std::string("exception: ") + e.what();
      }
      ++r.trials;
      if (!bad.empty()) {
        r.ok = false;
        r.detail = "trial " + std::to_string(i) + ": " + bad;
        break;
      }
    }
    out.push_back(r);
    if (sink) sink(r);
  }
};

void graph_core(Runner& run) {
  Rng rng(101);
  run.check("embedding passes the Euler count or graph is dense enough to be non-planar", 200, [&](long) {
    WeightedMultigraph g = rand_simple(rng, std::uniform_int_distribution<int>(1, 8)(rng), 0.5);
    auto rot = planarity_embed(g);
    if (rot) return euler_check(g, *rot) ? "" : std::string("embedding fails the Euler count");
    if (g.vertex_count() < 5 || g.edge_count() < 9) return std::string("rejected a graph below K5/K33 size");
    return std::string();
  });
  run.check("dual of dual is the primal", 60, [&](long) {
    WeightedMultigraph g = rand_connected(rng, std::uniform_int_distribution<int>(1, 7)(rng), 0.3);
    if (!planarity_embed(g)) return std::string();
    return isomorphic_with_edge_ids(g, planar_dual(planar_dual(g))) ? "" : std::string("not isomorphic");
  });
  run.check("cubicize raises the MIS by its offset", 40, [&](long) {
    WeightedMultigraph g = rand_connected(rng, std::uniform_int_distribution<int>(2, 4)(rng), 0.4);
    if (!planarity_embed(g)) return std::string();
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) > 3) return std::string();
    }
    CubicizeResult c = cubicize(g);
    if (!is_cubic(c.graph)) return std::string("not cubic");
    if (c.graph.vertex_count() > 32) return std::string();
    if (mis_oracle(c.graph).max_size != mis_oracle(g).max_size + c.mis_offset) return std::string("MIS offset");
    return std::string();
  });
  run.check("three-stretch adds |E| to the MIS", 2, [&](long i) {
    WeightedMultigraph h = i == 0 ? WeightedMultigraph(4) : WeightedMultigraph(6);
    if (i == 0) {
      for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) h.add_edge(a, b);
      }
    } else {
      for (int k = 0; k < 3; ++k) {
        h.add_edge(k, (k + 1) % 3);
        h.add_edge(3 + k, 3 + (k + 1) % 3);
        h.add_edge(k, 3 + k);
      }
    }
    WeightedMultigraph s = three_stretch(embedded(h));
    if (s.vertex_count() != h.vertex_count() + 2 * h.edge_count()) return std::string("vertex count");
    if (s.edge_count() != 3 * h.edge_count()) return std::string("edge count");
    if (mis_oracle(s).max_size != mis_oracle(h).max_size + h.edge_count()) return std::string("MIS shift");
    return std::string();
  });
}

void tutte_engine(Runner& run) {
  Rng rng(202);
  run.check("deletion-contraction equals subset enumeration", 300, [&](long) {
    WeightedMultigraph g = rand_multigraph(rng, 6, 10);
    const Rational q = rand_rational(rng);
    return z_delcon(g, q) == z_bruteforce(g, q) ? "" : std::string("values differ");
  });
  run.check("terminal partitions sum to Z", 60, [&](long) {
    WeightedMultigraph g = rand_multigraph(rng, 5, 8);
    const Rational q = rand_rational(rng);
    std::vector<int> t;
    for (int v = 0; v < std::min(3, g.vertex_count()); ++v) t.push_back(v);
    Rational sum = 0;
    for (const auto& [key, v] : z_terminal_partitions(g, q, t)) sum += v;
    return sum == z_bruteforce(g, q) ? "" : std::string("partition sum differs");
  });
  run.check("T(G;x,y) = T(G*;y,x)", 40, [&](long) {
    WeightedMultigraph g = rand_connected(rng, std::uniform_int_distribution<int>(1, 6)(rng), 0.35);
    if (!planarity_embed(g)) return std::string();
    const Rational x = rand_rational(rng), y = rand_rational(rng);
    return tutte_eval(g, x, y) == tutte_eval(planar_dual(g), y, x) ? "" : std::string("duality fails");
  });
  run.check("colour sum equals Z at integer q", 60, [&](long) {
    WeightedMultigraph g = rand_multigraph(rng, 5, 7);
    const int q = std::uniform_int_distribution<int>(1, 3)(rng);
    const Rational w = rand_rational(rng);
    g.set_all_weights(w);
    return colour_sum(g, q, 1 + w) == z_delcon(g, q) ? "" : std::string("Potts identity fails");
  });
  run.check("Z is multiplicative over disjoint unions", 60, [&](long) {
    WeightedMultigraph a = rand_multigraph(rng, 4, 6), b = rand_multigraph(rng, 4, 6);
    const Rational q = rand_rational(rng);
    WeightedMultigraph u = a;
    u.append(b);
    return z_delcon(u, q) == z_delcon(a, q) * z_delcon(b, q) ? "" : std::string("product fails");
  });
}

void gadget_algebra(Runner& run) {
  Rng rng(303);
  run.check("closed form equals the explicit gadget", 120, [&](long) {
    Gadget g = rand_gadget(rng, 3);
    const Rational q = rand_nonzero(rng);
    WeightScale closed;
    try {
      closed = g.closed_form(q);
    } catch (const Error&) {
      return std::string();  // degenerate series step
    }
    if (g.edge_count() > 22) return std::string();
    WeightScale direct = effective_weight(g.materialize(), q);
    return direct.weight == closed.weight && direct.scale == closed.scale ? "" : std::string(g.describe());
  });
  run.check("k-fold repetition equals folded binary compositions", 80, [&](long) {
    const Rational q = rand_nonzero(rng), a = rand_nonzero(rng);
    const long k = std::uniform_int_distribution<long>(1, 10)(rng);
    for (Repetition kind : {Repetition::Thicken, Repetition::Stretch}) {
      const Composition comp = kind == Repetition::Thicken ? Composition::Parallel : Composition::Series;
      Rational w = a, scale = 1;
      try {
        for (long i = 1; i < k; ++i) {
          WeightScale s = parallel_series_weight(comp, w, a, q);
          w = s.weight;
          scale *= s.scale;
        }
      } catch (const Error&) {
        continue;
      }
      RepeatResult rr = thicken_stretch_weight(kind, a, q, k);
      if (rr.alpha != w || rr.scale != scale) return std::string("k = ") + std::to_string(k);
    }
    return std::string();
  });
  run.check("series identity 1+q/w = (1+q/w1)(1+q/w2)", 100, [&](long) {
    const Rational q = rand_nonzero(rng), w1 = rand_nonzero(rng), w2 = rand_nonzero(rng);
    if (q + w1 + w2 == 0) return std::string();
    WeightScale s = parallel_series_weight(Composition::Series, w1, w2, q);
    if (s.weight == 0) return std::string();
    return 1 + q / s.weight == (1 + q / w1) * (1 + q / w2) ? "" : std::string("identity fails");
  });
  run.check("walks land in their window", 4, [&](long i) {
    const Rational q = i < 2 ? Rational(6) : Rational(-1);
    BasePoints base = i < 2 ? BasePoints::from_y(q, Rational(2), std::nullopt, Rational(-2))
                            : BasePoints::from_y(q, Rational(2), Rational(-1) / 2, Rational(-2));
    const Rational target = i % 2 ? Rational(-5) : Rational(100);
    const Rational tol = Rational(1) / 1000000;
    WalkPlan p = hyperbola_walk(base, target, tol);
    const Rational y = p.result.y();
    const bool inside = target > 0 ? (target - tol <= y && y <= target) : (target <= y && y <= target + tol);
    if (!inside) return std::string("y = ") + to_string(y);
    for (long d : p.digits) {
      if (d < 0) return std::string("negative digit");
    }
    return recheck(p.result) ? "" : std::string("recheck fails");
  });
  run.check("delta <= epsilon eta / (6 A*)", 2, [&](long i) {
    ParamSet p = param_set(i == 0 ? Rational(6) : Rational(-1), 16, 18, 7);
    return p.delta.hi <= p.epsilon.lo * p.eta.lo / (6 * p.a_star.hi) ? "" : std::string("ledger bound fails");
  });
  run.check("edge substitution scales Z", 40, [&](long) {
    WeightedMultigraph g = rand_multigraph(rng, 4, 5);
    if (g.edge_count() == 0) return std::string();
    const Rational q = rand_nonzero(rng);
    Gadget gad = rand_gadget(rng, 2);
    Rational w;
    try {
      w = gad.closed_form(q).weight;
    } catch (const Error&) {
      return std::string();
    }
    if (gad.edge_count() > 10) return std::string();
    Implementation impl = make_implementation(gad, q, w);
    const int f = std::uniform_int_distribution<int>(0, g.edge_count() - 1)(rng);
    if (g.edge(f).is_loop()) return std::string();
    Substitution s = substitute_edge(g, f, impl);
    WeightedMultigraph host = g;
    host.set_weight(f, w);
    return z_delcon(s.graph, q) == s.scale * z_delcon(host, q) ? "" : std::string("substitution fails");
  });
}

void reduction_compiler(Runner& run) {
  Rng rng(404);
  run.check("Y closed forms equal terminal partitions", 50, [&](long) {
    const Rational q = rand_nonzero(rng), a = rand_rational(rng), b = rand_rational(rng);
    YGadgetReport y = y_closed_forms(q, a, b);
    auto parts = z_terminal_partitions(y_gadget(a, b), q, {0, 1, 2});
    if (parts[{0, 0, 0}] != y.joined || parts[{0, 1, 2}] != y.all_apart) return std::string("joined/apart");
    for (PartitionKey k : {PartitionKey{0, 0, 1}, PartitionKey{0, 1, 0}, PartitionKey{0, 1, 1}}) {
      if (parts[k] != y.one_apart) return std::string("one apart");
    }
    return std::string();
  });
  auto pair_net = [&]() {
    WeightedMultigraph host(2);
    host.add_edge(0, 1);
    return assemble_network(host, {{0, 1, 0, 0, 2, 1}}, rand_nonzero(rng), rand_nonzero(rng), rand_nonzero(rng),
                            rand_nonzero(rng));
  };
  run.check("pattern classes sum to Z", 3, [&](long) {
    YNetwork net = pair_net();
    Rational sum = 0;
    for (auto p0 : {PortPattern::Joined, PortPattern::Pair, PortPattern::Apart}) {
      for (auto p1 : {PortPattern::Joined, PortPattern::Pair, PortPattern::Apart}) sum += z_sdt_exact(net, {p0, p1});
    }
    return sum == z_bruteforce(net.graph, net.q) ? "" : std::string("sum differs");
  });
  run.check("independent class closed form", 3, [&](long) {
    YNetwork net = pair_net();
    if (y_closed_forms(net.q, net.triangle_weight, net.spoke_weight).all_apart == 0) return std::string();
    for (std::vector<bool> s : {std::vector<bool>{false, false}, {true, false}, {false, true}}) {
      std::vector<PortPattern> p;
      for (bool c : s) p.push_back(c ? PortPattern::Joined : PortPattern::Apart);
      if (independent_class_value(net, s) != z_sdt_exact(net, p)) return std::string("class differs");
    }
    return std::string();
  });
  run.check("certified interval contains Z", 4, [&](long) {
    YNetwork net = pair_net();
    if (y_closed_forms(net.q, net.triangle_weight, net.spoke_weight).all_apart == 0) return std::string();
    return z_ghat_certified(net, {}, 1).value.contains(z_bruteforce(net.graph, net.q)) ? "" : std::string("outside");
  });
  run.check("K4 verdicts follow the MIS oracle", 2, [&](long i) {
    WeightedMultigraph h(4);
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) h.add_edge(a, b);
    }
    const int K = 7 + static_cast<int>(i);
    MisCompilation c =
        compile_mis(h, K, 6, BasePoints::from_y(6, Rational(2), Rational(1) / 2, Rational(-2)));
    Verdict v = decide_mis(z_ghat_certified(c.net).value, c.net.threshold);
    const int mis = mis_oracle(c.net.source.graph).max_size;
    return v == (mis >= K ? Verdict::Yes : Verdict::No) ? "" : std::string(verdict_name(v));
  });
  run.check("colouring verdict equals brute-force 3-colourability", 20, [&](long i) {
    WeightedMultigraph g = rand_simple(rng, std::uniform_int_distribution<int>(3, 7)(rng), 0.5);
    if (!planarity_embed(g)) return std::string();
    const Rational y = i % 2 ? Rational(1) / 2 : Rational(-1) / 2;
    ColouringReduction c = reduce_colouring(g, 1 + 3 / (y - 1), y);
    return c.colourable == (colour_sum(g, 3, 0) > 0) ? "" : std::string("verdict differs");
  });
}

void classifier(Runner& run) {
  run.check("approximation status is symmetric under (x,y) -> (y,x)", 1, [&](long) {
    for (const MapRecord& r : map_region(-6, 6, -6, 6, Rational(1) / 2)) {
      PointClass s = classify_point(r.y, r.x, false);
      if (s.no_fpras() != r.cls.no_fpras() || (s.approx_status == "exact-easy") != (r.cls.approx_status == "exact-easy")) {
        return "(" + to_string(r.x) + ", " + to_string(r.y) + ")";
      }
    }
    return std::string();
  });
  run.check("no-FPRAS points off [0,5] carry a valid certificate", 6, [&](long i) {
    static const std::pair<int, int> pts[] = {{-2, -2}, {3, -3}, {-3, 3}, {-4, -4}, {2, -5}, {-5, 2}};
    PointClass c = classify_point(pts[i].first, pts[i].second);
    if (!c.certificate) return std::string("no certificate");
    return check_certificate(*c.certificate);
  });
  run.check("map records are deterministic", 1, [&](long) {
    auto a = map_region(-3, 3, -3, 3, Rational(1) / 3), b = map_region(-3, 3, -3, 3, Rational(1) / 3);
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (record_line(a[k]) != record_line(b[k])) return std::string("record ") + std::to_string(k);
    }
    return std::string();
  });
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = {"graph-core", "tutte-engine", "gadget-algebra",
                                                 "reduction-compiler", "classifier-cli"};
  return names;
}

std::vector<CheckResult> run_verify(const std::string& suite, const std::function<void(const CheckResult&)>& on_result) {
  std::vector<CheckResult> out;
  bool known = suite == "all";
  for (const auto& s : verify_suites()) known = known || s == suite;
  if (!known) throw Error("unknown suite " + suite);
  auto want = [&](const char* s) { return suite == "all" || suite == s; };
  if (want("graph-core")) {
    Runner r{"graph-core", on_result, out};
    graph_core(r);
  }
  if (want("tutte-engine")) {
    Runner r{"tutte-engine", on_result, out};
    tutte_engine(r);
  }
  if (want("gadget-algebra")) {
    Runner r{"gadget-algebra", on_result, out};
    gadget_algebra(r);
  }
  if (want("reduction-compiler")) {
    Runner r{"reduction-compiler", on_result, out};
    reduction_compiler(r);
  }
  if (want("classifier-cli")) {
    Runner r{"classifier-cli", on_result, out};
    classifier(r);
  }
  return out;
}

}  // namespace tutte
