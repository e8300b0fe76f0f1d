#include "support.hpp"

#include "tutte/mis.hpp"
#include "tutte/planarity.hpp"
#include "tutte/reduction.hpp"
#include "tutte/tutte.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <tuple>

using namespace tutte;
using fixture::r;

namespace {

Rational naive_z(const WeightedMultigraph& g, const Rational& q) {
  Rational total(0);
  const int m = g.edge_count();
  for (long mask = 0; mask < (1L << m); ++mask) {
    UnionFind uf(g.vertex_count());
    Rational w(1);
    for (int e = 0; e < m; ++e) {
      if ((mask >> e) & 1) {
        uf.unite(g.edge(e).u, g.edge(e).v);
        w *= g.weight(e);
      }
    }
    total += w * pow(q, uf.sets());
  }
  return total;
}

// Every edge subset of the network, keyed by the port pattern each gadget's own edges induce.
std::map<std::vector<PortPattern>, Rational> class_census(const YNetwork& net) {
  const WeightedMultigraph& g = net.graph;
  const int m = g.edge_count();
  const int n = net.gadget_count();
  std::map<std::vector<PortPattern>, Rational> out;
  for (long mask = 0; mask < (1L << m); ++mask) {
    UnionFind all(g.vertex_count());
    Rational w(1);
    for (int e = 0; e < m; ++e) {
      if ((mask >> e) & 1) {
        all.unite(g.edge(e).u, g.edge(e).v);
        w *= g.weight(e);
      }
    }
    std::vector<PortPattern> key;
    for (int x = 0; x < n; ++x) {
      UnionFind own(g.vertex_count());
      for (int k = 0; k < 6; ++k) {
        const int e = net.gadget_edge(x, k);
        if ((mask >> e) & 1) own.unite(g.edge(e).u, g.edge(e).v);
      }
      const auto& p = net.ports[x];
      const bool a = own.find(p[0]) == own.find(p[1]);
      const bool b = own.find(p[1]) == own.find(p[2]);
      const bool c = own.find(p[0]) == own.find(p[2]);
      const int joins = a + b + c;
      key.push_back(joins == 3 ? PortPattern::Joined : joins == 1 ? PortPattern::Pair : PortPattern::Apart);
    }
    out[key] += w * pow(net.q, all.sets());
  }
  return out;
}

YNetwork pair_network(const Rational& q, const Rational& link, const Rational& a, const Rational& b) {
  return assemble_network(fixture::graph(2, {{0, 1}}), {{0, 1, 0, 0, 2, 1}}, q, link, a, b);
}

YNetwork path_network(const Rational& q, const Rational& link, const Rational& a, const Rational& b) {
  return assemble_network(fixture::graph(3, {{0, 1}, {1, 2}}), {{0, 1, 0, 0, 2, 1}, {1, 2, 2, 1, 1, 2}}, q, link, a,
                          b);
}

YNetwork triangle_network(const Rational& q, const Rational& link, const Rational& a, const Rational& b) {
  return assemble_network(fixture::cycle(3), {{0, 1, 0, 0, 2, 1}, {1, 2, 2, 1, 1, 2}, {2, 0, 0, 1, 2, 0}}, q, link,
                          a, b);
}

std::vector<std::vector<bool>> independent_subsets(const WeightedMultigraph& host) {
  std::vector<std::vector<bool>> out;
  const int n = host.vertex_count();
  for (long mask = 0; mask < (1L << n); ++mask) {
    bool ok = true;
    for (const Edge& e : host.edges()) ok = ok && !((mask >> e.u & 1) && (mask >> e.v & 1));
    if (!ok) continue;
    std::vector<bool> s(n);
    for (int x = 0; x < n; ++x) s[x] = mask >> x & 1;
    out.push_back(s);
  }
  return out;
}

std::vector<PortPattern> patterns_for(const std::vector<bool>& chosen) {
  std::vector<PortPattern> p;
  for (bool c : chosen) p.push_back(c ? PortPattern::Joined : PortPattern::Apart);
  return p;
}

Rational nonzero_weight(std::mt19937_64& rng) { return fixture::random_nonzero(rng, 4, 3); }

// Brute-force 3-colourability.
bool three_colourable(const WeightedMultigraph& g) {
  const int n = g.vertex_count();
  std::vector<int> col(n, 0);
  long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int i = 0; i < n; ++i, c /= 3) col[i] = static_cast<int>(c % 3);
    bool proper = true;
    for (const Edge& e : g.edges()) proper = proper && col[e.u] != col[e.v];
    if (proper) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("reduction-compiler") {
  TEST_CASE("Y gadget closed forms at q=2, a=b=1") {
    YGadgetReport y = y_closed_forms(2, 1, 1);
    CHECK(y.joined == 8);
    CHECK(y.one_apart == 28);
    CHECK(y.all_apart == 664);
    CHECK(y.total() == 756);
    CHECK(naive_z(y_gadget(1, 1), 2) == 756);
    CHECK(y.c == 6);
    CHECK(y.d == 7);
    CHECK(y.e == 2);
  }

  TEST_CASE("Y gadget with b=0 has no joined or one-apart mass") {
    YGadgetReport y = y_closed_forms(r("7/2"), r("-3/5"), 0);
    CHECK(y.joined == 0);
    CHECK(y.one_apart == 0);
    CHECK(y.all_apart == naive_z(y_gadget(r("-3/5"), 0), r("7/2")));
  }

  TEST_CASE("Y gadget closed forms match terminal partitions on random points") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
      const Rational q = nonzero_weight(rng), a = fixture::random_rational(rng), b = fixture::random_rational(rng);
      YGadgetReport y = y_closed_forms(q, a, b);
      WeightedMultigraph g = y_gadget(a, b);
      auto parts = z_terminal_partitions(g, q, {0, 1, 2}, Method::BruteForce);
      CHECK(parts[PartitionKey{0, 0, 0}] == y.joined);
      CHECK(parts[PartitionKey{0, 1, 1}] == y.one_apart);
      CHECK(parts[PartitionKey{0, 1, 0}] == y.one_apart);
      CHECK(parts[PartitionKey{0, 0, 1}] == y.one_apart);
      CHECK(parts[PartitionKey{0, 1, 2}] == y.all_apart);
      CHECK(y.total() == naive_z(g, q));
      // The all-apart value rewritten around e and d.
      const Rational q3 = q * q * q;
      Rational alt = -q3 * a * a * (a + 3) * y.e + y.d * y.d * y.d * q3 - y.d * y.d * (3 * a + 3 * a * a) * q3 +
                     y.d * q3 * (9 * a * a * a + 3 * a * a * a * a - 3 * a * q);
      CHECK(alt == y.all_apart);
    }
  }

  TEST_CASE("port pattern of every gadget edge subset") {
    int joined = 0, pair = 0, apart = 0;
    for (unsigned mask = 0; mask < 64; ++mask) {
      switch (y_pattern(mask)) {
        case PortPattern::Joined:
          ++joined;
          break;
        case PortPattern::Pair:
          ++pair;
          break;
        case PortPattern::Apart:
          ++apart;
          break;
      }
    }
    CHECK(joined + pair + apart == 64);
    CHECK(y_pattern(0) == PortPattern::Apart);
    CHECK(y_pattern(63) == PortPattern::Joined);
    CHECK(y_pattern(0b001011) == PortPattern::Pair);  // spokes 0,1 and triangle 3-4
    // With unit weights at q=1 each class counts its subsets.
    YGadgetReport y = y_closed_forms(1, 1, 1);
    CHECK(y.joined == joined);
    CHECK(3 * y.one_apart == pair);
    CHECK(y.all_apart == apart);
  }

  TEST_CASE("network over the stretched K4") {
    ParamSet p = param_set(6, 16, 18, 7);
    YNetwork net = assemble_ghat(fixture::complete(4), 7, 6, r("-1/10"), 1, -10, p);
    CHECK(net.gadget_count() == 16);
    CHECK(net.links.size() == 18);
    CHECK(net.graph.vertex_count() == 78);
    CHECK(net.graph.edge_count() == 114);
    CHECK(net.merged.size() == 18);
    int tri = 0, spoke = 0, link = 0;
    for (int e = 0; e < net.graph.edge_count(); ++e) {
      switch (net.roles[e]) {
        case EdgeRole::Triangle:
          ++tri;
          CHECK(net.graph.weight(e) == 1);
          break;
        case EdgeRole::Spoke:
          ++spoke;
          CHECK(net.graph.weight(e) == -10);
          break;
        case EdgeRole::Link:
          ++link;
          CHECK(net.graph.weight(e) == r("-1/10"));
          break;
      }
    }
    CHECK(tri == 48);
    CHECK(spoke == 48);
    CHECK(link == 18);
    REQUIRE(net.graph.rotation());
    CHECK(euler_check(net.graph, *net.graph.rotation()));
    CHECK(planarity_embed(net.graph).has_value());
    // Link ports sit one step before the merged port on the original vertices.
    for (int e = 0; e < 6; ++e) {
      const PortLink& first = net.links[3 * e];
      const PortLink& middle = net.links[3 * e + 1];
      const PortLink& last = net.links[3 * e + 2];
      CHECK(first.link_x == (first.shared_x + 2) % 3);
      CHECK(first.shared_y == 0);
      CHECK(first.link_y == 1);
      CHECK(middle.shared_x == 2);
      CHECK(middle.shared_y == 1);
      CHECK(middle.link_x == 1);
      CHECK(middle.link_y == 2);
      CHECK(last.shared_x == 0);
      CHECK(last.link_x == 1);
      CHECK(last.link_y == (last.shared_y + 2) % 3);
    }
    CHECK(net.threshold == psi_threshold(y_closed_forms(6, 1, -10), p, 16, 7));
  }

  TEST_CASE("network assembly rejects bad inputs") {
    ParamSet p = param_set(6, 16, 18, 7);
    WeightedMultigraph notcubic = fixture::complete(4);
    notcubic.add_edge(0, 1);
    CHECK_THROWS_WITH(assemble_ghat(notcubic, 7, 6, r("-1/10"), 1, -10, p), doctest::Contains("not cubic"));
    CHECK_THROWS(assemble_ghat(fixture::k33(), 7, 6, r("-1/10"), 1, -10, p));
    CHECK_THROWS_WITH(assemble_ghat(fixture::complete(4), 11, 6, r("-1/10"), 1, -10, param_set(6, 16, 18, 7)),
                      doctest::Contains("exceeds"));
    CHECK_THROWS_WITH(assemble_ghat(fixture::complete(4), 6, 6, r("-1/10"), 1, -10, p),
                      doctest::Contains("different instance"));
  }

  TEST_CASE("decision threshold") {
    YGadgetReport y = y_closed_forms(2, 1, 1);
    CHECK(psi_threshold(y, 1, 1, 5, 1, 1) == 83);
    CHECK(psi_threshold(y, 1, 1, 0, 2, 1) == pow(Rational(664), 2) / pow(Rational(2), 6));
    // Each extra unit of K multiplies by the fugacity q^2 joined/all_apart.
    CHECK(psi_threshold(y, 1, 1, 0, 1, 2) == 83 * Rational(32) / 664);
    CHECK_THROWS_WITH(psi_threshold(y, 1, 1, 0, 1, 0), doctest::Contains("positive"));
  }

  TEST_CASE("fugacity exceeds its floor on synthesized weights") {
    for (auto [q, eps, delta] : {std::tuple{Rational(6), r("1/10"), r("1/10000000")},
                                 std::tuple{Rational(-1), r("1/20"), r("1/10000000")}}) {
      ParamSet p = param_set_relaxed(q, 16, 18, 7, eps, delta);
      BasePoints base = q > 0 ? BasePoints::from_y(q, Rational(2), r("1/2"), Rational(-2))
                              : BasePoints::from_y(q, Rational(2), r("-1/2"), Rational(-2));
      Synthesis a = implement_a(p, base);
      Synthesis b = implement_b(q, a.impl.effective_weight, delta, base);
      YGadgetReport y = y_closed_forms(q, a.impl.effective_weight, b.impl.effective_weight);
      CHECK(q * q * abs(y.joined) / abs(y.all_apart) >= p.big_r.safe());
      if (q > 0) CHECK(q * q * y.joined / y.all_apart > 0);
    }
  }

  TEST_CASE("pattern classes on a single gadget") {
    YNetwork net = assemble_network(WeightedMultigraph(1), {}, r("5/2"), 0, r("2/3"), r("-4/3"));
    YGadgetReport y = y_closed_forms(r("5/2"), r("2/3"), r("-4/3"));
    CHECK(z_sdt_exact(net, {PortPattern::Joined}) == y.joined);
    CHECK(z_sdt_exact(net, {PortPattern::Pair}) == 3 * y.one_apart);
    CHECK(z_sdt_exact(net, {PortPattern::Apart}) == y.all_apart);
    // The closed form for the one chosen gadget: its interconnect is a single vertex.
    CHECK(independent_class_value(net, {true}) == y.joined);
    CHECK(independent_class_value(net, {false}) == y.all_apart);
  }

  TEST_CASE("pattern classes of two joined gadgets sum to Z") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 6; ++trial) {
      YNetwork net = pair_network(nonzero_weight(rng), nonzero_weight(rng), nonzero_weight(rng), nonzero_weight(rng));
      CHECK(net.graph.vertex_count() == 11);
      CHECK(net.graph.edge_count() == 13);
      auto census = class_census(net);
      Rational sum = 0;
      int classes = 0;
      for (auto p0 : {PortPattern::Joined, PortPattern::Pair, PortPattern::Apart}) {
        for (auto p1 : {PortPattern::Joined, PortPattern::Pair, PortPattern::Apart}) {
          Rational v = z_sdt_exact(net, {p0, p1});
          CHECK(v == census[{p0, p1}]);
          sum += v;
          ++classes;
        }
      }
      CHECK(classes == 9);
      CHECK(sum == naive_z(net.graph, net.q));
      CHECK(sum == z_bruteforce(net.graph, net.q));
    }
  }

  TEST_CASE("classes a zero spoke weight rules out vanish") {
    YNetwork net = pair_network(3, r("-1/2"), 2, 0);
    CHECK(z_sdt_exact(net, {PortPattern::Joined, PortPattern::Apart}) == 0);
    CHECK(z_sdt_exact(net, {PortPattern::Pair, PortPattern::Pair}) == 0);
    CHECK(z_sdt_exact(net, {PortPattern::Apart, PortPattern::Apart}) == z_bruteforce(net.graph, 3));
  }

  TEST_CASE("closed form for independent classes equals enumeration") {
    std::mt19937_64 rng(17);
    int literal_mismatches = 0;
    for (int trial = 0; trial < 12; ++trial) {
      const Rational q = nonzero_weight(rng), link = nonzero_weight(rng);
      const Rational a = nonzero_weight(rng), b = nonzero_weight(rng);
      YNetwork net = trial % 3 == 0 ? pair_network(q, link, a, b)
                     : trial % 3 == 1 ? path_network(q, link, a, b)
                                      : triangle_network(q, link, a, b);
      YGadgetReport y = y_closed_forms(q, a, b);
      if (y.all_apart == 0) continue;
      const long n = net.gadget_count(), m = static_cast<long>(net.links.size());
      for (const auto& chosen : independent_subsets(net.source.graph)) {
        const long k = std::count(chosen.begin(), chosen.end(), true);
        const Rational brute = z_sdt_exact(net, patterns_for(chosen));
        CHECK(independent_class_value(net, chosen) == brute);
        Interconnect ic = interconnect_graph(net, chosen);
        CHECK(ic.graph.vertex_count() == 3 * n - m - 2 * k);
        CHECK(ic.loops_dropped == 0);
        const Rational zg = z_bruteforce(ic.graph, q);
        const Rational shape = pow(y.joined, k) * pow(y.all_apart, n - k) * pow(q, -ic.graph.vertex_count()) * zg;
        CHECK(pow(q, -m) * shape == brute);
        if (q != 3 && brute != 0 && pow(Rational(3), -m) * shape != brute) ++literal_mismatches;
      }
    }
    CHECK(literal_mismatches > 0);
  }

  TEST_CASE("interconnect checks: worked examples") {
    GammaReport path = gamma_check(fixture::graph(3, {{0, 1}, {1, 2}}), 6, r("-1/10"));
    CHECK(path.value == r("20886/100"));
    CHECK(path.value > pow(r("11/2"), 3));
    CHECK(path.holds);
    GammaReport tri = gamma_check(fixture::cycle(3), -1, r("-1/2"));
    REQUIRE(tri.coefficients.coeff.size() == 4);
    CHECK(tri.coefficients.coeff[3] == 1);
    CHECK(tri.coefficients.coeff[2] == r("-3/2"));
    CHECK(tri.coefficients.coeff[1] == r("5/8"));
    CHECK(tri.coefficients.coeff[0] == 0);
    CHECK(-tri.value == r("25/8"));
    CHECK(tri.holds);
    GammaReport empty = gamma_check(WeightedMultigraph(4), -1, r("-1/2"));
    CHECK(empty.value == 1);
    CHECK(empty.coefficients.coeff[4] == 1);
    CHECK(empty.holds);
    CHECK_THROWS_WITH(gamma_check(fixture::graph(1, {{0, 0}}), 6, r("-1/10")), doctest::Contains("loops"));
    CHECK_THROWS(gamma_check(fixture::cycle(3), 3, r("-1/10")));
    CHECK_THROWS(gamma_check(fixture::cycle(3), 6, -2));
    CHECK_THROWS(gamma_check(fixture::cycle(3), -1, r("1/2")));
  }

  TEST_CASE("interconnect coefficients agree with direct evaluation") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
      WeightedMultigraph g = fixture::random_simple(rng, 1 + static_cast<int>(rng() % 7), 0.5);
      const Rational link = -Rational(static_cast<long>(rng() % 8)) / 4;
      GammaReport rep = gamma_check(g, -1, link);
      WeightedMultigraph w = g;
      w.set_all_weights(link);
      CHECK(rep.value == z_bruteforce(w, -1));
      CHECK(rep.coefficients.at(r("-7/3")) == z_bruteforce(w, r("-7/3")));
    }
  }

  TEST_CASE("interconnect checks on every independent set of the stretched K4") {
    for (auto [q, link] : {std::pair{Rational(6), r("-1/10")}, std::pair{Rational(-1), r("-1/2")}}) {
      ParamSet p = param_set(q, 16, 18, 7);
      YNetwork net = assemble_ghat(fixture::complete(4), 7, q, link, 1, -10, p);
      std::uint64_t checked = 0;
      for (const auto& chosen : independent_subsets(net.source.graph)) {
        const long k = std::count(chosen.begin(), chosen.end(), true);
        Interconnect ic = interconnect_graph(net, chosen);
        CHECK(ic.graph.vertex_count() == 30 - 2 * k);
        GammaReport rep = gamma_check(ic.graph, q, link);
        CHECK_MESSAGE(rep.holds, rep.failure);
        CHECK(abs(rep.value) >= pow(p.chi.safe(), ic.graph.vertex_count()));
        ++checked;
      }
      std::uint64_t expected = 0;
      for (auto c : mis_oracle(net.source.graph).count_by_size) expected += c;
      CHECK(checked == expected);
    }
  }

  TEST_CASE("alternating coefficients on random loopless graphs at q=-1") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 50; ++trial) {
      WeightedMultigraph g = fixture::random_simple(rng, 1 + static_cast<int>(rng() % 8), 0.45);
      GammaReport rep = gamma_check(g, -1, r("-1/2"));
      CHECK_MESSAGE(rep.holds, rep.failure);
    }
  }

  TEST_CASE("certified interval contains the enumerated value on toy assemblies") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 8; ++trial) {
      const Rational q = nonzero_weight(rng);
      YNetwork net = trial % 2 ? pair_network(q, nonzero_weight(rng), nonzero_weight(rng), nonzero_weight(rng))
                               : path_network(q, nonzero_weight(rng), nonzero_weight(rng), nonzero_weight(rng));
      if (y_closed_forms(q, net.triangle_weight, net.spoke_weight).all_apart == 0) continue;
      CertifiedValue c = z_ghat_certified(net, {}, 2);
      const Rational z = z_bruteforce(net.graph, q);
      CHECK(c.value.contains(z));
      // The slack covers exactly the classes left out of the exact part.
      CHECK(abs(z - c.exact_part) <= c.slack);
    }
  }

  TEST_CASE("decision rule") {
    const Rational psi = 100;
    CHECK(decide_mis({r("90"), r("110")}, psi) == Verdict::Yes);
    CHECK(decide_mis({r("-110"), r("-90")}, psi) == Verdict::Yes);
    CHECK(decide_mis({0, 20}, psi) == Verdict::No);
    CHECK(decide_mis({r("100/3"), 50}, psi) == Verdict::Indeterminate);
    CHECK(decide_mis({-1, 80}, psi) == Verdict::Indeterminate);
    CHECK(decide_mis({75, 75}, psi) == Verdict::Yes);
    CHECK(decide_mis({-25, 25}, psi) == Verdict::No);
    CHECK_THROWS(decide_mis({0, 1}, 0));
  }

  TEST_CASE("stretched K4 verdicts follow the MIS oracle") {
    const WeightedMultigraph h = fixture::complete(4);
    const MisReport oracle = mis_oracle(three_stretch(embedded(h)));
    const int mis = oracle.max_size;
    CHECK(mis == 7);
    BasePoints base = BasePoints::from_y(6, Rational(2), r("1/2"), Rational(-2));
    for (int K : {6, 7, 8}) {
      CAPTURE(K);
      MisCompilation c = compile_mis(h, K, 6, base);
      CHECK(validate_weights(c.net).empty());
      CertifiedValue cv = z_ghat_certified(c.net);
      const Rational sixteenth = c.net.threshold / 16;
      for (const ClassBound& b : cv.ledger) {
        CHECK(b.displayed <= sixteenth);
        CHECK(b.structural <= sixteenth);
      }
      for (std::size_t k = 0; k < cv.independent_by_size.size(); ++k) {
        CHECK(cv.independent_by_size[k] == (k < oracle.count_by_size.size() ? oracle.count_by_size[k] : 0));
      }
      CHECK(decide_mis(cv.value, c.net.threshold) == (mis >= K ? Verdict::Yes : Verdict::No));
    }
  }

  TEST_CASE("colouring reduction worked examples") {
    ColouringReduction t = reduce_colouring(fixture::cycle(3), -5, r("1/2"));
    CHECK(t.k_formula == 7);
    CHECK(t.k == 8);
    CHECK(t.colour_value == 6 + 18 * pow(r("1/2"), 8) + 3 * pow(r("1/2"), 24));
    CHECK(t.colour_value == t.tutte_value);
    CHECK(t.colourable);
    CHECK(t.thickened.edge_count() == 24);

    ColouringReduction k4 = reduce_colouring(fixture::complete(4), -5, r("1/2"));
    CHECK(k4.k_formula == 9);
    CHECK(k4.k == 10);
    CHECK(k4.gap == r("81/1024"));
    CHECK(k4.gap <= r("1/4"));
    CHECK(k4.colour_value <= k4.gap);
    CHECK(k4.colour_value == k4.tutte_value);
    CHECK_FALSE(k4.colourable);

    // Every monochromatic exponent of the thickened graph is even.
    auto census = monochromatic_census(k4.thickened, 3);
    for (std::size_t j = 0; j < census.size(); ++j) {
      if (j % 2) CHECK(census[j] == 0);
    }
    CHECK_THROWS_WITH(reduce_colouring(fixture::cycle(3), -5, r("1/3")), doctest::Contains("not on"));
    CHECK_THROWS(reduce_colouring(fixture::cycle(3), -2, 0));
    CHECK_THROWS(reduce_colouring(fixture::cycle(3), r("-1/2"), -1));
  }

  TEST_CASE("colouring verdicts match brute force on small planar graphs") {
    std::mt19937_64 rng(77);
    int checked = 0, colourable = 0;
    while (checked < 30) {
      const int n = 3 + static_cast<int>(rng() % 8);
      WeightedMultigraph g = fixture::random_simple(rng, n, 0.55);
      if (!planarity_embed(g)) continue;
      const bool truth = three_colourable(g);
      const Rational y = checked % 2 ? r("1/2") : r("-1/2");
      const Rational x = 1 + 3 / (y - 1);
      ColouringReduction c = reduce_colouring(g, x, y);
      CHECK(c.k % 2 == 0);
      CHECK(c.colourable == truth);
      CHECK(c.colour_value == c.tutte_value);
      colourable += truth;
      ++checked;
    }
    CHECK(colourable > 0);
    CHECK(colourable < checked);
  }

  TEST_CASE("shift pipeline: identity and small compositions") {
    WeightedMultigraph tri = fixture::cycle(3, Rational(2));
    Implementation same = make_implementation(Gadget::edge(2), 5, 2);
    PipelineResult id = shift_pipeline(tri, 5, {same, same, same});
    CHECK(id.scale == 1);
    CHECK(id.graph.edge_count() == 3);
    CHECK(z_bruteforce(id.graph, 5) == z_bruteforce(tri, 5));

    for (Rational q : {Rational(2), r("-3/2"), Rational(7)}) {
      Implementation par = make_implementation(Gadget::parallel(Gadget::edge(1), Gadget::edge(1)), q, 3);
      WeightedMultigraph host = fixture::graph(2, {{0, 1}}, Rational(3));
      PipelineResult p = shift_pipeline(host, q, {par, par, par});
      CHECK(p.scale == 1);
      CHECK(z_bruteforce(p.graph, q) == z_bruteforce(host, q));
    }

    Implementation ser = make_implementation(Gadget::series(Gadget::edge(2), Gadget::edge(2)), 2, r("2/3"));
    CHECK(ser.effective_weight == r("2/3"));
    CHECK(ser.scale == 6);
    WeightedMultigraph two = fixture::graph(3, {{0, 1}, {1, 2}}, r("2/3"));
    PipelineResult s = shift_pipeline(two, 2, {ser, ser, ser});
    CHECK(s.scale == 36);
    CHECK(z_bruteforce(s.graph, 2) == 36 * z_bruteforce(two, 2));
    CHECK(naive_z(s.graph, 2) == s.scale * naive_z(two, 2));

    WeightedMultigraph wrong = fixture::graph(2, {{0, 1}}, Rational(5));
    CHECK_THROWS_WITH(shift_pipeline(wrong, 2, {ser, ser, ser}), doctest::Contains("matches no certificate"));
  }

  TEST_CASE("shift pipeline with a certificate") {
    ShiftCertificate c = shift_certificate(-2, -2);
    const Rational& q = c.q;
    WeightedMultigraph host(3);
    host.add_edge(0, 1, c.first.effective_weight);
    host.add_edge(1, 2, c.second.effective_weight);
    host.add_edge(2, 0, c.third.effective_weight);
    host = embedded(host);
    PipelineResult p = shift_pipeline(host, q, {c.first, c.second, c.third});
    CHECK(p.base_weight == -3);
    CHECK(p.graph.rotation().has_value());
    for (const Rational& w : p.graph.weights()) CHECK(w == -3);
    CHECK(z_delcon(p.graph, q) == p.scale * z_delcon(host, q));
    CHECK(p.base_x == -2);
    CHECK(p.base_y == -2);
    CHECK(z_delcon(p.graph, q) == p.tutte_factor * tutte_eval(p.graph, p.base_x, p.base_y));
  }
}
