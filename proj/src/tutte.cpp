#include "tutte/tutte.hpp"

#include <map>

namespace tutte {

Rational tutte_subset_sum(const WeightedMultigraph& g, const Rational& x, const Rational& y, int edge_cap) {
  const auto census = rank_census(g, edge_cap);
  const int n = g.vertex_count();
  const int kE = g.component_count();
  const Rational xm = x - 1, ym = y - 1;
  Rational total(0);
  for (int k = 0; k < static_cast<int>(census.size()); ++k) {
    for (int j = 0; j < static_cast<int>(census[k].size()); ++j) {
      if (census[k][j] == 0) continue;
      const int ex = k - kE;          // rank deficiency
      const int ey = j - n + k;       // nullity
      // 0^0 = 1 as in the subset expansion
      Rational term = Rational(census[k][j]);
      if (ex) term *= pow(xm, ex);
      if (ey) term *= pow(ym, ey);
      total += term;
    }
  }
  return total;
}

namespace {

// Classical recursion for x=1 or y=1 beyond the census cap: loops give y, bridges x.
class TutteRecursion {
 public:
  TutteRecursion(Rational x, Rational y, long budget) : x_(std::move(x)), y_(std::move(y)), budget_(budget) {}

  Rational eval(std::vector<std::pair<int, int>> edges, int n) {
    if (++calls_ > budget_) throw BudgetExceeded("Tutte recursion budget exceeded");
    Rational factor(1);
    std::vector<std::pair<int, int>> rest;
    for (auto [u, v] : edges) {
      if (u == v) {
        factor *= y_;
      } else {
        rest.emplace_back(std::min(u, v), std::max(u, v));
      }
    }
    if (rest.empty()) return factor;
    std::sort(rest.begin(), rest.end());
    std::string key;
    key += std::to_string(n) + ':';
    for (auto [u, v] : rest) key += std::to_string(u) + ',' + std::to_string(v) + ';';
    if (auto it = memo_.find(key); it != memo_.end()) return factor * it->second;

    const auto [u, v] = rest.back();
    rest.pop_back();
    // bridge test: is v reachable from u without the chosen edge?
    UnionFind uf(n);
    for (auto [a, b] : rest) uf.unite(a, b);
    const bool bridge = uf.find(u) != uf.find(v);
    auto contracted = rest;
    for (auto& [a, b] : contracted) {
      if (a == v) a = u;
      if (b == v) b = u;
    }
    Rational value;
    if (bridge) {
      value = x_ * eval(std::move(contracted), n);
    } else {
      value = eval(rest, n) + eval(std::move(contracted), n);
    }
    memo_.emplace(std::move(key), value);
    return factor * value;
  }

 private:
  Rational x_, y_;
  long budget_;
  long calls_ = 0;
  std::map<std::string, Rational> memo_;
};

}  // namespace

Rational tutte_eval(const WeightedMultigraph& g, const Rational& x, const Rational& y, const EngineOptions& opt,
                    EvalReport* report) {
  Rational value;
  std::string method;
  if (x == 1 || y == 1 || g.edge_count() <= 12) {
    if (g.edge_count() <= opt.brute_force_cap) {
      value = tutte_subset_sum(g, x, y, opt.brute_force_cap);
      method = "subset-sum";
    } else {
      std::vector<std::pair<int, int>> edges;
      for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
      TutteRecursion rec(x, y, opt.call_budget);
      value = rec.eval(std::move(edges), g.vertex_count());
      method = "tutte-recursion";
    }
  } else {
    WeightedMultigraph h = g;
    h.set_all_weights(Rational(y - 1));
    const Rational q = (x - 1) * (y - 1);
    EvalReport sub;
    const Rational z = z_delcon(h, q, opt, &sub);
    value = z * pow(Rational(y - 1), -g.vertex_count()) * pow(Rational(x - 1), -g.component_count());
    method = "random-cluster";
    if (report) {
      report->calls = sub.calls;
      report->memo_hits = sub.memo_hits;
    }
  }
  if (report) {
    report->value = value;
    report->method = method;
  }
  return value;
}

Rational chromatic_flow_eval(const WeightedMultigraph& g, const Rational& lambda, Specialization which,
                             const EngineOptions& opt) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const int k = g.component_count();
  if (which == Specialization::Chromatic) {
    const Rational t = tutte_eval(g, Rational(1 - lambda), Rational(0), opt);
    const Rational s = ((n - k) % 2) ? Rational(-1) : Rational(1);
    return s * pow(lambda, k) * t;
  }
  const Rational t = tutte_eval(g, Rational(0), Rational(1 - lambda), opt);
  const Rational s = ((m - n + k) % 2) ? Rational(-1) : Rational(1);
  return s * t;
}

std::vector<Integer> monochromatic_census(const WeightedMultigraph& g, int q, long budget) {
  if (q < 1) throw Error("colour count must be positive");
  const int n = g.vertex_count();
  double total = 1;
  for (int i = 0; i < n; ++i) total *= q;
  if (total > static_cast<double>(budget)) throw BudgetExceeded("colouring enumeration budget exceeded");
  std::vector<std::uint64_t> hist(g.edge_count() + 1, 0);
  std::vector<int> colour(n, 0);
  while (true) {
    int mono = 0;
    for (const Edge& e : g.edges()) mono += colour[e.u] == colour[e.v];
    ++hist[mono];
    int i = 0;
    while (i < n && ++colour[i] == q) colour[i++] = 0;
    if (i == n) break;
  }
  std::vector<Integer> out;
  for (auto h : hist) out.emplace_back(std::to_string(h));
  return out;
}

Rational colour_sum(const WeightedMultigraph& g, int q, const Rational& y, long budget) {
  const auto census = monochromatic_census(g, q, budget);
  Rational total(0), p(1);
  for (const auto& c : census) {
    total += Rational(c) * p;
    p *= y;
  }
  return total;
}

}  // namespace tutte
