#include "tutte/engine.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace tutte {

// ---------------------------------------------------------------------------
// QPoly

QPoly QPoly::q_power(int k) {
  QPoly p;
  p.coeff.assign(k + 1, Rational(0));
  p.coeff[k] = 1;
  return p;
}

int QPoly::degree() const {
  for (int j = static_cast<int>(coeff.size()) - 1; j >= 0; --j) {
    if (coeff[j] != 0) return j;
  }
  return -1;
}

Rational QPoly::at(const Rational& q) const {
  Rational acc(0);
  for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = acc * q + *it;
  return acc;
}

void QPoly::trim() {
  while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (coeff.size() < o.coeff.size()) coeff.resize(o.coeff.size(), Rational(0));
  for (std::size_t j = 0; j < o.coeff.size(); ++j) coeff[j] += o.coeff[j];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly r;
  if (a.coeff.empty() || b.coeff.empty()) return r;
  r.coeff.assign(a.coeff.size() + b.coeff.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeff.size(); ++i) {
    if (a.coeff[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeff.size(); ++j) r.coeff[i + j] += a.coeff[i] * b.coeff[j];
  }
  r.trim();
  return r;
}

bool operator==(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  x.trim();
  y.trim();
  return x.coeff == y.coeff;
}

std::string partition_name(const PartitionKey& key) {
  int blocks = 0;
  for (int b : key) blocks = std::max(blocks, b + 1);
  std::string out;
  for (int b = 0; b < blocks; ++b) {
    if (b) out += '|';
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (key[i] == b) out += std::to_string(i);
    }
  }
  return out;
}

namespace {

PartitionKey canonical_rgs(const std::vector<int>& labels) {
  PartitionKey out(labels.size());
  std::vector<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    int found = -1;
    for (const auto& [lab, id] : seen) {
      if (lab == labels[i]) found = id;
    }
    if (found < 0) {
      found = static_cast<int>(seen.size());
      seen.emplace_back(labels[i], found);
    }
    out[i] = found;
  }
  return out;
}

void all_rgs(int t, PartitionKey& cur, int blocks, std::vector<PartitionKey>& out) {
  if (static_cast<int>(cur.size()) == t) {
    out.push_back(cur);
    return;
  }
  for (int b = 0; b <= blocks; ++b) {
    cur.push_back(b);
    all_rgs(t, cur, std::max(blocks, b + 1), out);
    cur.pop_back();
  }
}

std::vector<PartitionKey> all_partitions(int t) {
  std::vector<PartitionKey> out;
  PartitionKey cur;
  all_rgs(t, cur, 0, out);
  return out;
}

void check_terminals(const WeightedMultigraph& g, const std::vector<int>& terminals) {
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    if (terminals[i] < 0 || terminals[i] >= g.vertex_count()) throw Error("terminal out of range");
    for (std::size_t j = 0; j < i; ++j) {
      if (terminals[i] == terminals[j]) throw Error("terminals must be distinct");
    }
  }
}

// ---------------------------------------------------------------------------
// Subset enumeration with an undoable union-find: every subset costs O(1)
// amortized unions instead of a fresh component count.

class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int n) : parent_(n), size_(n, 1), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      history_.push_back(-1);
      return;
    }
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --sets_;
    history_.push_back(b);
  }
  void undo() {
    const int b = history_.back();
    history_.pop_back();
    if (b < 0) return;
    size_[parent_[b]] -= size_[b];
    parent_[b] = b;
    ++sets_;
  }
  int sets() const { return sets_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
  int sets_;
};

template <class Leaf>
void enumerate_subsets(const WeightedMultigraph& g, RollbackUnionFind& uf, int i, long code,
                       const std::vector<long>& stride, Leaf& leaf) {
  if (i == g.edge_count()) {
    leaf(code);
    return;
  }
  enumerate_subsets(g, uf, i + 1, code, stride, leaf);
  uf.unite(g.edge(i).u, g.edge(i).v);
  enumerate_subsets(g, uf, i + 1, code + stride[i], stride, leaf);
  uf.undo();
}

long terminal_code(const RollbackUnionFind& uf, const std::vector<int>& terminals) {
  const long t = static_cast<long>(terminals.size());
  int roots[8], labels[8];
  int blocks = 0;
  long code = 0, place = 1;
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    roots[i] = uf.find(terminals[i]);
    labels[i] = -1;
    for (std::size_t j = 0; j < i; ++j) {
      if (roots[j] == roots[i]) {
        labels[i] = labels[j];
        break;
      }
    }
    if (labels[i] < 0) labels[i] = blocks++;
    code += labels[i] * place;
    place *= t;
  }
  return code;
}

PartitionKey decode_terminal_code(long code, std::size_t t) {
  PartitionKey k(t);
  for (std::size_t i = 0; i < t; ++i) {
    k[i] = static_cast<int>(code % static_cast<long>(t));
    code /= static_cast<long>(t);
  }
  return k;
}

PartitionMap<Rational> brute_partitions(const WeightedMultigraph& g, const Rational& q,
                                        const std::vector<int>& terminals, int edge_cap, long* subsets) {
  const int m = g.edge_count();
  const int n = g.vertex_count();
  if (m > edge_cap) throw Error("brute force: edge cap exceeded");
  if (terminals.size() > 6) throw Error("brute force: too many terminals");
  check_terminals(g, terminals);

  std::map<Rational, int> class_id;
  std::vector<Rational> class_weight;
  std::vector<int> class_size;
  std::vector<int> class_of(m);
  for (int e = 0; e < m; ++e) {
    auto [it, fresh] = class_id.emplace(g.weight(e), static_cast<int>(class_weight.size()));
    if (fresh) {
      class_weight.push_back(g.weight(e));
      class_size.push_back(0);
    }
    class_of[e] = it->second;
    ++class_size[it->second];
  }
  const int classes = static_cast<int>(class_weight.size());
  std::vector<long> class_stride(classes);
  long exps = 1;
  bool fits = true;
  for (int c = 0; c < classes; ++c) {
    class_stride[c] = exps;
    if (exps > (1L << 22) / (class_size[c] + 1)) {
      fits = false;
      break;
    }
    exps *= class_size[c] + 1;
  }
  const long t = static_cast<long>(terminals.size());
  long tcodes = 1;
  for (long i = 0; i < t; ++i) tcodes *= t;
  fits = fits && exps * tcodes * (n + 1) <= (1L << 22);

  RollbackUnionFind uf(n);
  std::vector<Rational> qpow(n + 1);
  qpow[0] = 1;
  for (int k = 1; k <= n; ++k) qpow[k] = qpow[k - 1] * q;
  PartitionMap<Rational> out;

  if (fits) {
    std::vector<long> stride(m);
    for (int e = 0; e < m; ++e) stride[e] = class_stride[class_of[e]];
    std::vector<std::uint64_t> buckets(static_cast<std::size_t>(exps * tcodes * (n + 1)), 0);
    auto leaf = [&](long code) {
      const long tc = t ? terminal_code(uf, terminals) : 0;
      ++buckets[(static_cast<std::size_t>(uf.sets()) * exps + code) * tcodes + tc];
    };
    enumerate_subsets(g, uf, 0, 0, stride, leaf);
    std::vector<std::vector<Rational>> wpow(classes);
    for (int c = 0; c < classes; ++c) {
      wpow[c].resize(class_size[c] + 1);
      wpow[c][0] = 1;
      for (int k = 1; k <= class_size[c]; ++k) wpow[c][k] = wpow[c][k - 1] * class_weight[c];
    }
    for (std::size_t idx = 0; idx < buckets.size(); ++idx) {
      if (!buckets[idx]) continue;
      const long tc = static_cast<long>(idx % tcodes);
      const long code = static_cast<long>(idx / tcodes) % exps;
      const int kappa = static_cast<int>(idx / tcodes / exps);
      Rational term = qpow[kappa];
      for (int c = 0; c < classes; ++c) term *= wpow[c][(code / class_stride[c]) % (class_size[c] + 1)];
      term *= Rational(Integer(std::to_string(buckets[idx])));
      out[decode_terminal_code(tc, terminals.size())] += term;
    }
  } else {
    // too many weight classes to bucket: carry the running product instead
    std::vector<Rational> prod(m + 1);
    prod[0] = 1;
    std::map<long, Rational> acc;
    auto walk = [&](auto&& self, int i) -> void {
      if (i == m) {
        const long tc = t ? terminal_code(uf, terminals) : 0;
        acc[tc] += prod[i] * qpow[uf.sets()];
        return;
      }
      prod[i + 1] = prod[i];
      self(self, i + 1);
      prod[i + 1] = prod[i] * g.weight(i);
      uf.unite(g.edge(i).u, g.edge(i).v);
      self(self, i + 1);
      uf.undo();
    };
    walk(walk, 0);
    for (auto& [tc, v] : acc) out[decode_terminal_code(tc, terminals.size())] += v;
  }
  if (subsets) *subsets = 1L << m;
  return out;
}

// ---------------------------------------------------------------------------
// Deletion-contraction over an abstract value algebra.

template <class V>
struct Ops;

template <>
struct Ops<Rational> {
  static constexpr bool numeric = true;
  Rational q;
  Rational one() const { return Rational(1); }
  Rational qv() const { return q; }
  Rational constant(const Rational& c) const { return c; }
};

template <>
struct Ops<QPoly> {
  static constexpr bool numeric = false;
  Rational q;  // unused
  QPoly one() const { return QPoly(Rational(1)); }
  QPoly qv() const { return QPoly::q_power(1); }
  QPoly constant(const Rational& c) const { return QPoly(c); }
};

class WeightTable {
 public:
  int intern(const Rational& w) {
    auto [it, fresh] = ids_.emplace(w, static_cast<int>(values_.size()));
    if (fresh) values_.push_back(w);
    return it->second;
  }
  const Rational& operator[](int id) const { return values_[id]; }

 private:
  std::vector<Rational> values_;
  std::map<Rational, int> ids_;
};

struct WEdge {
  int u, v, w;
};

struct State {
  int n = 0;
  std::vector<WEdge> edges;
  std::vector<int> term;  // vertex of each terminal; merged terminals share a vertex
};

template <class V>
class DelCon {
 public:
  DelCon(Ops<V> ops, const EngineOptions& opt) : ops_(std::move(ops)), budget_(opt.call_budget) {}

  PartitionMap<V> run(const WeightedMultigraph& g, const std::vector<int>& terminals) {
    check_terminals(g, terminals);
    State s;
    s.n = g.vertex_count();
    for (int e = 0; e < g.edge_count(); ++e) s.edges.push_back({g.edge(e).u, g.edge(e).v, weights_.intern(g.weight(e))});
    s.term = terminals;
    return solve(std::move(s));
  }

  long calls = 0;
  long hits = 0;

 private:
  V qpow(int k) const {
    V r = ops_.one();
    for (int i = 0; i < k; ++i) r = r * ops_.qv();
    return r;
  }

  static void scale(PartitionMap<V>& m, const V& f) {
    for (auto& [k, v] : m) v = f * v;
  }

  // Applies value-preserving reductions until none applies; returns the factor pulled out.
  V simplify(State& s) {
    V factor = ops_.one();
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<WEdge> kept;
      kept.reserve(s.edges.size());
      for (WEdge e : s.edges) {
        const Rational& w = weights_[e.w];
        if (w == 0) continue;
        if (e.u == e.v) {
          factor = factor * ops_.constant(Rational(1 + w));
          continue;
        }
        if (e.u > e.v) std::swap(e.u, e.v);
        kept.push_back(e);
      }
      std::sort(kept.begin(), kept.end(), [](const WEdge& a, const WEdge& b) {
        return a.u != b.u ? a.u < b.u : a.v != b.v ? a.v < b.v : a.w < b.w;
      });
      s.edges.clear();
      for (std::size_t i = 0; i < kept.size();) {
        std::size_t j = i + 1;
        if (j < kept.size() && kept[j].u == kept[i].u && kept[j].v == kept[i].v) {
          Rational y = 1 + weights_[kept[i].w];
          for (; j < kept.size() && kept[j].u == kept[i].u && kept[j].v == kept[i].v; ++j) y *= 1 + weights_[kept[j].w];
          const Rational w = y - 1;
          if (w != 0) s.edges.push_back({kept[i].u, kept[i].v, weights_.intern(w)});
          changed = true;
        } else {
          s.edges.push_back(kept[i]);
        }
        i = j;
      }

      const int n = s.n;
      std::vector<char> is_term(n, 0), touched(n, 0), gone(n, 0), dead(s.edges.size(), 0);
      for (int t : s.term) is_term[t] = 1;
      std::vector<std::vector<int>> inc(n);
      for (std::size_t i = 0; i < s.edges.size(); ++i) {
        inc[s.edges[i].u].push_back(static_cast<int>(i));
        inc[s.edges[i].v].push_back(static_cast<int>(i));
      }
      std::vector<int> merge_into(n, -1);
      for (int x = 0; x < n; ++x) {
        if (is_term[x] || touched[x]) continue;
        const auto& ix = inc[x];
        if (ix.empty()) {
          factor = factor * ops_.qv();
          gone[x] = 1;
          changed = true;
        } else if (ix.size() == 1) {
          const WEdge& e = s.edges[ix[0]];
          const int y = e.u == x ? e.v : e.u;
          if (touched[y]) continue;
          factor = factor * (ops_.qv() + ops_.constant(weights_[e.w]));
          gone[x] = 1;
          dead[ix[0]] = 1;
          touched[y] = 1;
          changed = true;
        } else if (ix.size() == 2 && Ops<V>::numeric) {
          WEdge& e1 = s.edges[ix[0]];
          const WEdge& e2 = s.edges[ix[1]];
          const int a = e1.u == x ? e1.v : e1.u;
          const int b = e2.u == x ? e2.v : e2.u;
          if (touched[a] || touched[b]) continue;
          const Rational& w1 = weights_[e1.w];
          const Rational& w2 = weights_[e2.w];
          const Rational sum = ops_.q + w1 + w2;
          if (sum != 0) {
            factor = factor * ops_.constant(sum);
            e1 = {a, b, weights_.intern(Rational(w1 * w2 / sum))};
            dead[ix[1]] = 1;
          } else {
            factor = factor * ops_.constant(Rational(w1 * w2));
            dead[ix[0]] = dead[ix[1]] = 1;
            merge_into[b] = a;
          }
          gone[x] = 1;
          touched[a] = touched[b] = 1;
          changed = true;
        }
      }
      if (!changed) break;
      std::vector<int> id(n, -1);
      int next = 0;
      for (int v = 0; v < n; ++v) {
        if (!gone[v] && merge_into[v] < 0) id[v] = next++;
      }
      auto map_v = [&](int v) { return id[merge_into[v] >= 0 ? merge_into[v] : v]; };
      std::vector<WEdge> edges;
      for (std::size_t i = 0; i < s.edges.size(); ++i) {
        if (dead[i]) continue;
        edges.push_back({map_v(s.edges[i].u), map_v(s.edges[i].v), s.edges[i].w});
      }
      for (int& t : s.term) t = map_v(t);
      s.edges = std::move(edges);
      s.n = next;
    }
    return factor;
  }

  // Vertices are relabeled terminals-first, then by first appearance; edges sorted.
  static std::string canonical_key(State& s) {
    std::vector<int> id(s.n, -1);
    int next = 0;
    for (int t : s.term) {
      if (id[t] < 0) id[t] = next++;
    }
    for (const WEdge& e : s.edges) {
      if (id[e.u] < 0) id[e.u] = next++;
      if (id[e.v] < 0) id[e.v] = next++;
    }
    for (int v = 0; v < s.n; ++v) {
      if (id[v] < 0) id[v] = next++;
    }
    for (WEdge& e : s.edges) {
      e.u = id[e.u];
      e.v = id[e.v];
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    for (int& t : s.term) t = id[t];
    std::sort(s.edges.begin(), s.edges.end(), [](const WEdge& a, const WEdge& b) {
      return a.u != b.u ? a.u < b.u : a.v != b.v ? a.v < b.v : a.w < b.w;
    });
    std::string key;
    key.reserve(4 * (2 + s.term.size() + 3 * s.edges.size()));
    auto put = [&](int x) { key.append(reinterpret_cast<const char*>(&x), sizeof x); };
    put(s.n);
    put(static_cast<int>(s.term.size()));
    for (int t : s.term) put(t);
    for (const WEdge& e : s.edges) {
      put(e.u);
      put(e.v);
      put(e.w);
    }
    return key;
  }

  PartitionMap<V> solve(State s) {
    if (++calls > budget_) throw BudgetExceeded("deletion-contraction budget exceeded");
    const V factor = simplify(s);

    if (s.edges.empty()) {
      PartitionMap<V> out;
      out[canonical_rgs(s.term)] = factor * qpow(s.n);
      return out;
    }

    UnionFind uf(s.n);
    for (const WEdge& e : s.edges) uf.unite(e.u, e.v);
    if (uf.sets() > 1) {
      PartitionMap<V> out = split_components(s, uf);
      scale(out, factor);
      return out;
    }

    std::string key = canonical_key(s);
    if (auto it = memo_.find(key); it != memo_.end()) {
      ++hits;
      PartitionMap<V> out = it->second;
      scale(out, factor);
      return out;
    }

    const std::size_t pick = choose_edge(s);
    const WEdge e = s.edges[pick];
    State del = s;
    del.edges.erase(del.edges.begin() + static_cast<long>(pick));
    State con = std::move(s);
    con.edges.erase(con.edges.begin() + static_cast<long>(pick));
    contract(con, e.u, e.v);

    PartitionMap<V> result = solve(std::move(del));
    PartitionMap<V> merged = solve(std::move(con));
    const V w = ops_.constant(weights_[e.w]);
    for (auto& [k, v] : merged) {
      auto it = result.find(k);
      if (it == result.end()) {
        result.emplace(k, w * v);
      } else {
        it->second = it->second + w * v;
      }
    }
    memo_.emplace(std::move(key), result);
    scale(result, factor);
    return result;
  }

  // Merges drop into keep; the last vertex moves into drop's slot.
  static void contract(State& s, int keep, int drop) {
    auto remap = [&](int v) {
      if (v == drop) v = keep;
      return v == s.n - 1 ? drop : v;
    };
    for (WEdge& e : s.edges) {
      e.u = remap(e.u);
      e.v = remap(e.v);
    }
    for (int& t : s.term) t = remap(t);
    --s.n;
  }

  std::size_t choose_edge(const State& s) const {
    std::vector<int> deg(s.n, 0);
    std::vector<char> is_term(s.n, 0);
    for (int t : s.term) is_term[t] = 1;
    for (const WEdge& e : s.edges) {
      ++deg[e.u];
      ++deg[e.v];
    }
    int best_v = -1;
    for (int v = 0; v < s.n; ++v) {
      if (deg[v] == 0) continue;
      if (best_v < 0 || (is_term[best_v] && !is_term[v]) ||
          (is_term[best_v] == is_term[v] && deg[v] < deg[best_v])) {
        best_v = v;
      }
    }
    std::size_t pick = 0;
    int best_deg = -1;
    for (std::size_t i = 0; i < s.edges.size(); ++i) {
      const WEdge& e = s.edges[i];
      if (e.u != best_v && e.v != best_v) continue;
      const int other = e.u == best_v ? e.v : e.u;
      if (deg[other] > best_deg) {
        best_deg = deg[other];
        pick = i;
      }
    }
    return pick;
  }

  PartitionMap<V> split_components(const State& s, UnionFind& uf) {
    std::vector<int> comp_of(s.n, -1), local(s.n, -1);
    std::vector<State> parts;
    std::vector<std::vector<int>> part_terms;  // global terminal indices per part
    for (int v = 0; v < s.n; ++v) {
      const int r = uf.find(v);
      if (comp_of[r] < 0) {
        comp_of[r] = static_cast<int>(parts.size());
        parts.emplace_back();
        part_terms.emplace_back();
      }
      State& p = parts[comp_of[r]];
      local[v] = p.n++;
    }
    for (const WEdge& e : s.edges) parts[comp_of[uf.find(e.u)]].edges.push_back({local[e.u], local[e.v], e.w});
    for (std::size_t i = 0; i < s.term.size(); ++i) {
      const int c = comp_of[uf.find(s.term[i])];
      parts[c].term.push_back(local[s.term[i]]);
      part_terms[c].push_back(static_cast<int>(i));
    }

    const int t = static_cast<int>(s.term.size());
    std::vector<std::pair<std::vector<int>, V>> acc{{std::vector<int>(t, -1), ops_.one()}};
    for (std::size_t c = 0; c < parts.size(); ++c) {
      PartitionMap<V> sub = solve(std::move(parts[c]));
      std::vector<std::pair<std::vector<int>, V>> next;
      for (const auto& [labels, val] : acc) {
        for (const auto& [k, v] : sub) {
          std::vector<int> lab = labels;
          for (std::size_t j = 0; j < part_terms[c].size(); ++j) lab[part_terms[c][j]] = static_cast<int>(c) * t + k[j];
          next.emplace_back(std::move(lab), val * v);
        }
      }
      acc = std::move(next);
    }
    PartitionMap<V> out;
    for (auto& [labels, val] : acc) {
      auto key = canonical_rgs(labels);
      auto it = out.find(key);
      if (it == out.end()) {
        out.emplace(std::move(key), std::move(val));
      } else {
        it->second = it->second + val;
      }
    }
    return out;
  }

  Ops<V> ops_;
  long budget_;
  WeightTable weights_;
  std::unordered_map<std::string, PartitionMap<V>> memo_;
};

}  // namespace

Rational z_bruteforce(const WeightedMultigraph& g, const Rational& q, int edge_cap, EvalReport* report) {
  long subsets = 0;
  auto parts = brute_partitions(g, q, {}, edge_cap, &subsets);
  Rational z = parts.empty() ? Rational(0) : parts.begin()->second;
  if (report) {
    report->value = z;
    report->method = "bruteforce";
    report->subsets = subsets;
  }
  return z;
}

Rational z_delcon(const WeightedMultigraph& g, const Rational& q, const EngineOptions& opt, EvalReport* report) {
  DelCon<Rational> dc(Ops<Rational>{q}, opt);
  auto parts = dc.run(g, {});
  Rational z = parts.empty() ? Rational(0) : parts.begin()->second;
  if (report) {
    report->value = z;
    report->method = "delcon";
    report->calls = dc.calls;
    report->memo_hits = dc.hits;
  }
  return z;
}

PartitionMap<Rational> z_terminal_partitions(const WeightedMultigraph& g, const Rational& q,
                                             const std::vector<int>& terminals, Method method,
                                             const EngineOptions& opt) {
  PartitionMap<Rational> raw;
  const bool brute = method == Method::BruteForce ||
                     (method == Method::Auto && g.edge_count() <= 12 && terminals.size() <= 6);
  if (brute) {
    raw = brute_partitions(g, q, terminals, opt.brute_force_cap, nullptr);
  } else {
    DelCon<Rational> dc(Ops<Rational>{q}, opt);
    raw = dc.run(g, terminals);
  }
  PartitionMap<Rational> out;
  for (const auto& key : all_partitions(static_cast<int>(terminals.size()))) {
    auto it = raw.find(key);
    out[key] = it == raw.end() ? Rational(0) : it->second;
  }
  return out;
}

QPoly z_polynomial(const WeightedMultigraph& g, const EngineOptions& opt) {
  DelCon<QPoly> dc(Ops<QPoly>{}, opt);
  auto parts = dc.run(g, {});
  QPoly p = parts.empty() ? QPoly() : parts.begin()->second;
  p.trim();
  return p;
}

std::vector<std::vector<Integer>> rank_census(const WeightedMultigraph& g, int edge_cap) {
  const int m = g.edge_count();
  const int n = g.vertex_count();
  if (m > edge_cap) throw Error("subset census: edge cap exceeded");
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n + 1) * (m + 1), 0);
  RollbackUnionFind uf(n);
  std::vector<long> stride(m, 1);
  auto leaf = [&](long taken) { ++counts[static_cast<std::size_t>(uf.sets()) * (m + 1) + taken]; };
  enumerate_subsets(g, uf, 0, 0, stride, leaf);
  std::vector<std::vector<Integer>> out(n + 1, std::vector<Integer>(m + 1, 0));
  for (int k = 0; k <= n; ++k) {
    for (int j = 0; j <= m; ++j) out[k][j] = Integer(std::to_string(counts[static_cast<std::size_t>(k) * (m + 1) + j]));
  }
  return out;
}

}  // namespace tutte
