#pragma once

#include "tutte/graph.hpp"

#include <random>
#include <utility>
#include <vector>

namespace fixture {

using tutte::Rational;
using tutte::WeightedMultigraph;

inline Rational r(const char* s) { return tutte::parse_rational(s); }

inline WeightedMultigraph graph(int n, const std::vector<std::pair<int, int>>& edges,
                                const Rational& w = Rational(1)) {
  WeightedMultigraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v, w);
  return g;
}

inline WeightedMultigraph cycle(int n, const Rational& w = Rational(1)) {
  WeightedMultigraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, w);
  return g;
}

inline WeightedMultigraph complete(int n, const Rational& w = Rational(1)) {
  WeightedMultigraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j, w);
  }
  return g;
}

inline WeightedMultigraph k33() {
  WeightedMultigraph g(6);
  for (int i = 0; i < 3; ++i) {
    for (int j = 3; j < 6; ++j) g.add_edge(i, j);
  }
  return g;
}

/// Rational with numerator in [-lim, lim] and denominator in [1, den].
inline Rational random_rational(std::mt19937_64& rng, int lim = 5, int den = 4) {
  std::uniform_int_distribution<int> num(-lim, lim), d(1, den);
  Rational x(num(rng), d(rng));
  x.canonicalize();
  return x;
}

inline Rational random_nonzero(std::mt19937_64& rng, int lim = 5, int den = 4) {
  Rational x;
  do x = random_rational(rng, lim, den);
  while (x == 0);
  return x;
}

/// Multigraph with loops and parallel edges allowed.
inline WeightedMultigraph random_multigraph(std::mt19937_64& rng, int max_n, int max_m, bool weighted = true) {
  std::uniform_int_distribution<int> nd(1, max_n), md(0, max_m);
  const int n = nd(rng);
  const int m = md(rng);
  std::uniform_int_distribution<int> vd(0, n - 1);
  WeightedMultigraph g(n);
  for (int i = 0; i < m; ++i) g.add_edge(vd(rng), vd(rng), weighted ? random_rational(rng) : Rational(1));
  return g;
}

/// Simple graph G(n,p).
inline WeightedMultigraph random_simple(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  WeightedMultigraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) g.add_edge(i, j);
    }
  }
  return g;
}

/// Connected simple graph grown from a random spanning tree.
inline WeightedMultigraph random_connected(std::mt19937_64& rng, int n, double extra) {
  std::bernoulli_distribution coin(extra);
  WeightedMultigraph g(n);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pd(0, v - 1);
    const int u = pd(rng);
    g.add_edge(u, v);
    adj[u][v] = adj[v][u] = 1;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!adj[i][j] && coin(rng)) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace fixture
