#pragma once

#include "tutte/graph.hpp"

#include <map>
#include <string>
#include <vector>

namespace tutte {

/// Polynomial in q with rational coefficients; coeff[j] multiplies q^j.
struct QPoly {
  std::vector<Rational> coeff;

  QPoly() = default;
  explicit QPoly(Rational c) : coeff{std::move(c)} {}
  static QPoly q_power(int k);

  int degree() const;
  Rational at(const Rational& q) const;
  void trim();

  QPoly& operator+=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b);
};

/// Restricted growth string over an ordered terminal list: block label per terminal.
using PartitionKey = std::vector<int>;
std::string partition_name(const PartitionKey& key);  // e.g. "0|12"

template <class V>
using PartitionMap = std::map<PartitionKey, V>;

struct EngineOptions {
  long call_budget = 50'000'000;
  int brute_force_cap = 24;
};

struct EvalReport {
  Rational value;
  std::string method;
  long subsets = 0;
  long calls = 0;
  long memo_hits = 0;
};

/// Z(G;q,w) = sum over A of w(A) q^k(A), with the graph's own edge weights.
Rational z_bruteforce(const WeightedMultigraph& g, const Rational& q, int edge_cap = 24,
                      EvalReport* report = nullptr);

/// Memoized deletion-contraction with loop, leaf, series, parallel and component reductions.
Rational z_delcon(const WeightedMultigraph& g, const Rational& q, const EngineOptions& opt = {},
                  EvalReport* report = nullptr);

enum class Method { Auto, BruteForce, DelCon };

/// Contribution of each induced terminal partition; values sum to Z.
PartitionMap<Rational> z_terminal_partitions(const WeightedMultigraph& g, const Rational& q,
                                             const std::vector<int>& terminals,
                                             Method method = Method::Auto,
                                             const EngineOptions& opt = {});

/// Z(G;q,w) as a polynomial in q for fixed edge weights.
QPoly z_polynomial(const WeightedMultigraph& g, const EngineOptions& opt = {});

/// Subset census keyed by (components, edges taken), no weights involved.
/// counts[k][j] = number of A with k(A)=k and |A|=j.
std::vector<std::vector<Integer>> rank_census(const WeightedMultigraph& g, int edge_cap = 24);

}  // namespace tutte
