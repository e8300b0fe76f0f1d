#include "tutte/mis.hpp"

#include <bit>
#include <unordered_map>

namespace tutte {

namespace {

using Poly = std::vector<std::uint64_t>;

struct Counter {
  std::vector<std::uint64_t> closed_nbhd;
  std::unordered_map<std::uint64_t, Poly> memo;

  Poly count(std::uint64_t cand) {
    if (cand == 0) return {1};
    if (auto it = memo.find(cand); it != memo.end()) return it->second;
    const int v = std::countr_zero(cand);
    Poly without = count(cand & ~(std::uint64_t{1} << v));
    Poly with = count(cand & ~closed_nbhd[v]);
    if (with.size() + 1 > without.size()) without.resize(with.size() + 1, 0);
    for (std::size_t k = 0; k < with.size(); ++k) without[k + 1] += with[k];
    memo.emplace(cand, without);
    return without;
  }
};

}  // namespace

MisReport mis_oracle(const WeightedMultigraph& g, int vertex_cap) {
  const int n = g.vertex_count();
  if (n > vertex_cap || n > 64) throw Error("mis_oracle: vertex cap exceeded");
  Counter c;
  c.closed_nbhd.assign(n, 0);
  std::uint64_t cand = 0;
  for (int v = 0; v < n; ++v) {
    c.closed_nbhd[v] |= std::uint64_t{1} << v;
    cand |= std::uint64_t{1} << v;
  }
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      cand &= ~(std::uint64_t{1} << e.u);
      continue;
    }
    c.closed_nbhd[e.u] |= std::uint64_t{1} << e.v;
    c.closed_nbhd[e.v] |= std::uint64_t{1} << e.u;
  }
  MisReport r;
  r.count_by_size = c.count(cand);
  while (r.count_by_size.size() > 1 && r.count_by_size.back() == 0) r.count_by_size.pop_back();
  r.max_size = static_cast<int>(r.count_by_size.size()) - 1;
  r.count_at_max = r.count_by_size.back();
  return r;
}

}  // namespace tutte
