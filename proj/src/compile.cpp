#include "tutte/planarity.hpp"
#include "tutte/reduction.hpp"

namespace tutte {

MisCompilation compile_mis(const WeightedMultigraph& h, int K, const Rational& q, const BasePoints& base,
                           const std::optional<std::pair<Rational, Rational>>& relaxed) {
  if (!is_cubic(h)) throw Error("compile_mis: graph is not cubic");
  if (!base.second) throw Error("compile_mis: need a base point with -1 < y < 1 for the link weight");
  const long n = h.vertex_count() + 2L * h.edge_count();
  const long m = 3L * h.edge_count();
  ParamSet params = relaxed ? param_set_relaxed(q, n, m, K, relaxed->first, relaxed->second)
                            : param_set(q, n, m, K);
  Synthesis tri = implement_a(params, base);
  const Rational& a = tri.impl.effective_weight;
  Synthesis spoke = implement_b(q, a, params.delta.safe(), base);
  Implementation link = implement_beta(*base.second, q, params.delta.safe());
  YNetwork net = assemble_ghat(h, K, q, link.effective_weight, a, spoke.impl.effective_weight, params);
  return {std::move(params), std::move(tri), std::move(spoke), std::move(link), std::move(net)};
}

}  // namespace tutte
