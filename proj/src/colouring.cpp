#include "tutte/reduction.hpp"
#include "tutte/tutte.hpp"

namespace tutte {

ColouringReduction reduce_colouring(const WeightedMultigraph& g, const Rational& x, const Rational& y,
                                    const EngineOptions& opt) {
  if ((x - 1) * (y - 1) != 3) throw Error("point is not on (x-1)(y-1) = 3");
  if (y == 0) throw Error("y = 0 is excluded");
  if (y <= -1 || y >= 1) throw Error("need -1 < y < 1; use the dual point (y, x)");
  ColouringReduction r;
  const long n = g.vertex_count();
  const Rational target = 1 / (4 * pow(Rational(3), n));
  const Rational ay = abs(y);
  r.k_formula = least_power(ay, 1, 1'000'000, [&](const Rational& p) { return p <= target; });
  r.k = r.k_formula + (r.k_formula % 2);
  r.gap = pow(Rational(3), n) * pow(ay, r.k);

  r.thickened = WeightedMultigraph(g.vertex_count());
  for (const Edge& e : g.edges()) {
    for (long i = 0; i < r.k; ++i) r.thickened.add_edge(e.u, e.v);
  }
  r.colour_value = colour_sum(g, 3, pow(y, r.k));
  const Rational t = tutte_eval(r.thickened, x, y, opt);
  r.tutte_value = pow(x - 1, r.thickened.component_count()) * pow(y - 1, n) * t;
  if (r.colour_value != r.tutte_value) throw Error("colour sum and Tutte route disagree");
  if (r.colour_value >= 1) {
    r.colourable = true;
  } else if (r.colour_value <= r.gap) {
    r.colourable = false;
  } else {
    throw Error("value between 3^n |y|^k and 1");
  }
  return r;
}

}  // namespace tutte
