#include "tutte/reduction.hpp"

namespace tutte {

YGadgetReport y_closed_forms(const Rational& q, const Rational& a, const Rational& b) {
  if (q == 0) throw Error("q must be nonzero");
  YGadgetReport r;
  r.q = q;
  r.a = a;
  r.b = b;
  r.c = a * a + 3 * a + q;
  r.d = r.c + b;
  r.e = a * a * a + 3 * a * a - q;
  r.joined = q * a * a * (a + 3) * b * b * b;
  r.one_apart = q * q * a * b * b * r.d;
  r.all_apart = q * q * q *
                (b * b * b + 3 * b * b * (2 * a + q) + (3 * b + q) * (a * a * a + 3 * a * a + 3 * a * q + q * q));
  return r;
}

WeightedMultigraph y_gadget(const Rational& a, const Rational& b) {
  WeightedMultigraph g(6);
  for (int k = 0; k < 3; ++k) g.add_edge(k, k + 3, b);
  g.add_edge(3, 4, a);
  g.add_edge(4, 5, a);
  g.add_edge(5, 3, a);
  return g;
}

const char* role_name(EdgeRole r) {
  switch (r) {
    case EdgeRole::Triangle:
      return "a";
    case EdgeRole::Spoke:
      return "b";
    case EdgeRole::Link:
      return "beta";
  }
  return "?";
}

PortPattern y_pattern(unsigned mask) {
  static const int ends[6][2] = {{0, 3}, {1, 4}, {2, 5}, {3, 4}, {4, 5}, {5, 3}};
  UnionFind uf(6);
  for (int e = 0; e < 6; ++e) {
    if (mask >> e & 1u) uf.unite(ends[e][0], ends[e][1]);
  }
  const int r0 = uf.find(0), r1 = uf.find(1), r2 = uf.find(2);
  const int distinct = 1 + (r1 != r0) + (r2 != r0 && r2 != r1);
  return distinct == 1 ? PortPattern::Joined : distinct == 2 ? PortPattern::Pair : PortPattern::Apart;
}

}  // namespace tutte
