#include "tutte/reduction.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <functional>
#include <thread>

namespace tutte {

GammaReport gamma_check(const WeightedMultigraph& gamma, const Rational& q, const Rational& link,
                        const EngineOptions& opt) {
  if (gamma.has_loops()) throw Error("gamma_check: graph has loops");
  GammaReport r;
  if (q > 5) {
    const Rational chi = std::min(Rational(1), Rational((q - 5) / 6));
    if (!(q > 5 * abs(link) + chi)) throw Error("gamma_check: need q > 5|beta| + chi");
    r.param_case = 1;
  } else if (q < 0) {
    if (link < -2 || link > 0) throw Error("gamma_check: need -2 <= beta <= 0");
    r.param_case = 2;
  } else {
    throw Error("gamma_check: q must be above 5 or negative");
  }
  WeightedMultigraph g = gamma;
  g.set_all_weights(link);
  const int V = g.vertex_count();
  r.vertices = V;
  r.coefficients = z_polynomial(g, opt);
  r.coefficients.coeff.resize(V + 1, Rational(0));
  for (const Rational& c : r.coefficients.coeff) r.signs.push_back(sign(c));
  r.value = r.coefficients.at(q);

  if (r.param_case == 1) {
    r.lower_bound = pow(q - 5 * abs(link), V);
    if (r.value <= 0) {
      r.holds = false;
      r.failure = "Z = " + to_string(r.value) + " is not positive";
    } else if (r.value < r.lower_bound) {
      r.holds = false;
      r.failure = "Z = " + to_string(r.value) + " below (q-5|beta|)^|V| = " + to_string(r.lower_bound);
    }
    return r;
  }
  r.lower_bound = pow(abs(q), V);
  for (int j = 0; j <= V; ++j) {
    const int parity = (V - j) % 2 == 0 ? 1 : -1;
    if (parity * r.signs[j] < 0) {
      r.holds = false;
      r.failure = "coefficient of q^" + std::to_string(j) + " = " + to_string(r.coefficients.coeff[j]) +
                  " breaks the alternating pattern";
      return r;
    }
  }
  const int top = V % 2 == 0 ? 1 : -1;
  if (r.coefficients.coeff[V] != 1) {
    r.holds = false;
    r.failure = "leading coefficient is " + to_string(r.coefficients.coeff[V]);
  } else if (top * r.value <= 0) {
    r.holds = false;
    r.failure = "(-1)^|V| Z = " + to_string(top * r.value) + " is not positive";
  } else if (abs(r.value) < r.lower_bound) {
    r.holds = false;
    r.failure = "|Z| below |q|^|V|";
  }
  return r;
}

std::vector<std::string> validate_weights(const YNetwork& net) {
  if (!net.params) return {"no constant ledger attached"};
  const ParamSet& p = *net.params;
  const Rational& q = net.q;
  const Rational& a = net.triangle_weight;
  const Rational& b = net.spoke_weight;
  const Rational& link = net.link_weight;
  YGadgetReport y = y_closed_forms(q, a, b);
  std::vector<std::string> bad;
  const Rational delta = p.delta.safe();
  if (!(abs(a) >= p.a_lo.safe() && abs(a) <= p.a_hi.safe())) bad.push_back("|a| outside [A-, A+]");
  if ((q > 0) != (a > 0)) bad.push_back("a on the wrong branch");
  if (!a_accepted(a, q, p.epsilon.safe())) bad.push_back("a^3 + 3a^2 - q outside (eps, 2 eps]");
  if (!(abs(b) >= p.b_lo.safe() && abs(b) <= p.b_hi.safe())) bad.push_back("|b| outside [B-, B+]");
  if (abs(y.d) > delta) bad.push_back("|a^2 + 3a + q + b| exceeds delta");
  if (abs(1 + link) > delta) bad.push_back("|1 + beta| exceeds delta");
  if (delta > 1) bad.push_back("delta above 1");
  return bad;
}

namespace {

// Independent vertex sets of a graph on at most 64 vertices, as bit masks.
std::vector<std::uint64_t> independent_sets(const WeightedMultigraph& g) {
  const int n = g.vertex_count();
  if (n > 64) throw Error("independent-set sweep limited to 64 vertices");
  std::vector<std::uint64_t> nbr(n, 0);
  std::uint64_t looped = 0;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      looped |= std::uint64_t{1} << e.u;
      continue;
    }
    nbr[e.u] |= std::uint64_t{1} << e.v;
    nbr[e.v] |= std::uint64_t{1} << e.u;
  }
  std::vector<std::uint64_t> out;
  std::function<void(int, std::uint64_t, std::uint64_t)> go = [&](int v, std::uint64_t set, std::uint64_t blocked) {
    if (v == n) {
      out.push_back(set);
      return;
    }
    go(v + 1, set, blocked);
    const std::uint64_t bit = std::uint64_t{1} << v;
    if (!(blocked & bit) && !(looped & bit)) go(v + 1, set | bit, blocked | nbr[v]);
  };
  go(0, 0, 0);
  return out;
}

template <class F>
void parallel_for(std::size_t count, int threads, F body) {
  if (threads <= 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<int>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < count; i += threads) body(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

CertifiedValue z_ghat_certified(const YNetwork& net, const EngineOptions& opt, int threads) {
  const Rational& q = net.q;
  const long n = net.gadget_count();
  const long m = static_cast<long>(net.link_edges.size());
  YGadgetReport y = y_closed_forms(q, net.triangle_weight, net.spoke_weight);
  if (y.all_apart == 0) throw Error("degenerate gadget: all-apart value is 0");
  if (net.params) {
    auto bad = validate_weights(net);
    if (!bad.empty()) {
      std::string msg = "weights outside the constant ledger:";
      for (const auto& s : bad) msg += " " + s + ";";
      throw Error(msg);
    }
  }

  const auto sets = independent_sets(net.source.graph);
  std::vector<Rational> z(sets.size());
  parallel_for(sets.size(), threads, [&](std::size_t i) {
    std::vector<bool> chosen(n);
    for (long x = 0; x < n; ++x) chosen[x] = sets[i] >> x & 1u;
    z[i] = z_delcon(interconnect_graph(net, chosen).graph, q, opt);
  });

  CertifiedValue out;
  out.threshold = net.threshold;
  out.independent_by_size.assign(n + 1, 0);
  std::vector<Rational> by_size(n + 1, Rational(0));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const int k = std::popcount(sets[i]);
    by_size[k] += z[i];
    ++out.independent_by_size[k];
  }
  const Rational fugacity = q * q * y.joined / y.all_apart;
  const Rational common = pow(y.all_apart, n) * pow(q, -3 * n);
  const Rational J = abs(y.joined), P = abs(y.one_apart), T = abs(y.all_apart);
  Rational independent_mass = 0;
  out.exact_part = 0;
  for (long k = 0; k <= n; ++k) {
    if (out.independent_by_size[k] == 0) continue;
    Rational v = pow(fugacity, k) * common * by_size[k];
    out.exact_part += v;
    independent_mass += Rational(static_cast<long>(out.independent_by_size[k])) * pow(J, k) * pow(T, n - k);
    out.ledger.push_back({"independent, size " + std::to_string(k), v, Rational(0), Rational(0)});
  }

  const Rational qmax = std::max(Rational(1), abs(q));
  const Rational merge = pow(qmax / abs(q), 2 * m);
  const Rational link_abs = 1 + abs(net.link_weight);
  const Rational pair_structural =
      (pow(3 * P + J + T, n) - pow(J + T, n)) * merge * pow(link_abs, m);
  const Rational dependent_structural =
      m == 0 ? Rational(0)
             : Rational(abs(1 + net.link_weight) * pow(link_abs, m - 1) * merge * (pow(J + T, n) - independent_mass));

  Rational pair_displayed = 0, dependent_displayed = 0, below_displayed = 0;
  if (net.params) {
    const ParamSet& p = *net.params;
    const Rational Q = p.big_q.safe();
    const Rational spread = pow(Q / abs(q), 6 * n) * pow(Rational(2), 2 * m);
    const Rational delta = p.delta.safe(), mu = p.mu.safe(), tau = p.tau.safe();
    pair_displayed = pow(Rational(3), n) * pow(Rational(2), 6 * n) * delta * mu * pow(tau, n - 1) * spread;
    dependent_displayed = pow(Rational(2), n) * delta * pow(Rational(2), 6 * n) * pow(tau, n) * spread;
    below_displayed = pow(Rational(2), n) * pow(abs(fugacity), p.K - 1) * pow(T, n) * pow(abs(q), -3 * n) *
                      pow(Rational(2), 2 * m) * pow(Q, 3 * n - m);
  }
  const Rational pair_used = std::max(pair_displayed, pair_structural);
  const Rational dependent_used = std::max(dependent_displayed, dependent_structural);
  out.ledger.push_back({"some gadget with a pair", pair_used, pair_displayed, pair_structural});
  out.ledger.push_back({"chosen set not independent", dependent_used, dependent_displayed, dependent_structural});
  if (net.params) {
    Rational below = 0;
    for (const auto& c : out.ledger) {
      if (c.name.rfind("independent, size ", 0) == 0 &&
          std::stol(c.name.substr(18)) < net.params->K) {
        below += abs(c.value);
      }
    }
    out.ledger.push_back({"independent below K (included exactly)", below, below_displayed, Rational(0)});
  }
  out.slack = pair_used + dependent_used;
  out.value = {out.exact_part - out.slack, out.exact_part + out.slack};
  return out;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "YES";
    case Verdict::No:
      return "NO";
    case Verdict::Indeterminate:
      return "INDETERMINATE";
  }
  return "?";
}

Verdict decide_mis(const Interval& z, const Rational& psi) {
  if (psi <= 0) throw Error("threshold must be positive");
  const Rational hi = std::max(abs(z.lo), abs(z.hi));
  const Rational lo = (z.lo <= 0 && z.hi >= 0) ? Rational(0) : Rational(std::min(abs(z.lo), abs(z.hi)));
  if (4 * lo >= 3 * psi) return Verdict::Yes;
  if (4 * hi <= psi) return Verdict::No;
  return Verdict::Indeterminate;
}

}  // namespace tutte
