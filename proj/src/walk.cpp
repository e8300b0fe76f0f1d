#include "tutte/walk.hpp"

#include <algorithm>

namespace tutte {

namespace {

constexpr long kStepCap = 1'000'000;

Rational y_of(const Gadget& g, const Rational& q) { return g.closed_form(q).weight + 1; }
Rational x_of_y(const Rational& y, const Rational& q) { return q / (y - 1) + 1; }
Rational y_of_x(const Rational& x, const Rational& q) { return q / (x - 1) + 1; }

struct Unit {
  Gadget unit = Gadget::edge(Rational(0));
  Gadget step = Gadget::edge(Rational(0));  // series factor used by the chain
  Rational y1, x1, step_x;
  long boot_j = 0, boot_k = 0;
};

Unit bootstrap(const BasePoints& b) {
  const Rational& q = b.q;
  if (!b.first) throw Error("walk needs a base point y'_1 with |y'_1| > 1");
  Rational yp1 = y_of(*b.first, q);
  if (abs(yp1) <= 1) throw Error("base point y'_1 = " + to_string(yp1) + " is not outside [-1,1]");
  Unit u;
  u.unit = Gadget::thicken(*b.first, 2);
  u.y1 = yp1 * yp1;
  if (q > 0) {
    u.x1 = x_of_y(u.y1, q);
    u.step = u.unit;
    u.step_x = u.x1;
    return u;
  }
  Rational half = 1 + abs(q) / 2;
  if (u.y1 >= half) {
    if (!b.second) throw Error("q < 0 bootstrap needs a base point y'_2 in (-1,1)");
    Rational yp2 = y_of(*b.second, q);
    if (!(yp2 > -1 && yp2 < 1)) throw Error("base point y'_2 = " + to_string(yp2) + " is not in (-1,1)");
    Rational xi = (abs(q) / 2) / half;
    Rational xp2 = x_of_y(yp2, q);
    if (xp2 <= 1) throw Error("q < 0 bootstrap failed: x'_2 <= 1");
    long j = least_power(xp2, 1, kStepCap, [&](const Rational& p) { return q / (p - 1) > -xi; });
    Rational yhat = y_of_x(pow(xp2, j), q);
    long k = least_power(yhat, 1, kStepCap, [&](const Rational& p) { return p * u.y1 < half; });
    u.unit = Gadget::parallel(u.unit, Gadget::thicken(Gadget::stretch(*b.second, j), k));
    u.y1 = pow(yhat, k) * u.y1;
    u.boot_j = j;
    u.boot_k = k;
  }
  u.x1 = x_of_y(u.y1, q);
  if (!(u.x1 < -1)) throw Error("q < 0 bootstrap failed: x1 = " + to_string(u.x1) + " is not below -1");
  if (y_of(u.unit, q) != u.y1) throw Error("bootstrap unit disagrees with its closed form");
  u.step = Gadget::stretch(u.unit, 2);
  u.step_x = u.x1 * u.x1;
  return u;
}

void plan_digits(WalkPlan& plan, const Unit& u, const Rational& q, const Rational& T, const Rational& pi) {
  if (q > 0) {
    Rational bound = q * T / pi + 1;
    plan.m = least_power(u.x1, 1, kStepCap, [&](const Rational& p) { return p >= bound; });
  } else {
    Rational bound = abs(q) * T / pi;
    Rational ax = abs(u.x1);
    plan.m = least_power(ax, 1, kStepCap, [&](const Rational& p) { return p >= bound; });
    if (plan.m % 2 == 0) ++plan.m;  // only odd stretches stay above 1
  }
  plan.digits.assign(plan.m, 0);
  plan.y_steps.clear();
  // Comparisons run in floating point wide enough to separate y_m from 1; only near-ties
  // fall back to the exact product. Accepted factors are multiplied out once at the end.
  const mp_bitcnt_t prec = 256 + 2 * plan.m * (floor_log2(abs(u.x1)) + 2);
  const mpf_class margin = mpf_class(1, prec) / mpf_class(mpz_class(1) << (prec - 32), prec);
  const mpf_class fT(T, prec);
  mpf_class approx(1, prec);
  std::vector<Rational> taken;
  auto exact_product = [&taken]() {
    std::vector<Integer> nums, dens;
    for (const Rational& f : taken) {
      nums.push_back(f.get_num());
      dens.push_back(f.get_den());
    }
    Rational r(product_tree(std::move(nums)), product_tree(std::move(dens)));
    r.canonicalize();
    return r;
  };
  Rational xj = 1;
  for (long j = 1; j <= plan.m; ++j) {
    xj *= u.x1;
    Rational yj = y_of_x(xj, q);
    plan.y_steps.push_back(yj);
    if (q < 0 && j % 2 == 0) continue;
    const mpf_class fy(yj, prec);
    long d = 0;
    for (;;) {
      mpf_class next(approx * fy, prec);
      mpf_class ratio(next / fT, prec);
      bool fits;
      if (ratio < 1 - margin) fits = true;
      else if (ratio > 1 + margin) fits = false;
      else fits = exact_product() * yj <= T;
      if (!fits) break;
      approx = next;
      taken.push_back(yj);
      ++d;
    }
    plan.digits[j - 1] = d;
  }
  plan.digit_product = exact_product();
}

Gadget digit_gadget(const WalkPlan& plan, const Unit& u) {
  std::vector<Gadget> parts;
  for (long j = 1; j <= plan.m; ++j) {
    long d = plan.digits[j - 1];
    if (d > 0) parts.push_back(Gadget::thicken(Gadget::stretch(u.unit, j), d));
  }
  if (parts.empty()) return Gadget::edge(Rational(0));
  return Gadget::parallel(parts);
}

// Works backwards from the target interval: divide by y1 while above it, undo one
// series step while below it, stop once y1 itself lies inside.
Gadget chain_gadget(WalkPlan& plan, const Unit& u, const Rational& q, const Rational& T, const Rational& pi) {
  Rational lo = T - pi, hi = T;
  if (lo <= 1) lo = (1 + T) / 2;
  std::vector<char> ops;
  for (long steps = 0;; ++steps) {
    if (steps > kStepCap) throw Error("walk did not converge");
    if (lo <= u.y1 && u.y1 <= hi) break;
    if (lo > u.y1) {
      ops.push_back('P');
      lo /= u.y1;
      hi /= u.y1;
    } else {
      ops.push_back('S');
      Rational a = y_of_x(x_of_y(lo, q) / u.step_x, q);
      Rational b = y_of_x(x_of_y(hi, q) / u.step_x, q);
      lo = std::min(a, b);
      hi = std::max(a, b);
    }
  }
  Gadget g = u.unit;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    if (*it == 'P') {
      g = Gadget::parallel(u.unit, g);
      ++plan.chain_parallel_steps;
    } else {
      g = Gadget::series(u.step, g);
      ++plan.chain_series_steps;
    }
  }
  return g;
}

struct Anchor {
  Gadget gadget = Gadget::edge(Rational(0));
  Rational y;
  std::string route;
};

// A gadget with y < 0 and |y| < |T|, so that T/y > 1 can be walked.
Anchor find_anchor(const BasePoints& b, const Unit& u, const Rational& T) {
  const Rational& q = b.q;
  if (!b.third) throw Error("negative target needs a base point y'_3 < 0");
  Rational y3 = y_of(*b.third, q);
  if (y3 >= 0) throw Error("base point y'_3 = " + to_string(y3) + " is not negative");
  if (abs(y3) < abs(T)) return {*b.third, y3, "y'_3"};

  // Shrink |y'_3| with positive factors below 1.
  std::vector<std::pair<Gadget, std::string>> pool = {{u.unit, "unit"}, {*b.third, "y'_3"}, {*b.first, "y'_1"}};
  if (b.second) pool.push_back({*b.second, "y'_2"});
  std::vector<std::pair<Gadget, std::string>> grown = pool;
  for (const auto& [a, an] : pool) {
    for (const auto& [c, cn] : pool) {
      grown.push_back({Gadget::series(a, c), "S(" + an + "," + cn + ")"});
      grown.push_back({Gadget::parallel(a, c), "P(" + an + "," + cn + ")"});
    }
    grown.push_back({Gadget::thicken(a, 2), "T2(" + an + ")"});
  }
  std::optional<Anchor> best;
  auto offer = [&](const Gadget& g, const Rational& y, const std::string& route) {
    if (!(y < 0 && abs(y) < abs(T))) return;
    if (!best || g.edge_count() < best->gadget.edge_count()) best = Anchor{g, y, route};
  };
  for (const auto& [g, name] : grown) {
    Rational y;
    try {
      y = y_of(g, q);
    } catch (const Error&) {
      continue;
    }
    offer(g, y, name);
    if (y > 0 && y < 1) {
      long k = least_power(y, 1, kStepCap, [&](const Rational& p) { return abs(y3) * p < abs(T); });
      offer(Gadget::parallel(*b.third, Gadget::thicken(g, k)), y3 * pow(y, k),
            "P(y'_3,T" + std::to_string(k) + "(" + name + "))");
    }
  }
  if (!best) throw Error("no anchor with -|T| < y < 0 found for target " + to_string(T));
  return *best;
}

}  // namespace

BasePoints BasePoints::from_y(const Rational& q, std::optional<Rational> y1, std::optional<Rational> y2,
                              std::optional<Rational> y3) {
  BasePoints b;
  b.q = q;
  if (y1) b.first = Gadget::edge(*y1 - 1);
  if (y2) b.second = Gadget::edge(*y2 - 1);
  if (y3) b.third = Gadget::edge(*y3 - 1);
  return b;
}

long WalkPlan::max_digit() const {
  long best = 0;
  for (long d : digits) best = std::max(best, d);
  return best;
}

WalkPlan hyperbola_walk(const BasePoints& base, const Rational& target, const Rational& tolerance,
                        WalkStyle style) {
  const Rational& q = base.q;
  if (q == 0) throw Error("walk needs q != 0");
  if (abs(target) <= 1) throw Error("walk target must satisfy |T| > 1");
  if (!(tolerance > 0 && tolerance <= 1)) throw Error("walk tolerance must lie in (0,1]");

  WalkPlan plan;
  plan.walk_case = q > 0 ? 1 : 2;
  plan.target = target;
  plan.tolerance = tolerance;
  plan.style = style;
  Unit u = bootstrap(base);
  plan.unit_y = u.y1;
  plan.unit_x = u.x1;
  plan.bootstrap_stretch = u.boot_j;
  plan.bootstrap_thicken = u.boot_k;

  std::optional<Anchor> anchor;
  plan.walk_target = target;
  plan.walk_tolerance = tolerance;
  if (target < 0) {
    anchor = find_anchor(base, u, target);
    plan.anchored = true;
    plan.anchor_y = anchor->y;
    plan.anchor_route = anchor->route;
    plan.walk_target = target / anchor->y;
    plan.walk_tolerance = std::min(Rational(tolerance / abs(anchor->y)), Rational(1));
  }

  plan_digits(plan, u, q, plan.walk_target, plan.walk_tolerance);
  Gadget g = style == WalkStyle::Digits ? digit_gadget(plan, u)
                                        : chain_gadget(plan, u, q, plan.walk_target, plan.walk_tolerance);
  if (anchor) g = Gadget::parallel(anchor->gadget, g);

  Implementation impl = make_implementation(g, q, target - 1);
  Rational y = impl.y();
  bool ok = target > 0 ? (target - tolerance <= y && y <= target) : (target <= y && y <= target + tolerance);
  if (!ok) throw Error("walk produced y = " + to_string(y) + " outside the target window");
  impl.error = target > 0 ? Interval{-tolerance, Rational(0)} : Interval{Rational(0), tolerance};
  plan.result = std::move(impl);
  return plan;
}

}  // namespace tutte
