#pragma once

#include "tutte/gadget.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tutte {

/// Weights available to a walk, each as a gadget over the original edge.
/// first: |y| > 1, second: -1 < y < 1, third: y < 0.
struct BasePoints {
  Rational q;
  std::optional<Gadget> first, second, third;

  /// Single edges with the given y-coordinates.
  static BasePoints from_y(const Rational& q, std::optional<Rational> y1, std::optional<Rational> y2 = {},
                           std::optional<Rational> y3 = {});
};

/// Digits realize the product of stretched units in parallel; Chain nests one unit per step.
enum class WalkStyle { Chain, Digits };

struct WalkPlan {
  int walk_case = 1;       // 1: q > 0, 2: q < 0
  Rational target, tolerance;
  Rational unit_y, unit_x;  // the point (x1, y1) every step is built from
  long bootstrap_stretch = 0, bootstrap_thicken = 0;  // j and k of the q < 0 bootstrap, 0 if unused

  // Negative targets are divided by an anchor with y < 0 that is put in parallel.
  bool anchored = false;
  Rational anchor_y;
  std::string anchor_route;
  Rational walk_target, walk_tolerance;  // positive target actually walked

  long m = 0;
  std::vector<long> digits;      // d_j for j = 1..m
  std::vector<Rational> y_steps;  // y_j for j = 1..m
  Rational digit_product;        // product of y_j^d_j

  WalkStyle style = WalkStyle::Chain;
  long chain_parallel_steps = 0, chain_series_steps = 0;
  Implementation result;

  long max_digit() const;
};

/// Implements y with T-pi <= y <= T (T > 1) or T <= y <= T+pi (T < -1). 0 < pi <= 1.
WalkPlan hyperbola_walk(const BasePoints& base, const Rational& target, const Rational& tolerance,
                        WalkStyle style = WalkStyle::Chain);

}  // namespace tutte
