#pragma once

#include "tutte/engine.hpp"
#include "tutte/graph.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tutte {

/// Two-terminal planar gadget; s and t lie on a common face of the stored embedding.
struct TwoTerminalGadget {
  WeightedMultigraph graph;
  int s = 0;
  int t = 1;
};

/// Closed rational interval.
struct Interval {
  Rational lo, hi;
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  Rational width() const { return hi - lo; }
};

/// Effective weight and scale of a two-terminal network: w* = q Zst/Zs|t, scale = Zs|t/q^2.
struct WeightScale {
  Rational weight;
  Rational scale;
};

/// Series-parallel construction kept as an expression; materialized on demand.
class Gadget {
 public:
  enum class Kind { Edge, Series, Parallel, Thicken, Stretch };

  static Gadget edge(Rational w);
  static Gadget series(const Gadget& a, const Gadget& b);
  static Gadget parallel(const Gadget& a, const Gadget& b);
  static Gadget parallel(const std::vector<Gadget>& parts);
  static Gadget thicken(const Gadget& a, long k);
  static Gadget stretch(const Gadget& a, long k);

  Kind kind() const;
  long edge_count() const;
  long multiplicity() const;  // k for Thicken/Stretch
  const std::vector<Gadget>& parts() const;
  const Rational& weight() const;  // Edge only

  /// (w*, scale) from the series/parallel closed forms; throws on a degenerate series step.
  WeightScale closed_form(const Rational& q) const;

  /// Explicit graph with s=0, t=1 and a planar rotation keeping s and t on one face.
  TwoTerminalGadget materialize() const;

  /// Compact infix description, e.g. "P(T2(e[2/1]),S3(e[-2/1]))".
  std::string describe() const;

 private:
  struct Node;
  explicit Gadget(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Parallel: w* = (1+w1)(1+w2)-1, scale 1. Series: w* = w1 w2/(q+w1+w2), scale q+w1+w2.
enum class Composition { Series, Parallel };
WeightScale parallel_series_weight(Composition kind, const Rational& w1, const Rational& w2, const Rational& q);

/// k-thickening: a' = (1+a)^k - 1 (y' = y^k). k-stretch: 1+q/a' = (1+q/a)^k (x' = x^k).
enum class Repetition { Thicken, Stretch };
struct ShiftPoint {
  Rational x, y, q, alpha;
  static ShiftPoint from_y(const Rational& y, const Rational& q);
  static ShiftPoint from_weight(const Rational& alpha, const Rational& q);
};
struct RepeatResult {
  Rational alpha;
  Rational scale;
  Rational y;
  std::optional<Rational> x;  // absent when alpha' = 0
};
RepeatResult thicken_stretch_weight(Repetition kind, const Rational& alpha, const Rational& q, long k);

/// w* and scale from the terminal-partition decomposition of an explicit gadget.
WeightScale effective_weight(const TwoTerminalGadget& g, const Rational& q, const EngineOptions& opt = {});

/// A gadget together with its certified effective weight.
struct Implementation {
  Gadget gadget = Gadget::edge(Rational(0));
  Rational q;
  Rational effective_weight;
  Rational scale;
  Rational target;       // target weight (alpha coordinates)
  Interval error;        // contains effective_weight - target
  bool relaxed = false;  // produced from caller-supplied tolerances

  Rational y() const { return effective_weight + 1; }
  Rational x() const { return q / effective_weight + 1; }
};

/// Certifies a gadget against a target weight; error interval is the exact point difference.
Implementation make_implementation(const Gadget& g, const Rational& q, const Rational& target);

/// Rebuilds the explicit gadget and checks Zst, Zs|t against the stored weight and scale.
bool recheck(const Implementation& impl, const EngineOptions& opt = {});

struct Substitution {
  WeightedMultigraph graph;
  Rational scale;                 // Z(result) = scale * Z(host with w(f) = effective weight)
  std::vector<int> edge_origin;   // host edge id, or -1 for gadget edges
};

/// Replaces edge f by the gadget (s onto one endpoint, t onto the other).
Substitution substitute_edge(const WeightedMultigraph& g, int f, const Implementation& impl, bool flip = false);

}  // namespace tutte
