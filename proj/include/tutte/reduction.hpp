#pragma once

#include "tutte/engine.hpp"
#include "tutte/gadget.hpp"
#include "tutte/params.hpp"
#include "tutte/synthesis.hpp"
#include "tutte/transforms.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tutte {

/// Terminal-partition values of the six-vertex Y gadget: terminals 0,1,2 each joined
/// by a spoke of weight b to one corner of an inner triangle of weight a.
struct YGadgetReport {
  Rational q, a, b;
  Rational c;          // a^2 + 3a + q
  Rational d;          // c + b
  Rational e;          // a^3 + 3a^2 - q
  Rational joined;     // all three terminals in one component
  Rational one_apart;  // one terminal alone, the other two together (each of the three choices)
  Rational all_apart;  // three components
  Rational total() const { return joined + 3 * one_apart + all_apart; }
};

YGadgetReport y_closed_forms(const Rational& q, const Rational& a, const Rational& b);

/// Terminals 0,1,2, inner corners 3,4,5. Spokes are edges 0..2 (k to k+3),
/// triangle edges 3..5 (3-4, 4-5, 5-3).
WeightedMultigraph y_gadget(const Rational& a, const Rational& b);

enum class EdgeRole : std::uint8_t { Triangle, Spoke, Link };
const char* role_name(EdgeRole r);

/// One host edge x-y: port shared_x of x is merged with port shared_y of y, and a
/// link edge joins port link_x of x to port link_y of y.
struct PortLink {
  int x = 0, y = 0;
  int shared_x = 0, shared_y = 0;
  int link_x = 0, link_y = 0;
};

/// A Y gadget on every host vertex, glued along host edges.
struct YNetwork {
  WeightedMultigraph graph;  // embedded
  std::vector<EdgeRole> roles;
  Rational q, triangle_weight, spoke_weight, link_weight;
  std::optional<ParamSet> params;
  Rational threshold;  // decision threshold; 0 without params
  MisInstance source;  // host graph and bound K
  std::vector<PortLink> links;                // one per host edge, same ids
  std::vector<std::array<int, 3>> ports;      // network vertex of port k of gadget x
  std::vector<std::array<int, 3>> corners;    // inner triangle vertices
  std::vector<int> link_edges;                // network edge of links[i]
  std::vector<std::array<int, 4>> merged;     // (x, port, y, port) pairs that were identified

  int gadget_count() const { return static_cast<int>(ports.size()); }
  int gadget_edge(int x, int k) const { return 6 * x + k; }  // k<3: spoke k, else triangle
};

/// Generic assembly over any host graph with explicit port choices. The result is
/// embedded when planar; otherwise it carries no rotation.
YNetwork assemble_network(const WeightedMultigraph& host, const std::vector<PortLink>& links, const Rational& q,
                          const Rational& link, const Rational& a, const Rational& b);

/// The network over the three-stretch of a cubic plane graph h. Ports are read off the
/// rotation of h; the orientation that keeps the network planar is kept.
YNetwork assemble_ghat(const WeightedMultigraph& h, int K, const Rational& q, const Rational& link,
                       const Rational& a, const Rational& b, const ParamSet& params);

/// |q^2 joined/all_apart|^(K-1) * ratio_floor * |all_apart|^n |q|^(-3n) * chi^nu.
Rational psi_threshold(const YGadgetReport& y, const Rational& ratio_floor, const Rational& chi, long nu, long n,
                       long K);
Rational psi_threshold(const YGadgetReport& y, const ParamSet& params, long n, long K);

/// Per-gadget state of the three ports under the gadget's own edges.
enum class PortPattern : std::uint8_t { Joined, Pair, Apart };

/// Pattern of the ports of the Y gadget induced by a 6-bit subset of its edges.
PortPattern y_pattern(unsigned mask);

/// Contribution to Z(network) of edge sets whose per-gadget patterns are as given.
/// Brute force; throws when the network has more than edge_cap edges.
Rational z_sdt_exact(const YNetwork& net, const std::vector<PortPattern>& patterns, int edge_cap = 26);

/// Port vertices and link edges, with the ports of every chosen gadget identified.
/// Loops (from links between two chosen neighbours) are dropped when drop_loops is set.
struct Interconnect {
  WeightedMultigraph graph;
  int loops_dropped = 0;
};
Interconnect interconnect_graph(const YNetwork& net, const std::vector<bool>& chosen, bool drop_loops = false);

/// (q^2 joined/all_apart)^k all_apart^n q^(-3n) Z(interconnect) for an independent chosen set.
Rational independent_class_value(const YNetwork& net, const std::vector<bool>& chosen,
                                 const EngineOptions& opt = {});

struct GammaReport {
  int param_case = 1;
  int vertices = 0;
  QPoly coefficients;       // coeff[j] of q^j
  std::vector<int> signs;   // sign of coeff[j]
  Rational value;
  Rational lower_bound;     // the bound |value| was checked against
  bool holds = true;
  std::string failure;      // counterexample description when !holds
};

/// Sign and size checks on Z(gamma; q, link) for loopless gamma with constant link weight.
/// q > 5: Z > 0 and Z >= (q - 5|link|)^|V|. q < 0: (-1)^(|V|-j) C_j >= 0, C_|V| = 1,
/// (-1)^|V| Z > 0 and |Z| >= |q|^|V|.
GammaReport gamma_check(const WeightedMultigraph& gamma, const Rational& q, const Rational& link,
                        const EngineOptions& opt = {});

struct ClassBound {
  std::string name;
  Rational value;       // exact sum, or the bound that was used
  Rational displayed;   // bound from the constant ledger, 0 when not applicable
  Rational structural;  // bound from per-gadget partition values
};

struct CertifiedValue {
  Interval value;
  Rational exact_part;
  Rational slack;
  Rational threshold;
  std::vector<std::uint64_t> independent_by_size;
  std::vector<ClassBound> ledger;
};

/// Weight checks against the constant ledger; empty when every check passes.
std::vector<std::string> validate_weights(const YNetwork& net);

/// Exact sum over independent chosen sets plus rigorous remainder slack.
CertifiedValue z_ghat_certified(const YNetwork& net, const EngineOptions& opt = {}, int threads = 0);

/// Constant ledger, synthesized weights and the assembled network for one MIS instance.
/// The link weight comes from thickening base.second; a and b from walks over base.
struct MisCompilation {
  ParamSet params;
  Synthesis triangle, spoke;
  Implementation link;
  YNetwork net;
};

/// relaxed = (epsilon, delta) replaces the computed constants; they are still validated.
MisCompilation compile_mis(const WeightedMultigraph& h, int K, const Rational& q, const BasePoints& base,
                           const std::optional<std::pair<Rational, Rational>>& relaxed = std::nullopt);

enum class Verdict { Yes, No, Indeterminate };
const char* verdict_name(Verdict v);

/// |Z| >= 3 psi/4 -> Yes; |Z| <= psi/4 -> No.
Verdict decide_mis(const Interval& z, const Rational& psi);

struct ColouringReduction {
  long k_formula = 0;  // least k with 4 * 3^n |y|^k <= 1
  long k = 0;          // rounded up to even
  WeightedMultigraph thickened;
  Rational colour_value;  // sum over 3-colourings of y^(monochromatic edges of the thickened graph)
  Rational tutte_value;   // the same through T(thickened; x, y)
  Rational gap;           // 3^n |y|^k
  bool colourable = false;
};

ColouringReduction reduce_colouring(const WeightedMultigraph& g, const Rational& x, const Rational& y,
                                    const EngineOptions& opt = {});

struct PipelineResult {
  WeightedMultigraph graph;  // every edge carries the base weight
  Rational base_weight;
  Rational scale;            // Z(graph) = scale * Z(instance)
  Rational base_x, base_y;   // Tutte coordinates of the base weight
  Rational tutte_factor;     // Z(graph) = tutte_factor * T(graph; base_x, base_y)
  std::vector<int> replaced_by;  // per instance edge: 0, 1 or 2
};

/// Replaces every instance edge by the certificate gadget whose effective weight it carries.
PipelineResult shift_pipeline(const WeightedMultigraph& instance, const Rational& q,
                              const std::array<Implementation, 3>& certificate);

}  // namespace tutte
