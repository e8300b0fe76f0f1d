#pragma once

#include "tutte/engine.hpp"

namespace tutte {

/// T(G;x,y). The subset sum is used directly when x=1 or y=1 (or the graph is small);
/// otherwise T = (y-1)^-n (x-1)^-k(E) Z(G; (x-1)(y-1), y-1).
Rational tutte_eval(const WeightedMultigraph& g, const Rational& x, const Rational& y,
                    const EngineOptions& opt = {}, EvalReport* report = nullptr);

/// T(G;x,y) from the rank census (every subset enumerated).
Rational tutte_subset_sum(const WeightedMultigraph& g, const Rational& x, const Rational& y, int edge_cap = 24);

enum class Specialization { Chromatic, Flow };

/// Chromatic: (-1)^(n-k) L^k T(1-L,0). Flow: (-1)^(m-n+k) T(0,1-L).
Rational chromatic_flow_eval(const WeightedMultigraph& g, const Rational& lambda, Specialization which,
                             const EngineOptions& opt = {});

/// Sum over all q^n colourings of y^(number of monochromatic edges); loops are always monochromatic.
Rational colour_sum(const WeightedMultigraph& g, int q, const Rational& y, long budget = 50'000'000);

/// Number of monochromatic edges for every colouring, as a census indexed by that count.
std::vector<Integer> monochromatic_census(const WeightedMultigraph& g, int q, long budget = 50'000'000);

}  // namespace tutte
