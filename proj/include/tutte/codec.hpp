#pragma once

#include "tutte/graph.hpp"

#include <string>
#include <string_view>

namespace tutte {

/// Line-oriented graph file:
///   graph <n>
///   e <id> <u> <v> <p>/<q>
///   rot <vertex> <edge ids in cyclic order; a loop id appears twice>
/// Blank lines and lines starting with '#' are ignored.
WeightedMultigraph parse_graph(std::string_view text);
std::string serialize_graph(const WeightedMultigraph& g);

WeightedMultigraph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const WeightedMultigraph& g);

}  // namespace tutte
