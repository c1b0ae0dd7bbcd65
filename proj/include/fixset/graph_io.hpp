#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "fixset/graph.hpp"

namespace fixset {

enum class GraphFormat { kGraph6, kEdgeList };

// Short-form graph6 only (n <= 62). A single trailing newline is accepted.
// Padding bits in the last byte must be zero so that emit(parse(x)) == x.
Graph ParseGraph6(std::string_view line);
std::string EmitGraph6(const Graph& g);

// "n <count>" header, then one "u v" pair per line. Blank lines and lines
// starting with '#' are skipped.
Graph ParseEdgeList(std::string_view text);
std::string EmitEdgeList(const Graph& g);

// graph6 streams hold one graph per line; an edge-list stream holds one graph.
std::vector<Graph> ReadGraphs(std::istream& in, GraphFormat format);

// graph6 when n <= 62, otherwise an inline "n=<n>;u-v,..." description.
// Used to key reports and instances.
std::string InstanceCode(const Graph& g);

}  // namespace fixset
