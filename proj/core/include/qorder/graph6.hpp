#pragma once

#include <string>

#include "qorder/graph.hpp"

namespace qorder {

// Header-free graph6 (printable, bit-exact per the published format).
// Only the single-byte order form is needed here (n <= 62).
std::string emit_graph6(const Graph& g);
Graph parse_graph6(const std::string& text);

}  // namespace qorder
