#pragma once

#include <string>
#include <vector>

#include "frustrix/signed_graph.hpp"

namespace frustrix {

// Standard graph6 encoding of the underlying simple graph, n <= 62.
std::string graph6_encode(const SignedGraph& g);
// Decodes to an all-positive signed graph.
SignedGraph graph6_decode(const std::string& text);

// One-line format: "<graph6> <signature hex>". Hex covers the canonical edge
// order, bit i = 1 iff edge i is negative, exactly ceil(m/4) digits; the hex
// token is omitted when the graph has no edges. Simple graphs only (digons
// have no graph6 form).
std::string to_signed_line(const SignedGraph& g);
SignedGraph from_signed_line(const std::string& line);

// graph6 files: one graph per line, '>>graph6<<' header tolerated.
std::vector<SignedGraph> read_graph6_lines(const std::string& text);

}  // namespace frustrix
