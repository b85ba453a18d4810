#pragma once

#include "ramsey/graph.hpp"

#include <string>
#include <string_view>

namespace ramsey {

/// Decodes a graph6 string (optionally prefixed by ">>graph6<<", optionally
/// followed by a newline). Throws ParseError on a malformed size header, a
/// vertex count above 64, a wrong body length, characters outside 63..126,
/// or nonzero padding bits.
Graph parse_graph6(std::string_view text);

/// Encodes without header or trailing newline.
std::string to_graph6(const Graph& g);

} // namespace ramsey
