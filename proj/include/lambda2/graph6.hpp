#pragma once

#include <string>
#include <string_view>

#include "lambda2/graph.hpp"

namespace lambda2 {

// Standard graph6 text encoding: size header (63+n for n <= 62, '~' prefixed
// 18-bit header up to 258047), then the upper triangle in column-major order
// (0,1),(0,2),(1,2),(0,3),... packed into 6-bit groups, each +63.
std::string graph6_encode(const Graph&);

// Strict decoder; rejects bad headers, out-of-range characters, wrong data
// length and nonzero padding bits. The optional ">>graph6<<" prefix is
// accepted for corpus ingestion.
Graph graph6_decode(std::string_view);

std::string dot_export(const Graph&);

}  // namespace lambda2
