#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lambda2/graph.hpp"

namespace lambda2 {

// The connected graphs with index exactly 2: cycles, double brooms
// (K_{1,4} is the degenerate one-inner-vertex case) and three exceptional
// spiders S(2,2,2), S(1,3,3), S(1,2,5).
struct SmithForm {
  enum class Kind { cycle, double_broom, spider_222, spider_133, spider_125 };
  Kind kind;
  int param = 0;  // cycle length or broom inner-path length

  friend bool operator==(const SmithForm&, const SmithForm&) = default;
};

// Connected graphs with index below 2: paths, brooms (path with two pendant
// vertices at one end) and the spiders S(1,2,2), S(1,2,3), S(1,2,4).
struct DynkinForm {
  enum class Kind { path, broom, spider_122, spider_123, spider_124 };
  Kind kind;
  int param = 0;  // vertex count for path/broom

  friend bool operator==(const DynkinForm&, const DynkinForm&) = default;
};

Graph build(const SmithForm&);
Graph build(const DynkinForm&);
int vertex_count(const SmithForm&);
int vertex_count(const DynkinForm&);
std::string form_name(const SmithForm&);
std::string form_name(const DynkinForm&);

std::vector<SmithForm> smith_forms_up_to(int max_vertices);
std::vector<DynkinForm> dynkin_forms_up_to(int max_vertices);

// Label-invariant structural recognition of catalog members.
std::optional<SmithForm> recognize_smith(const Graph&);

enum class IndexVsTwo { sub_smith, smith, super_smith };
std::string to_string(IndexVsTwo);

// Exact classification of the index against 2 for a connected graph.
IndexVsTwo index_vs_2(const Graph&);

}  // namespace lambda2
