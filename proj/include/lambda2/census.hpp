#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lambda2/algebraic.hpp"
#include "lambda2/graph.hpp"
#include "lambda2/grs.hpp"

namespace lambda2 {

enum class Outcome { less_than, equal_to, greater_than, inconclusive, not_applicable };
std::string to_string(Outcome);

struct CensusOptions {
  int workers = 1;
  bool emit_records = false;
  // Timing fields are opt-in so that default reports are byte-identical
  // across runs and worker counts.
  bool timing = false;
};

struct CensusRecord {
  std::string graph6;
  int n = 0;
  int edges = 0;
  int cut_vertices = 0;
  Outcome classification = Outcome::not_applicable;
  std::optional<Rel> oracle;  // relation of the second eigenvalue to the bound
  bool agree = true;
  long long micros = 0;
};

struct CensusReport {
  std::string bound;
  std::string source;  // "builtin" or "file"
  int max_n = 0;       // builtin only
  size_t total = 0;
  size_t less = 0, equal = 0, greater = 0, inconclusive = 0, not_applicable = 0;
  long long contradictions = 0;
  double inconclusive_fraction = 0.0;
  std::optional<long long> wall_micros;
  bool records_emitted = false;
  std::vector<CensusRecord> records;
};

// All labeled graphs on 3..max_n vertices that are connected and have a
// cut-vertex, in deterministic (n, edge-mask) order; max_n <= 7.
struct MaskItem {
  int n;
  unsigned mask;
};
std::vector<MaskItem> builtin_survivors(int max_n);
Graph graph_from_mask(int n, unsigned mask);
size_t connected_labeled_count(int n);  // enumeration sanity helper

CensusReport census_builtin(int max_n, const BoundConstant&, const CensusOptions& = {});
CensusReport census_graphs(const std::vector<std::string>& graph6_lines, const BoundConstant&,
                           const CensusOptions& = {});

std::string report_json(const CensusReport&);
std::string records_csv(const CensusReport&);

// A (graph, cut-vertex) pair at which the decision table is silent, with the
// exact relation of the second eigenvalue and its spectral position.
struct Witness {
  std::string graph6;
  int cut_vertex = -1;
  Rel oracle = Rel::less;
  int eigenvalues_above = 0;
  int multiplicity = 0;
  std::string origin;  // "enumeration" or "constructed"
};

struct WitnessSearch {
  std::optional<Witness> less, greater, equal;
  int enumerated_max_n = 0;
};

// Scans the built-in enumeration (capped at 7 vertices) for inconclusive
// cases with each oracle outcome; an equal witness with the bound at both
// second and third position is preferred and, when the enumeration does not
// provide one, is sought among joins of three index-equal graphs.
WitnessSearch find_inconclusive(const BoundConstant&, int max_n);

std::string witnesses_json(const WitnessSearch&, const BoundConstant&, int max_n);

}  // namespace lambda2
