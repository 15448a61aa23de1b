#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lambda2 {

// Simple undirected graph on dense vertex ids 0..n-1. Edges are kept as a
// sorted set of pairs (i, j) with i < j; adjacency lists are derived and
// sorted, so all traversals are deterministic.
class Graph {
 public:
  Graph() = default;

  // Validates endpoints and rejects self-loops; duplicate pairs collapse.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& pairs);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

// Connected components of g - removed, each densely relabeled; to_parent maps
// a component vertex back to its id in the parent graph. Components are
// ordered by their smallest original vertex id.
struct ComponentSplit {
  struct Part {
    Graph graph;
    std::vector<int> to_parent;
  };
  int removed = -1;
  std::vector<Part> parts;
};

bool is_connected(const Graph&);

// Cut vertices of a connected graph, ascending. Throws if g is disconnected.
std::vector<int> articulation_points(const Graph&);

ComponentSplit remove_vertex_split(const Graph&, int u);

// New graph with one extra vertex (id n) adjacent exactly to `attach`.
Graph cone_attach(const Graph&, std::vector<int> attach);

// Induced subgraph with the given vertices removed, densely relabeled in
// ascending order of the surviving original ids.
Graph induced_without(const Graph&, std::span<const int> removed);
Graph remove_vertex(const Graph&, int v);

// Family generators.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);  // K_{1,leaves}, center 0
Graph complete_graph(int n);
Graph spider_graph(int a, int b, int c);  // three legs from center 0
Graph double_broom(int k);  // path on k inner vertices, two pendants per end

struct JoinPart {
  Graph graph;
  std::vector<int> attach;
};
// Disjoint copies of the parts plus a fresh vertex u (last id) adjacent to
// every listed attachment vertex.
Graph join_at_new_vertex(const std::vector<JoinPart>&);

// String-keyed dispatcher for the non-composite families above.
Graph generate_family(const std::string& family, const std::vector<long>& params);

}  // namespace lambda2
