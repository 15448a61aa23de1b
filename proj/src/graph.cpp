#include "lambda2/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lambda2 {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 0) throw std::invalid_argument("from_edges: negative vertex count");
  Graph g;
  g.n_ = n;
  g.edges_.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a == b) throw std::invalid_argument("from_edges: self-loop at vertex " + std::to_string(a));
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw std::invalid_argument("from_edges: endpoint out of range");
    if (a > b) std::swap(a, b);
    g.edges_.emplace_back(a, b);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  g.adj_.assign(n, {});
  for (auto [a, b] : g.edges_) {
    g.adj_[a].push_back(b);
    g.adj_[b].push_back(a);
  }
  for (auto& lst : g.adj_) std::sort(lst.begin(), lst.end());
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::pair{u, v});
}

bool is_connected(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int visited = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  return visited == n;
}

std::vector<int> articulation_points(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("articulation_points: graph is not connected");
  int n = g.vertex_count();
  if (n <= 2) return {};
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<bool> cut(n, false);
  int timer = 0;
  int root_children = 0;

  struct Frame {
    int v;
    size_t idx;
  };
  std::vector<Frame> stack;
  disc[0] = low[0] = timer++;
  stack.push_back({0, 0});
  while (!stack.empty()) {
    Frame& top = stack.back();
    int v = top.v;
    if (top.idx < g.neighbors(v).size()) {
      int w = g.neighbors(v)[top.idx++];
      if (disc[w] == -1) {
        parent[w] = v;
        disc[w] = low[w] = timer++;
        if (v == 0) ++root_children;
        stack.push_back({w, 0});
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], disc[w]);
      }
    } else {
      stack.pop_back();
      if (!stack.empty()) {
        int p = stack.back().v;
        low[p] = std::min(low[p], low[v]);
        if (p != 0 && low[v] >= disc[p]) cut[p] = true;
      }
    }
  }
  if (root_children > 1) cut[0] = true;
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (cut[v]) out.push_back(v);
  return out;
}

ComponentSplit remove_vertex_split(const Graph& g, int u) {
  int n = g.vertex_count();
  if (u < 0 || u >= n) throw std::invalid_argument("remove_vertex_split: vertex out of range");
  ComponentSplit split;
  split.removed = u;
  std::vector<bool> seen(n, false);
  seen[u] = true;
  for (int seed = 0; seed < n; ++seed) {
    if (seen[seed]) continue;
    std::vector<int> comp;
    std::vector<int> stack{seed};
    seen[seed] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    std::vector<int> local(n, -1);
    for (size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges())
      if (local[a] >= 0 && local[b] >= 0) edges.emplace_back(local[a], local[b]);
    split.parts.push_back({Graph::from_edges(static_cast<int>(comp.size()), edges), comp});
  }
  return split;
}

Graph cone_attach(const Graph& g, std::vector<int> attach) {
  std::sort(attach.begin(), attach.end());
  attach.erase(std::unique(attach.begin(), attach.end()), attach.end());
  if (attach.empty()) throw std::invalid_argument("cone_attach: empty attachment set");
  int n = g.vertex_count();
  for (int v : attach)
    if (v < 0 || v >= n) throw std::invalid_argument("cone_attach: vertex out of range");
  auto edges = g.edges();
  for (int v : attach) edges.emplace_back(v, n);
  return Graph::from_edges(n + 1, edges);
}

Graph induced_without(const Graph& g, std::span<const int> removed) {
  int n = g.vertex_count();
  std::vector<bool> gone(n, false);
  for (int v : removed) {
    if (v < 0 || v >= n) throw std::invalid_argument("induced_without: vertex out of range");
    gone[v] = true;
  }
  std::vector<int> local(n, -1);
  int m = 0;
  for (int v = 0; v < n; ++v)
    if (!gone[v]) local[v] = m++;
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : g.edges())
    if (local[a] >= 0 && local[b] >= 0) edges.emplace_back(local[a], local[b]);
  return Graph::from_edges(m, edges);
}

Graph remove_vertex(const Graph& g, int v) {
  int vs[1] = {v};
  return induced_without(g, vs);
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path_graph: need n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return Graph::from_edges(n, edges);
}

Graph star_graph(int leaves) {
  if (leaves < 1) throw std::invalid_argument("star_graph: need at least one leaf");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, edges);
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph: need n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

Graph spider_graph(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("spider_graph: legs must be >= 1");
  std::vector<std::pair<int, int>> edges;
  int next = 1;
  for (int len : {a, b, c}) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph::from_edges(next, edges);
}

Graph double_broom(int k) {
  if (k < 1) throw std::invalid_argument("double_broom: need k >= 1");
  if (k == 1) return star_graph(4);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, k);
  edges.emplace_back(0, k + 1);
  edges.emplace_back(k - 1, k + 2);
  edges.emplace_back(k - 1, k + 3);
  return Graph::from_edges(k + 4, edges);
}

Graph join_at_new_vertex(const std::vector<JoinPart>& parts) {
  if (parts.empty()) throw std::invalid_argument("join_at_new_vertex: no parts");
  std::vector<std::pair<int, int>> edges;
  int offset = 0;
  std::vector<int> attach_all;
  for (const JoinPart& part : parts) {
    if (part.attach.empty())
      throw std::invalid_argument("join_at_new_vertex: empty attachment set");
    for (int v : part.attach) {
      if (v < 0 || v >= part.graph.vertex_count())
        throw std::invalid_argument("join_at_new_vertex: attachment vertex out of range");
      attach_all.push_back(v + offset);
    }
    for (auto [a, b] : part.graph.edges()) edges.emplace_back(a + offset, b + offset);
    offset += part.graph.vertex_count();
  }
  int u = offset;
  for (int v : attach_all) edges.emplace_back(v, u);
  return Graph::from_edges(offset + 1, edges);
}

Graph generate_family(const std::string& family, const std::vector<long>& params) {
  auto arg = [&](size_t i) {
    if (i >= params.size()) throw std::invalid_argument("generate: missing parameter for " + family);
    return static_cast<int>(params[i]);
  };
  if (family == "path") return path_graph(arg(0));
  if (family == "cycle") return cycle_graph(arg(0));
  if (family == "star") return star_graph(arg(0));
  if (family == "complete") return complete_graph(arg(0));
  if (family == "spider") return spider_graph(arg(0), arg(1), arg(2));
  if (family == "double_broom") return double_broom(arg(0));
  throw std::invalid_argument("generate: unknown family " + family);
}

}  // namespace lambda2
