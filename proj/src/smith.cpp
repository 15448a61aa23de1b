#include "lambda2/smith.hpp"

#include <algorithm>
#include <stdexcept>

#include "lambda2/spectral.hpp"

namespace lambda2 {

Graph build(const SmithForm& f) {
  switch (f.kind) {
    case SmithForm::Kind::cycle:
      return cycle_graph(f.param);
    case SmithForm::Kind::double_broom:
      return double_broom(f.param);
    case SmithForm::Kind::spider_222:
      return spider_graph(2, 2, 2);
    case SmithForm::Kind::spider_133:
      return spider_graph(1, 3, 3);
    case SmithForm::Kind::spider_125:
      return spider_graph(1, 2, 5);
  }
  throw std::invalid_argument("build: bad form");
}

Graph build(const DynkinForm& f) {
  switch (f.kind) {
    case DynkinForm::Kind::path:
      return path_graph(f.param);
    case DynkinForm::Kind::broom:
      if (f.param < 4) throw std::invalid_argument("broom: need at least 4 vertices");
      return spider_graph(1, 1, f.param - 3);
    case DynkinForm::Kind::spider_122:
      return spider_graph(1, 2, 2);
    case DynkinForm::Kind::spider_123:
      return spider_graph(1, 2, 3);
    case DynkinForm::Kind::spider_124:
      return spider_graph(1, 2, 4);
  }
  throw std::invalid_argument("build: bad form");
}

int vertex_count(const SmithForm& f) {
  switch (f.kind) {
    case SmithForm::Kind::cycle: return f.param;
    case SmithForm::Kind::double_broom: return f.param + 4;
    case SmithForm::Kind::spider_222: return 7;
    case SmithForm::Kind::spider_133: return 8;
    case SmithForm::Kind::spider_125: return 9;
  }
  return 0;
}

int vertex_count(const DynkinForm& f) {
  switch (f.kind) {
    case DynkinForm::Kind::path: return f.param;
    case DynkinForm::Kind::broom: return f.param;
    case DynkinForm::Kind::spider_122: return 6;
    case DynkinForm::Kind::spider_123: return 7;
    case DynkinForm::Kind::spider_124: return 8;
  }
  return 0;
}

std::string form_name(const SmithForm& f) {
  switch (f.kind) {
    case SmithForm::Kind::cycle: return "cycle(" + std::to_string(f.param) + ")";
    case SmithForm::Kind::double_broom: return "double_broom(" + std::to_string(f.param) + ")";
    case SmithForm::Kind::spider_222: return "spider(2,2,2)";
    case SmithForm::Kind::spider_133: return "spider(1,3,3)";
    case SmithForm::Kind::spider_125: return "spider(1,2,5)";
  }
  return "?";
}

std::string form_name(const DynkinForm& f) {
  switch (f.kind) {
    case DynkinForm::Kind::path: return "path(" + std::to_string(f.param) + ")";
    case DynkinForm::Kind::broom: return "broom(" + std::to_string(f.param) + ")";
    case DynkinForm::Kind::spider_122: return "spider(1,2,2)";
    case DynkinForm::Kind::spider_123: return "spider(1,2,3)";
    case DynkinForm::Kind::spider_124: return "spider(1,2,4)";
  }
  return "?";
}

std::vector<SmithForm> smith_forms_up_to(int max_vertices) {
  std::vector<SmithForm> out;
  for (int n = 3; n <= max_vertices; ++n) out.push_back({SmithForm::Kind::cycle, n});
  for (int k = 1; k + 4 <= max_vertices; ++k) out.push_back({SmithForm::Kind::double_broom, k});
  if (max_vertices >= 7) out.push_back({SmithForm::Kind::spider_222, 0});
  if (max_vertices >= 8) out.push_back({SmithForm::Kind::spider_133, 0});
  if (max_vertices >= 9) out.push_back({SmithForm::Kind::spider_125, 0});
  return out;
}

std::vector<DynkinForm> dynkin_forms_up_to(int max_vertices) {
  std::vector<DynkinForm> out;
  for (int n = 1; n <= max_vertices; ++n) out.push_back({DynkinForm::Kind::path, n});
  for (int n = 4; n <= max_vertices; ++n) out.push_back({DynkinForm::Kind::broom, n});
  if (max_vertices >= 6) out.push_back({DynkinForm::Kind::spider_122, 0});
  if (max_vertices >= 7) out.push_back({DynkinForm::Kind::spider_123, 0});
  if (max_vertices >= 8) out.push_back({DynkinForm::Kind::spider_124, 0});
  return out;
}

namespace {

bool is_tree(const Graph& g) {
  return g.edge_count() == g.vertex_count() - 1;  // connectivity checked by caller
}

// Walks the unique degree-<=2 path away from `center` starting toward
// `first`; returns its length in edges.
int leg_length(const Graph& g, int center, int first) {
  int prev = center, cur = first, len = 1;
  while (g.degree(cur) == 2) {
    int nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
    prev = cur;
    cur = nxt;
    ++len;
  }
  return len;
}

}  // namespace

std::optional<SmithForm> recognize_smith(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("recognize_smith: graph is not connected");
  int n = g.vertex_count();
  if (n >= 3) {
    bool all2 = true;
    for (int v = 0; v < n && all2; ++v)
      if (g.degree(v) != 2) all2 = false;
    if (all2) return SmithForm{SmithForm::Kind::cycle, n};  // connected and 2-regular
  }
  if (!is_tree(g)) return std::nullopt;

  int leaves = 0, deg2 = 0, deg3 = 0, deg4 = 0;
  int first3 = -1, second3 = -1;
  for (int v = 0; v < n; ++v) {
    int d = g.degree(v);
    if (d == 1) ++leaves;
    else if (d == 2) ++deg2;
    else if (d == 3) {
      ++deg3;
      (first3 < 0 ? first3 : second3) = v;
    } else if (d == 4) {
      ++deg4;
    } else if (d > 4) {
      return std::nullopt;
    }
  }

  // K_{1,4} is the one-inner-vertex double broom.
  if (n == 5 && deg4 == 1 && leaves == 4) return SmithForm{SmithForm::Kind::double_broom, 1};

  if (deg4 == 0 && deg3 == 2 && leaves == 4 && deg2 == n - 6) {
    // Double broom: both branch vertices carry exactly two leaves each and
    // are joined by a path of degree-2 vertices.
    for (int v : {first3, second3}) {
      int leaf_nbrs = 0;
      for (int w : g.neighbors(v))
        if (g.degree(w) == 1) ++leaf_nbrs;
      if (leaf_nbrs != 2) return std::nullopt;
    }
    return SmithForm{SmithForm::Kind::double_broom, n - 4};
  }

  if (deg4 == 0 && deg3 == 1 && leaves == 3) {
    std::vector<int> legs;
    for (int w : g.neighbors(first3)) legs.push_back(leg_length(g, first3, w));
    std::sort(legs.begin(), legs.end());
    if (legs == std::vector<int>{2, 2, 2}) return SmithForm{SmithForm::Kind::spider_222, 0};
    if (legs == std::vector<int>{1, 3, 3}) return SmithForm{SmithForm::Kind::spider_133, 0};
    if (legs == std::vector<int>{1, 2, 5}) return SmithForm{SmithForm::Kind::spider_125, 0};
  }
  return std::nullopt;
}

IndexVsTwo index_vs_2(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("index_vs_2: graph is not connected");
  SpectralPosition sp = spectral_position(g, named_bound("two"));
  if (sp.count_above >= 1) return IndexVsTwo::super_smith;
  return sp.multiplicity >= 1 ? IndexVsTwo::smith : IndexVsTwo::sub_smith;
}

std::string to_string(IndexVsTwo v) {
  switch (v) {
    case IndexVsTwo::sub_smith: return "sub_smith";
    case IndexVsTwo::smith: return "smith";
    case IndexVsTwo::super_smith: return "super_smith";
  }
  return "?";
}

}  // namespace lambda2
