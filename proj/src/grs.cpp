#include "lambda2/grs.hpp"

#include <algorithm>

#include "lambda2/smith.hpp"
#include "lambda2/spectral.hpp"

namespace lambda2 {

std::string to_string(Classification c) {
  switch (c) {
    case Classification::less_than: return "less_than";
    case Classification::equal_to: return "equal";
    case Classification::greater_than: return "greater_than";
    case Classification::inconclusive: return "inconclusive";
  }
  return "?";
}

Profile component_profile(const Graph& g, int cut_vertex, const BoundConstant& a) {
  if (!is_positive(a)) throw std::invalid_argument("component_profile: bound must be positive");
  ComponentSplit split = remove_vertex_split(g, cut_vertex);
  if (split.parts.size() < 2)
    throw std::invalid_argument("component_profile: vertex is not a cut-vertex");
  Profile prof;
  int greater_at = -1;
  int greater_count = 0;
  for (size_t i = 0; i < split.parts.size(); ++i) {
    Rel r = compare_eigenvalue(split.parts[i].graph, 1, a);
    prof.relations.push_back(r);
    if (r == Rel::greater) {
      ++greater_count;
      greater_at = static_cast<int>(i);
    }
  }
  if (greater_count == 1) {
    // A one-vertex component has index 0 < a, so the big component has at
    // least two vertices and its second eigenvalue exists.
    prof.big_second = compare_eigenvalue(split.parts[greater_at].graph, 2, a);
  }
  return prof;
}

Classification grs_decide(const Profile& p) {
  if (p.relations.size() < 2) throw std::invalid_argument("grs_decide: need at least two components");
  int greater = 0, equal = 0;
  for (Rel r : p.relations) {
    if (r == Rel::greater) ++greater;
    if (r == Rel::equal) ++equal;
  }
  if ((greater == 1) != p.big_second.has_value())
    throw std::invalid_argument("grs_decide: big_second presence does not match the profile");
  if (greater >= 2) return Classification::greater_than;
  if (greater == 1) {
    if (equal >= 1) return Classification::greater_than;
    if (*p.big_second == Rel::greater) return Classification::greater_than;
    return Classification::inconclusive;
  }
  return equal >= 2 ? Classification::equal_to : Classification::less_than;
}

Classification classify_at(const Graph& g, int cut_vertex, const BoundConstant& a) {
  return grs_decide(component_profile(g, cut_vertex, a));
}

Classification classify(const Graph& g, const BoundConstant& a) {
  if (!is_connected(g)) throw std::invalid_argument("classify: graph is not connected");
  if (g.vertex_count() < 3) throw NotApplicable("classify: no cut-vertex");
  std::vector<int> cuts = articulation_points(g);
  if (cuts.empty()) throw NotApplicable("classify: no cut-vertex");
  for (int u : cuts) {
    Classification c = classify_at(g, u, a);
    if (c != Classification::inconclusive) return c;
  }
  return Classification::inconclusive;
}

Classification rs_classify(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("rs_classify: graph is not connected");
  if (g.vertex_count() < 3) throw NotApplicable("rs_classify: no cut-vertex");
  std::vector<int> cuts = articulation_points(g);
  if (cuts.empty()) throw NotApplicable("rs_classify: no cut-vertex");
  BoundConstant two = named_bound("two");
  for (int u : cuts) {
    // Same decision table, but the per-component relations come from the
    // catalog-side index classification.
    ComponentSplit split = remove_vertex_split(g, u);
    Profile prof;
    int greater_at = -1, greater_count = 0;
    for (size_t i = 0; i < split.parts.size(); ++i) {
      IndexVsTwo ivt = index_vs_2(split.parts[i].graph);
      Rel r = ivt == IndexVsTwo::super_smith ? Rel::greater
              : ivt == IndexVsTwo::smith     ? Rel::equal
                                             : Rel::less;
      prof.relations.push_back(r);
      if (r == Rel::greater) {
        ++greater_count;
        greater_at = static_cast<int>(i);
      }
    }
    if (greater_count == 1)
      prof.big_second = compare_eigenvalue(split.parts[greater_at].graph, 2, two);
    Classification c = grs_decide(prof);
    if (c != Classification::inconclusive) return c;
  }
  return Classification::inconclusive;
}

Bounds component_index_bounds(const Graph& g, int cut_vertex) {
  ComponentSplit split = remove_vertex_split(g, cut_vertex);
  if (split.parts.size() < 2)
    throw std::invalid_argument("component_index_bounds: vertex is not a cut-vertex");
  std::vector<RootEnclosure> indices;
  indices.reserve(split.parts.size());
  for (const auto& part : split.parts)
    indices.push_back(isolate_largest_root(charpoly(part.graph)));

  size_t best = 0;
  for (size_t i = 1; i < indices.size(); ++i)
    if (compare_roots(indices[i], indices[best]) == Rel::greater) best = i;
  size_t second = best == 0 ? 1 : 0;
  for (size_t i = second + 1; i < indices.size(); ++i) {
    if (i == best) continue;
    if (compare_roots(indices[i], indices[second]) == Rel::greater) second = i;
  }
  Rel second_rel = compare_roots(indices[second], indices[best]);
  if (second_rel == Rel::greater)
    throw InternalError("component_index_bounds: ordering violated");
  if (second_rel == Rel::equal)
    return Bounds{Bounds::Kind::exactly_alpha1, indices[best], indices[best]};
  return Bounds{Bounds::Kind::open, indices[second], indices[best]};
}

Bounds best_bounds(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("best_bounds: graph is not connected");
  std::vector<int> cuts = g.vertex_count() >= 3 ? articulation_points(g) : std::vector<int>{};
  if (cuts.empty()) throw NotApplicable("best_bounds: no cut-vertex");
  std::optional<Bounds> acc;
  for (int u : cuts) {
    Bounds b = component_index_bounds(g, u);
    if (b.kind == Bounds::Kind::exactly_alpha1) return b;
    if (!acc) {
      acc = b;
      continue;
    }
    if (compare_roots(b.lower, acc->lower) == Rel::greater) acc->lower = b.lower;
    if (compare_roots(b.upper, acc->upper) == Rel::less) acc->upper = b.upper;
  }
  if (compare_roots(acc->lower, acc->upper) != Rel::less)
    throw InternalError("best_bounds: intersection is empty");
  return *acc;
}

}  // namespace lambda2
