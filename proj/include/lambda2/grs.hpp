#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lambda2/algebraic.hpp"
#include "lambda2/graph.hpp"

namespace lambda2 {

// Raised when a classification is requested for a graph without a
// cut-vertex; the cut-vertex decomposition does not apply there.
struct NotApplicable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when a certified internal invariant fails (never expected).
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Per-component index relations at one cut-vertex, in component order.
// big_second is the relation of the second eigenvalue of the unique
// component whose index exceeds the bound; present iff exactly one does.
struct Profile {
  std::vector<Rel> relations;
  std::optional<Rel> big_second;
};

enum class Classification { less_than, equal_to, greater_than, inconclusive };
std::string to_string(Classification);

Profile component_profile(const Graph& g, int cut_vertex, const BoundConstant& a);

// Decision table over the component index profile:
//   two or more components above the bound            -> greater_than
//   one above plus one at the bound                   -> greater_than
//   one above, none at, its second eigenvalue above   -> greater_than
//   one above, none at, second eigenvalue not above   -> inconclusive
//   none above, two or more at the bound              -> equal_to
//   none above, at most one at the bound              -> less_than
Classification grs_decide(const Profile&);

Classification classify_at(const Graph& g, int cut_vertex, const BoundConstant& a);

// First determined classification over cut-vertices in ascending id order;
// inconclusive only when every cut-vertex is. Throws NotApplicable when the
// graph has no cut-vertex.
Classification classify(const Graph& g, const BoundConstant& a);

// The a = 2 specialization, phrased through the Smith-catalog index tests.
Classification rs_classify(const Graph& g);

// Certified enclosure of the second largest eigenvalue from the two largest
// component indices at a cut-vertex: equal indices pin it exactly, otherwise
// it lies strictly between them.
struct Bounds {
  enum class Kind { exactly_alpha1, open };
  Kind kind;
  RootEnclosure lower;
  RootEnclosure upper;  // == lower for exactly_alpha1
};

Bounds component_index_bounds(const Graph& g, int cut_vertex);

// Tightest combination over all cut-vertices: an exact hit dominates, else
// the open intervals are intersected.
Bounds best_bounds(const Graph& g);

}  // namespace lambda2
