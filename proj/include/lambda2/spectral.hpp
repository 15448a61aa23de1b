#pragma once

#include <vector>

#include "lambda2/algebraic.hpp"
#include "lambda2/graph.hpp"
#include "lambda2/intpoly.hpp"

namespace lambda2 {

// Characteristic polynomial det(lambda*I - A), monic of degree n, computed
// by the exact integer Faddeev-LeVerrier recurrence. The empty graph has
// characteristic polynomial 1.
IntPoly charpoly(const Graph&);

// Simple cycles through an anchor, each reported once as its vertex set
// (distinct cycles may share a vertex set).
struct CycleSet {
  std::vector<std::vector<int>> cycles;
};
CycleSet cycles_through_vertex(const Graph&, int v);
CycleSet cycles_through_edge(const Graph&, int u, int v);

// Charpoly assembled from the deletion formulas anchored at a vertex or an
// edge; verification implementations with exponential cycle enumeration,
// gated by max_vertices.
IntPoly schwenk_vertex(const Graph&, int v, int max_vertices = 12);
IntPoly schwenk_edge(const Graph&, int u, int v, int max_vertices = 12);

// count_above: eigenvalues strictly greater than the constant, counted with
// multiplicity. multiplicity: the constant's multiplicity as an eigenvalue.
struct SpectralPosition {
  int count_above = 0;
  int multiplicity = 0;
};
SpectralPosition spectral_position(const Graph&, const BoundConstant&, int budget = 512);

// Exact relation of the j-th largest eigenvalue (1-based, with multiplicity)
// to the constant.
Rel compare_eigenvalue(const Graph&, int j, const BoundConstant&);

// Sign of Q(a) where charpoly = (lambda - a)^k * Q with k the exact
// multiplicity of a; computed as the sign of the k-th derivative at a.
// Returns +1 or -1; throws if a is not an eigenvalue.
int deflated_charpoly_sign(const Graph&, const BoundConstant&);

// All n eigenvalues (with multiplicity) to absolute tolerance tol, by Sturm
// isolation plus bisection; descending order.
std::vector<double> eigenvalues_approx(const Graph&, double tol);

// Integer reformulation of one-vertex interlacing: at every probe r the
// above-r count of G - v is the count of G minus zero or one.
bool interlacing_counts_ok(const Graph&, int v, const std::vector<Rational>& probes);

// Square-free layers s_i of p: s_1 holds the distinct roots, s_i the roots
// of multiplicity >= i; summing per-layer counts recovers multiplicities.
std::vector<IntPoly> squarefree_layers(const IntPoly&);

// Root counting with multiplicity over the layers of a fixed polynomial.
class RootCounter {
 public:
  explicit RootCounter(const IntPoly&);
  int above(const Rational&) const;

 private:
  std::vector<SturmChain> chains_;
};

}  // namespace lambda2
