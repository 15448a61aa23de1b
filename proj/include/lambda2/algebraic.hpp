#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lambda2/intpoly.hpp"

namespace lambda2 {

enum class Sign { negative, zero, positive };
enum class Rel { less, equal, greater };

std::string to_string(Sign);
std::string to_string(Rel);

// An exact algebraic number given by an irreducible integer polynomial and a
// rational interval (lo, hi] isolating exactly one of its real roots.
// Irreducibility is verified for degrees 1 and 2; for higher degree it is a
// documented precondition and the refinement budget acts as the tripwire.
struct BoundConstant {
  IntPoly defining;  // primitive, positive leading coefficient
  Rational lo;
  Rational hi;
  double approx = 0.0;  // display only
  std::string text;     // display form, e.g. "sqrt3"
};

// A real algebraic value held as a square-free (not necessarily irreducible)
// polynomial plus an isolating interval (lo, hi].
struct RootEnclosure {
  IntPoly source;
  Rational lo;
  Rational hi;
  double approx() const;
};

BoundConstant from_rational(const Rational& r);
BoundConstant sqrt_int(const Int& d);  // d > 0, not a perfect square
// p + q*sqrt(d) with rational p, q (q != 0) and non-square d > 0.
BoundConstant quad_surd(const Rational& p, const Rational& q, const Int& d);

// Validates the isolating-interval invariant; degree <= 2 definitions are
// checked for irreducibility as well.
BoundConstant make_bound(IntPoly defining, Rational lo, Rational hi, std::string text);

// Names: two, sqrt3, two_sqrt2, golden_conj, sqrt2_minus_1, one, one_third.
BoundConstant named_bound(std::string_view name);

// CLI grammar: rat:<p>[/<q>] | sqrt:<d> | surd:<p>,<q>,<d> | 2 | sqrt3 |
// 2sqrt2 | golden | sqrt2m1 | 1 | 1/3.
BoundConstant parse_bound(std::string_view token);

// Exact sign of p at the value of a. Zero iff defining(a) divides p; else the
// isolating interval is refined until p has no root in it and the endpoint
// sign is conclusive.
Sign sign_at(const IntPoly& p, const BoundConstant& a, int budget = 512);

BoundConstant refine(const BoundConstant& a, const Rational& width, int budget = 512);

bool is_positive(const BoundConstant& a);

// Exact order of the two enclosed roots: intervals are refined until they
// separate, or a common root of gcd(source1, source2) certifies equality.
Rel compare_roots(const RootEnclosure&, const RootEnclosure&, int budget = 1024);

// Enclosure of the largest real root of p; throws if p has none.
RootEnclosure isolate_largest_root(const IntPoly& p, int budget = 1024);

Rel compare_largest_roots(const IntPoly& p1, const IntPoly& p2, int budget = 1024);

RootEnclosure refine_enclosure(const RootEnclosure&, const Rational& width, int budget = 1024);

// Exact display token when the enclosed value is a catalog constant (named
// bounds and small integers), identified by divisibility of the source.
std::optional<std::string> symbolic_tag(const RootEnclosure&);

}  // namespace lambda2
