#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace lambda2 {

using Int = mpz_class;
using Rational = mpq_class;

// den must be nonzero; result is reduced with positive denominator.
Rational make_rational(const Int& num, const Int& den);

// Univariate polynomial with arbitrary-precision integer coefficients.
// Coefficients are ascending by degree with no trailing zeros; the zero
// polynomial is the empty vector and has degree() == -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Int& coeff(int i) const;
  const Int& leading() const;
  const std::vector<Int>& coeffs() const { return c_; }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<Int> c_;
};

IntPoly operator+(const IntPoly&, const IntPoly&);
IntPoly operator-(const IntPoly&, const IntPoly&);
IntPoly operator*(const IntPoly&, const IntPoly&);
IntPoly operator-(const IntPoly&);
IntPoly scale(const IntPoly&, const Int&);

IntPoly derivative(const IntPoly&);
Rational eval_rational(const IntPoly&, const Rational&);
int sign_at_rational(const IntPoly&, const Rational&);  // -1, 0, +1

// Exact division over the rationals; empty unless the remainder is zero and
// the quotient has integer coefficients.
std::optional<IntPoly> try_exact_div(const IntPoly& p, const IntPoly& d);
IntPoly exact_div(const IntPoly& p, const IntPoly& d);

Int content(const IntPoly&);  // gcd of |coefficients|, 0 for the zero poly
IntPoly primitive_part(const IntPoly&);
IntPoly poly_gcd(const IntPoly&, const IntPoly&);  // primitive, positive leading
IntPoly squarefree_part(const IntPoly&);           // p / gcd(p, p')

// Sturm chain of the square-free part of a polynomial. Counts are of
// distinct real roots; intervals follow the half-open (l, u] convention
// (a root at u counts, a root at l does not).
class SturmChain {
 public:
  explicit SturmChain(const IntPoly& p, bool assume_squarefree = false);
  int variations_at(const Rational& x) const;
  int variations_at_pos_inf() const;
  int variations_at_neg_inf() const;
  int count_in(const Rational& l, const Rational& u) const;
  int count_above(const Rational& r) const;
  int count_all() const;

 private:
  std::vector<IntPoly> seq_;
};

int sturm_count(const IntPoly& p, const Rational& l, const Rational& u);
int count_roots_above(const IntPoly& p, const Rational& r);

Rational cauchy_root_bound(const IntPoly&);  // all real roots lie in (-B, B)

std::string to_coeff_string(const IntPoly&);  // "0,3,0,-4,0,1"

}  // namespace lambda2
