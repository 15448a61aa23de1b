#include <doctest.h>

#include <algorithm>
#include <random>

#include "lambda2/intpoly.hpp"

using namespace lambda2;

namespace {

IntPoly random_poly(std::mt19937& rng, int max_deg, int max_abs) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-max_abs, max_abs);
  int d = deg(rng);
  std::vector<Int> c(d + 1);
  for (auto& v : c) v = coef(rng);
  return IntPoly(std::move(c));
}

// Expands prod (x - z_i); the independent oracle for root-counting tests.
IntPoly from_roots(const std::vector<long>& roots) {
  IntPoly p{1};
  for (long z : roots) p = p * IntPoly{-z, 1};
  return p;
}

}  // namespace

TEST_CASE("intpoly arithmetic basics") {
  IntPoly xm1{-1, 1}, xp1{1, 1};
  CHECK(xm1 * xp1 == IntPoly{-1, 0, 1});
  IntPoly p{3, 0, 7};
  CHECK(p + IntPoly{} == p);
  CHECK(IntPoly{-3, 0, 1} * IntPoly{0, 1} == IntPoly{0, -3, 0, 1});
  CHECK(IntPoly{}.degree() == -1);
  CHECK(IntPoly(std::vector<Int>{0, 0, 0}).is_zero());
}

TEST_CASE("intpoly ring axioms on random inputs") {
  std::mt19937 rng(12345);
  for (int i = 0; i < 200; ++i) {
    IntPoly p = random_poly(rng, 5, 8), q = random_poly(rng, 5, 8), r = random_poly(rng, 5, 8);
    CHECK((p + q) * r == p * r + q * r);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p - p == IntPoly{});
  }
}

TEST_CASE("exact division") {
  CHECK(exact_div(IntPoly{-3, 0, 1}, IntPoly{-3, 0, 1}) == IntPoly{1});
  // (x^5 - 4x^3 + 3x) / (x^2 - 3) = x^3 - x
  CHECK(exact_div(IntPoly{0, 3, 0, -4, 0, 1}, IntPoly{-3, 0, 1}) == IntPoly{0, -1, 0, 1});
  CHECK(!try_exact_div(IntPoly{-2, 0, 1}, IntPoly{-1, 1}));
  CHECK_THROWS_AS(exact_div(IntPoly{-2, 0, 1}, IntPoly{-1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(exact_div(IntPoly{1}, IntPoly{}), std::invalid_argument);
}

TEST_CASE("exact division round-trips random products") {
  std::mt19937 rng(777);
  for (int i = 0; i < 200; ++i) {
    IntPoly p = random_poly(rng, 4, 6);
    IntPoly d = random_poly(rng, 3, 6);
    if (d.is_zero()) continue;
    CHECK(exact_div(p * d, d) == p);
  }
}

TEST_CASE("polynomial gcd") {
  CHECK(poly_gcd(IntPoly{-3, 0, 1}, IntPoly{0, -3, 0, 1}) == IntPoly{-3, 0, 1});
  CHECK(poly_gcd(IntPoly{-1, 1}, IntPoly{-2, 1}) == IntPoly{1});
  IntPoly p{-4, 0, 2};  // 2x^2 - 4
  CHECK(poly_gcd(p, p) == IntPoly{-2, 0, 1});
  CHECK_THROWS_AS(poly_gcd(IntPoly{}, IntPoly{}), std::invalid_argument);
}

TEST_CASE("derivative and evaluation") {
  CHECK(derivative(IntPoly{0, 0, -4, 0, 1}) == IntPoly{0, -8, 0, 4});
  CHECK(eval_rational(IntPoly{-3, 0, 1}, Rational(2)) == Rational(1));
  CHECK(eval_rational(IntPoly{-3, 0, 1}, make_rational(3, 2)) == make_rational(-3, 4));
  CHECK(sign_at_rational(IntPoly{-3, 0, 1}, make_rational(3, 2)) == -1);
  CHECK(sign_at_rational(IntPoly{-3, 0, 1}, Rational(2)) == 1);
  CHECK(sign_at_rational(IntPoly{-4, 0, 1}, Rational(2)) == 0);
}

TEST_CASE("sturm root counting") {
  IntPoly x2m3{-3, 0, 1};
  CHECK(sturm_count(x2m3, Rational(1), Rational(2)) == 1);
  CHECK(sturm_count(x2m3, Rational(2), Rational(3)) == 0);
  CHECK(sturm_count(IntPoly{-1, 0, 1}, Rational(-2), Rational(2)) == 2);
  CHECK_THROWS_AS(sturm_count(x2m3, Rational(2), Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(sturm_count(IntPoly{}, Rational(0), Rational(1)), std::invalid_argument);

  // half-open endpoints: a root at u counts, a root at l does not
  IntPoly xm1{-1, 1};
  CHECK(sturm_count(xm1, Rational(0), Rational(1)) == 1);
  CHECK(sturm_count(xm1, Rational(1), Rational(2)) == 0);
}

TEST_CASE("count_roots_above") {
  CHECK(count_roots_above(IntPoly{-3, 0, 1}, Rational(0)) == 1);
  CHECK(count_roots_above(IntPoly{0, 3, 0, -4, 0, 1}, Rational(-2)) == 5);
  CHECK(count_roots_above(IntPoly{1, 0, 1}, Rational(0)) == 0);
}

TEST_CASE("sturm interval additivity") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> pt(-6, 6);
  for (int i = 0; i < 150; ++i) {
    IntPoly p = random_poly(rng, 6, 5);
    if (p.is_zero() || p.degree() < 1) continue;
    int a = pt(rng), b = pt(rng), c = pt(rng);
    int lo = std::min({a, b, c}), hi = std::max({a, b, c});
    int mid = a + b + c - lo - hi;
    if (lo == mid || mid == hi) continue;
    CHECK(sturm_count(p, Rational(lo), Rational(mid)) + sturm_count(p, Rational(mid), Rational(hi)) ==
          sturm_count(p, Rational(lo), Rational(hi)));
  }
}

TEST_CASE("count_roots_above matches enumeration on split polynomials") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> rootv(-5, 5), cnt(1, 6), thr(-6, 6);
  for (int i = 0; i < 200; ++i) {
    std::vector<long> roots;
    int k = cnt(rng);
    for (int j = 0; j < k; ++j) roots.push_back(rootv(rng));
    IntPoly p = from_roots(roots);
    int r = thr(rng);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    int expect = 0;
    for (long z : roots)
      if (z > r) ++expect;
    CHECK(count_roots_above(p, Rational(r)) == expect);
  }
}

TEST_CASE("squarefree part strips multiplicity") {
  IntPoly p = IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{2, 1};
  CHECK(squarefree_part(p) == IntPoly{-1, 1} * IntPoly{2, 1});
}

TEST_CASE("coefficient string form") {
  CHECK(to_coeff_string(IntPoly{0, 3, 0, -4, 0, 1}) == "0,3,0,-4,0,1");
  CHECK(to_coeff_string(IntPoly{}) == "0");
}
