#include <doctest.h>

#include <cmath>
#include <random>

#include "lambda2/algebraic.hpp"

using namespace lambda2;

namespace {

bool interval_holds(const BoundConstant& b, double value) {
  return b.lo.get_d() < value && value <= b.hi.get_d() + 1e-12;
}

}  // namespace

TEST_CASE("from_rational") {
  BoundConstant two = from_rational(Rational(2));
  CHECK(two.defining == IntPoly{-2, 1});
  CHECK(two.lo == Rational(1));
  CHECK(two.hi == Rational(2));
  BoundConstant third = from_rational(make_rational(1, 3));
  CHECK(third.defining == IntPoly{-1, 3});
}

TEST_CASE("sqrt_int") {
  BoundConstant s3 = sqrt_int(3);
  CHECK(s3.defining == IntPoly{-3, 0, 1});
  CHECK(s3.lo == Rational(1));
  CHECK(s3.hi == Rational(2));
  CHECK(interval_holds(s3, std::sqrt(3.0)));
  CHECK_THROWS_AS(sqrt_int(4), std::invalid_argument);
  CHECK_THROWS_AS(sqrt_int(0), std::invalid_argument);
}

TEST_CASE("quad_surd") {
  BoundConstant golden = quad_surd(make_rational(-1, 2), make_rational(1, 2), 5);
  CHECK(golden.defining == IntPoly{-1, 1, 1});
  CHECK(interval_holds(golden, (std::sqrt(5.0) - 1) / 2));
  CHECK(golden.lo >= Rational(0));
  CHECK(golden.hi <= Rational(1));

  BoundConstant m1 = quad_surd(Rational(-1), Rational(1), 2);
  CHECK(m1.defining == IntPoly{-1, 2, 1});
  CHECK(interval_holds(m1, std::sqrt(2.0) - 1));

  BoundConstant neg = quad_surd(Rational(0), Rational(-1), 3);  // -sqrt(3)
  CHECK(neg.defining == IntPoly{-3, 0, 1});
  CHECK(interval_holds(neg, -std::sqrt(3.0)));

  CHECK_THROWS_AS(quad_surd(Rational(1), Rational(0), 3), std::invalid_argument);
  CHECK_THROWS_AS(quad_surd(Rational(1), Rational(1), 9), std::invalid_argument);
}

TEST_CASE("named bounds") {
  CHECK(named_bound("two").defining == IntPoly{-2, 1});
  BoundConstant ts = named_bound("two_sqrt2");
  CHECK(ts.defining == IntPoly{-8, 0, 1});
  CHECK(ts.lo == Rational(2));
  CHECK(ts.hi == Rational(3));
  CHECK(named_bound("sqrt2_minus_1").defining == IntPoly{-1, 2, 1});
  CHECK(named_bound("one").defining == IntPoly{-1, 1});
  CHECK(named_bound("one_third").defining == IntPoly{-1, 3});
  CHECK_THROWS_AS(named_bound("bogus"), std::invalid_argument);
}

TEST_CASE("bound grammar") {
  CHECK(parse_bound("2").defining == IntPoly{-2, 1});
  CHECK(parse_bound("sqrt3").defining == IntPoly{-3, 0, 1});
  CHECK(parse_bound("2sqrt2").defining == IntPoly{-8, 0, 1});
  CHECK(parse_bound("golden").defining == IntPoly{-1, 1, 1});
  CHECK(parse_bound("sqrt2m1").defining == IntPoly{-1, 2, 1});
  CHECK(parse_bound("1/3").defining == IntPoly{-1, 3});
  CHECK(parse_bound("rat:3/2").defining == IntPoly{-3, 2});
  CHECK(parse_bound("rat:100").defining == IntPoly{-100, 1});
  CHECK(parse_bound("sqrt:7").defining == IntPoly{-7, 0, 1});
  CHECK(parse_bound("surd:-1/2,1/2,5").defining == IntPoly{-1, 1, 1});
  CHECK_THROWS_AS(parse_bound("sqrt:4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bound("rat:x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bound("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bound("surd:1,0,5"), std::invalid_argument);
}

TEST_CASE("sign_at") {
  BoundConstant s3 = named_bound("sqrt3");
  CHECK(sign_at(IntPoly{-3, 0, 1}, s3) == Sign::zero);
  CHECK(sign_at(IntPoly{-2, 1}, s3) == Sign::negative);      // sqrt3 - 2 < 0
  CHECK(sign_at(IntPoly{0, -1, 0, 1}, s3) == Sign::positive);  // x^3 - x at sqrt3
  CHECK(sign_at(IntPoly{0, 3, 0, -4, 0, 1}, s3) == Sign::zero);
  CHECK_THROWS_AS(sign_at(IntPoly{}, s3), std::invalid_argument);
}

TEST_CASE("sign_at for defining polynomial is zero") {
  for (const char* name : {"two", "sqrt3", "two_sqrt2", "golden_conj", "sqrt2_minus_1", "one", "one_third"}) {
    BoundConstant b = named_bound(name);
    CHECK(sign_at(b.defining, b) == Sign::zero);
  }
}

TEST_CASE("sign_at survives endpoint roots of the query polynomial") {
  // p vanishes exactly at the initial lower endpoint, forcing the widening
  // path; the sign at the bound value must still come out right.
  BoundConstant m1 = named_bound("sqrt2_minus_1");  // interval (0, 1]
  IntPoly p = IntPoly{0, 1} * IntPoly{-2, 1};       // roots 0 and 2
  CHECK(sign_at(p, m1) == Sign::negative);          // a(a-2) < 0 for a ~ 0.414

  // close-conjugate defining polynomial: 5x^2 + 5x + 1 has roots about
  // -0.276 and -0.724; track the right one while p vanishes at -1/2
  BoundConstant tight = make_bound(IntPoly{1, 5, 5}, make_rational(-1, 2), Rational(0), "tight");
  IntPoly q = IntPoly{1, 2};  // root exactly -1/2
  CHECK(sign_at(q, tight) == Sign::positive);  // 2a + 1 > 0 at a ~ -0.276
  IntPoly q2 = IntPoly{1, 2} * IntPoly{-1, 1};
  CHECK(sign_at(q2, tight) == Sign::negative);
}

TEST_CASE("sign_at is stable under prior refinement") {
  std::mt19937 rng(4711);
  std::uniform_int_distribution<int> coef(-6, 6);
  BoundConstant s3 = named_bound("sqrt3");
  for (int iter = 0; iter < 80; ++iter) {
    std::vector<Int> c(4);
    for (auto& v : c) v = coef(rng);
    IntPoly p(std::move(c));
    if (p.is_zero()) continue;
    Sign base = sign_at(p, s3);
    for (long den : {10L, 1000L, 1000000L}) {
      BoundConstant fine = refine(s3, make_rational(1, den));
      CHECK(sign_at(p, fine) == base);
    }
  }
}

TEST_CASE("sign_at agrees with rational evaluation") {
  std::mt19937 rng(90210);
  std::uniform_int_distribution<int> coef(-9, 9), num(-12, 12);
  std::uniform_int_distribution<int> den(1, 9);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<Int> c(1 + rng() % 5);
    for (auto& v : c) v = coef(rng);
    IntPoly p(std::move(c));
    if (p.is_zero()) continue;
    Rational r = make_rational(num(rng), den(rng));
    int expect = sign_at_rational(p, r);
    Sign got = sign_at(p, from_rational(r));
    CHECK((expect < 0 ? Sign::negative : expect > 0 ? Sign::positive : Sign::zero) == got);
  }
}

TEST_CASE("refine shrinks the interval") {
  BoundConstant s3 = refine(named_bound("sqrt3"), make_rational(1, 100));
  CHECK(s3.hi - s3.lo <= make_rational(1, 100));
  CHECK(s3.lo.get_d() < 1.7321);
  CHECK(s3.hi.get_d() > 1.7320);

  BoundConstant ts = refine(named_bound("two_sqrt2"), make_rational(1, 1000));
  CHECK(ts.hi - ts.lo <= make_rational(1, 1000));
  CHECK(ts.lo.get_d() < 2.8284272);
  CHECK(ts.hi.get_d() > 2.8284270);

  BoundConstant two = refine(named_bound("two"), make_rational(1, 7));
  CHECK(two.hi == Rational(2));
  CHECK(two.hi - two.lo <= make_rational(1, 7));
}

TEST_CASE("compare_largest_roots") {
  IntPoly x2m3{-3, 0, 1};
  CHECK(compare_largest_roots(x2m3, x2m3) == Rel::equal);
  // K3 vs K2 charpolys: largest roots 2 and 1
  CHECK(compare_largest_roots(IntPoly{-2, -3, 0, 1}, IntPoly{-1, 0, 1}) == Rel::greater);
  // P5 vs K_{1,3}: both have largest root sqrt3
  CHECK(compare_largest_roots(IntPoly{0, 3, 0, -4, 0, 1}, IntPoly{0, 0, -3, 0, 1}) == Rel::equal);
  CHECK(compare_largest_roots(IntPoly{-1, 0, 1}, IntPoly{-2, -3, 0, 1}) == Rel::less);
  CHECK_THROWS_AS(isolate_largest_root(IntPoly{1, 0, 1}), std::invalid_argument);
}

TEST_CASE("isolate_largest_root encloses exactly the top root") {
  RootEnclosure e = isolate_largest_root(IntPoly{0, 3, 0, -4, 0, 1});
  CHECK(sturm_count(e.source, e.lo, e.hi) == 1);
  CHECK(e.lo.get_d() < std::sqrt(3.0));
  CHECK(e.hi.get_d() >= std::sqrt(3.0) - 1e-12);
  RootEnclosure fine = refine_enclosure(e, make_rational(1, 1 << 30));
  CHECK(std::abs(fine.approx() - std::sqrt(3.0)) < 1e-8);
}

TEST_CASE("symbolic tags") {
  RootEnclosure e = isolate_largest_root(IntPoly{0, 0, -3, 0, 1});  // K_{1,3}, root sqrt3
  auto tag = symbolic_tag(e);
  REQUIRE(tag.has_value());
  CHECK(*tag == "sqrt3");
  RootEnclosure k2 = isolate_largest_root(IntPoly{-1, 0, 1});
  auto t2 = symbolic_tag(k2);
  REQUIRE(t2.has_value());
  CHECK(*t2 == "1");
  RootEnclosure wild = isolate_largest_root(IntPoly{-1, -1, 0, 0, 1});  // quartic, no catalog match
  CHECK(!symbolic_tag(wild).has_value());
}

TEST_CASE("is_positive") {
  CHECK(is_positive(named_bound("sqrt3")));
  CHECK(is_positive(named_bound("one_third")));
  CHECK(!is_positive(from_rational(Rational(0))));
  CHECK(!is_positive(from_rational(Rational(-2))));
  CHECK(!is_positive(quad_surd(Rational(0), Rational(-1), 3)));
}
