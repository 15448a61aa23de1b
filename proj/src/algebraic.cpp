#include "lambda2/algebraic.hpp"

#include <stdexcept>
#include <vector>

namespace lambda2 {

namespace {

double midpoint_double(const Rational& lo, const Rational& hi) {
  Rational mid = (lo + hi) / 2;
  return mid.get_d();
}

// One bisection step keeping the single root of `chain` inside (lo, hi].
void bisect_step(const SturmChain& chain, Rational& lo, Rational& hi) {
  Rational mid = (lo + hi) / 2;
  if (chain.count_in(lo, mid) == 1)
    hi = mid;
  else
    lo = mid;
}

bool is_perfect_square(const Int& v) {
  if (v < 0) return false;
  return mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

Rational parse_rational_text(std::string_view s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return make_rational(Int(std::string(s)), 1);
    Int num(std::string(s.substr(0, slash)));
    Int den(std::string(s.substr(slash + 1)));
    if (den <= 0) throw std::invalid_argument("denominator must be positive");
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational: " + std::string(s));
  }
}

}  // namespace

std::string to_string(Sign s) {
  switch (s) {
    case Sign::negative: return "negative";
    case Sign::zero: return "zero";
    case Sign::positive: return "positive";
  }
  return "?";
}

std::string to_string(Rel r) {
  switch (r) {
    case Rel::less: return "less";
    case Rel::equal: return "equal";
    case Rel::greater: return "greater";
  }
  return "?";
}

double RootEnclosure::approx() const { return midpoint_double(lo, hi); }

BoundConstant make_bound(IntPoly defining, Rational lo, Rational hi, std::string text) {
  if (defining.degree() < 1) throw std::invalid_argument("bound: defining polynomial must be nonconstant");
  defining = primitive_part(defining);
  if (defining.leading() < 0) defining = -defining;
  if (!(lo < hi)) throw std::invalid_argument("bound: empty interval");
  if (defining.degree() == 2) {
    const Int disc = defining.coeff(1) * defining.coeff(1) - 4 * defining.coeff(2) * defining.coeff(0);
    if (is_perfect_square(disc))
      throw std::invalid_argument("bound: quadratic defining polynomial is reducible");
  }
  if (sturm_count(defining, lo, hi) != 1)
    throw std::invalid_argument("bound: interval does not isolate exactly one root");
  BoundConstant b{std::move(defining), std::move(lo), std::move(hi), 0.0, std::move(text)};
  b.approx = midpoint_double(b.lo, b.hi);
  return b;
}

BoundConstant from_rational(const Rational& r) {
  IntPoly defining(std::vector<Int>{-r.get_num(), r.get_den()});
  std::string text = r.get_num().get_str();
  if (r.get_den() != 1) text += "/" + r.get_den().get_str();
  BoundConstant b{std::move(defining), r - 1, r, r.get_d(), std::move(text)};
  return b;
}

BoundConstant sqrt_int(const Int& d) {
  if (d <= 0) throw std::invalid_argument("sqrt_int: need d > 0");
  if (is_perfect_square(d))
    throw std::invalid_argument("sqrt_int: d is a perfect square, use from_rational");
  Int root = sqrt(d);  // floor
  IntPoly defining(std::vector<Int>{-d, 0, 1});
  return make_bound(std::move(defining), Rational(root), Rational(root + 1), "sqrt:" + d.get_str());
}

BoundConstant quad_surd(const Rational& p, const Rational& q, const Int& d) {
  if (q == 0) throw std::invalid_argument("quad_surd: q must be nonzero");
  if (d <= 0) throw std::invalid_argument("quad_surd: need d > 0");
  if (is_perfect_square(d))
    throw std::invalid_argument("quad_surd: d is a perfect square, use from_rational");

  // minimal polynomial of p + q*sqrt(d), cleared to integer coefficients
  Rational c1 = -2 * p;
  Rational c0 = p * p - q * q * Rational(d);
  Int lcm = c1.get_den() / gcd(c1.get_den(), c0.get_den()) * c0.get_den();
  IntPoly defining(std::vector<Int>{Rational(c0 * lcm).get_num(), Rational(c1 * lcm).get_num(), lcm});
  defining = primitive_part(defining);

  // enclose sqrt(d), then the target root, shrinking until the conjugate
  // root p - q*sqrt(d) is excluded
  Rational slo(sqrt(d)), shi(sqrt(d) + 1);
  SturmChain chain(defining);
  for (int iter = 0; iter < 512; ++iter) {
    Rational lo = (q > 0) ? p + q * slo : p + q * shi;
    Rational hi = (q > 0) ? p + q * shi : p + q * slo;
    if (chain.count_in(lo, hi) == 1) {
      while (hi - lo > 1) {
        Rational mid = (lo + hi) / 2;
        if (chain.count_in(lo, mid) == 1)
          hi = mid;
        else
          lo = mid;
      }
      std::string text = "surd:" + p.get_num().get_str() +
                         (p.get_den() == 1 ? "" : "/" + p.get_den().get_str()) + "," +
                         q.get_num().get_str() +
                         (q.get_den() == 1 ? "" : "/" + q.get_den().get_str()) + "," + d.get_str();
      return make_bound(std::move(defining), std::move(lo), std::move(hi), std::move(text));
    }
    Rational mid = (slo + shi) / 2;
    if (mid * mid > Rational(d))
      shi = mid;
    else
      slo = mid;
  }
  throw std::runtime_error("quad_surd: isolation budget exceeded");
}

BoundConstant named_bound(std::string_view name) {
  auto with_text = [](BoundConstant b, const char* text) {
    b.text = text;
    return b;
  };
  if (name == "two") return with_text(from_rational(Rational(2)), "2");
  if (name == "sqrt3") return with_text(sqrt_int(3), "sqrt3");
  if (name == "two_sqrt2") return with_text(quad_surd(Rational(0), Rational(2), 2), "2sqrt2");
  if (name == "golden_conj")
    return with_text(quad_surd(make_rational(-1, 2), make_rational(1, 2), 5), "golden");
  if (name == "sqrt2_minus_1") return with_text(quad_surd(Rational(-1), Rational(1), 2), "sqrt2m1");
  if (name == "one") return with_text(from_rational(Rational(1)), "1");
  if (name == "one_third") return with_text(from_rational(make_rational(1, 3)), "1/3");
  throw std::invalid_argument("named_bound: unknown name " + std::string(name));
}

BoundConstant parse_bound(std::string_view token) {
  if (token == "2") return named_bound("two");
  if (token == "sqrt3") return named_bound("sqrt3");
  if (token == "2sqrt2") return named_bound("two_sqrt2");
  if (token == "golden") return named_bound("golden_conj");
  if (token == "sqrt2m1") return named_bound("sqrt2_minus_1");
  if (token == "1") return named_bound("one");
  if (token == "1/3") return named_bound("one_third");
  if (token.starts_with("rat:")) {
    BoundConstant b = from_rational(parse_rational_text(token.substr(4)));
    b.text = std::string(token);
    return b;
  }
  if (token.starts_with("sqrt:")) {
    try {
      return sqrt_int(Int(std::string(token.substr(5))));
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception&) {
      throw std::invalid_argument("bad bound: " + std::string(token));
    }
  }
  if (token.starts_with("surd:")) {
    std::string_view rest = token.substr(5);
    auto c1 = rest.find(',');
    auto c2 = rest.find(',', c1 == std::string_view::npos ? c1 : c1 + 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos)
      throw std::invalid_argument("bad bound: " + std::string(token));
    Rational p = parse_rational_text(rest.substr(0, c1));
    Rational q = parse_rational_text(rest.substr(c1 + 1, c2 - c1 - 1));
    Int d;
    try {
      d = Int(std::string(rest.substr(c2 + 1)));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad bound: " + std::string(token));
    }
    BoundConstant b = quad_surd(p, q, d);
    b.text = std::string(token);
    return b;
  }
  throw std::invalid_argument("unknown bound: " + std::string(token));
}

Sign sign_at(const IntPoly& p, const BoundConstant& a, int budget) {
  if (p.is_zero()) throw std::invalid_argument("sign_at: zero polynomial");
  if (try_exact_div(p, a.defining)) return Sign::zero;

  SturmChain pchain(p);
  SturmChain dchain(a.defining);
  Rational lo = a.lo, hi = a.hi;
  for (int iter = 0; iter < budget; ++iter) {
    if (pchain.count_in(lo, hi) == 0) {
      int s = sign_at_rational(p, lo);
      if (s != 0) return s < 0 ? Sign::negative : Sign::positive;
      lo -= (hi - lo) / 2;  // endpoint hit a root of p; widen and re-refine
      continue;
    }
    // Widening can pull further roots of the defining polynomial into the
    // interval from the left; the tracked value stays the rightmost one, so
    // bisection must prefer the right half whenever it holds a root.
    Rational mid = (lo + hi) / 2;
    if (dchain.count_in(mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  throw std::runtime_error("sign_at: refinement budget exceeded");
}

BoundConstant refine(const BoundConstant& a, const Rational& width, int budget) {
  if (!(width > 0)) throw std::invalid_argument("refine: width must be positive");
  BoundConstant out = a;
  SturmChain chain(a.defining);
  int iter = 0;
  while (out.hi - out.lo > width) {
    if (++iter > budget) throw std::runtime_error("refine: budget exceeded");
    bisect_step(chain, out.lo, out.hi);
  }
  out.approx = midpoint_double(out.lo, out.hi);
  return out;
}

bool is_positive(const BoundConstant& a) {
  return sign_at(IntPoly{0, 1}, a) == Sign::positive;
}

Rel compare_roots(const RootEnclosure& e1, const RootEnclosure& e2, int budget) {
  IntPoly g = poly_gcd(e1.source, e2.source);
  std::optional<SturmChain> gchain;
  if (g.degree() >= 1) gchain.emplace(g);
  SturmChain c1(e1.source), c2(e2.source);
  Rational lo1 = e1.lo, hi1 = e1.hi, lo2 = e2.lo, hi2 = e2.hi;
  for (int iter = 0; iter < budget; ++iter) {
    if (hi1 <= lo2) return Rel::less;
    if (hi2 <= lo1) return Rel::greater;
    Rational il = std::max(lo1, lo2), iu = std::min(hi1, hi2);
    if (gchain && il < iu && gchain->count_in(il, iu) >= 1) return Rel::equal;
    bisect_step(c1, lo1, hi1);
    bisect_step(c2, lo2, hi2);
  }
  throw std::runtime_error("compare_roots: refinement budget exceeded");
}

RootEnclosure isolate_largest_root(const IntPoly& p, int budget) {
  if (p.is_zero()) throw std::invalid_argument("isolate_largest_root: zero polynomial");
  IntPoly s = squarefree_part(p);
  SturmChain chain(s, true);
  if (chain.count_all() == 0) throw std::invalid_argument("isolate_largest_root: no real roots");
  Rational b = cauchy_root_bound(s);
  Rational lo = -b, hi = b;
  for (int iter = 0; iter < budget; ++iter) {
    int c = chain.count_above(lo);
    if (c == 1) return RootEnclosure{std::move(s), std::move(lo), std::move(hi)};
    Rational mid = (lo + hi) / 2;
    if (chain.count_above(mid) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  throw std::runtime_error("isolate_largest_root: budget exceeded");
}

Rel compare_largest_roots(const IntPoly& p1, const IntPoly& p2, int budget) {
  return compare_roots(isolate_largest_root(p1, budget), isolate_largest_root(p2, budget), budget);
}

RootEnclosure refine_enclosure(const RootEnclosure& e, const Rational& width, int budget) {
  if (!(width > 0)) throw std::invalid_argument("refine_enclosure: width must be positive");
  RootEnclosure out = e;
  SturmChain chain(e.source);
  int iter = 0;
  while (out.hi - out.lo > width) {
    if (++iter > budget) throw std::runtime_error("refine_enclosure: budget exceeded");
    bisect_step(chain, out.lo, out.hi);
  }
  return out;
}

std::optional<std::string> symbolic_tag(const RootEnclosure& e) {
  static const std::vector<BoundConstant> catalog = [] {
    std::vector<BoundConstant> out;
    for (const char* name : {"two", "sqrt3", "two_sqrt2", "golden_conj", "sqrt2_minus_1", "one", "one_third"})
      out.push_back(named_bound(name));
    for (int k = -3; k <= 3; ++k) {
      if (k == 1 || k == 2) continue;  // already present
      out.push_back(from_rational(Rational(k)));
    }
    return out;
  }();
  for (const BoundConstant& cand : catalog) {
    if (!try_exact_div(e.source, cand.defining)) continue;
    if (sturm_count(cand.defining, e.lo, e.hi) == 1) return cand.text;
  }
  return std::nullopt;
}

}  // namespace lambda2
