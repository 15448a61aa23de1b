#include "lambda2/intpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace lambda2 {

namespace {

int sgn_int(const Int& v) { return sgn(v); }

// Dense rational polynomial, ascending coefficients; internal helper for
// division and remainder sequences.
struct RatPoly {
  std::vector<Rational> c;

  explicit RatPoly(const IntPoly& p) {
    c.reserve(p.coeffs().size());
    for (const Int& v : p.coeffs()) c.emplace_back(v);
  }
  RatPoly() = default;

  int degree() const {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
      if (c[i] != 0) return i;
    return -1;
  }
};

// In-place remainder of a by b (b nonzero); also fills the quotient.
void divmod(RatPoly& a, const RatPoly& b, RatPoly& quot) {
  int db = b.degree();
  int da = a.degree();
  quot.c.assign(da >= db ? da - db + 1 : 0, Rational(0));
  while (da >= db) {
    Rational f = a.c[da] / b.c[db];
    quot.c[da - db] = f;
    for (int i = 0; i <= db; ++i) a.c[da - db + i] -= f * b.c[i];
    a.c[da] = 0;  // cancel exactly
    da = a.degree();
  }
}

// Primitive integer polynomial equal to a positive rational multiple of r.
IntPoly primitive_scale(const RatPoly& r) {
  int d = r.degree();
  if (d < 0) return IntPoly{};
  Int lcm = 1;
  for (int i = 0; i <= d; ++i) {
    Int den = r.c[i].get_den();
    lcm = lcm / gcd(lcm, den) * den;
  }
  std::vector<Int> out(d + 1);
  for (int i = 0; i <= d; ++i) {
    Rational v = r.c[i] * lcm;
    out[i] = v.get_num();  // den is 1 after scaling
  }
  return primitive_part(IntPoly(std::move(out)));
}

// Primitive polynomial equal to a positive multiple of (a mod b over Q).
IntPoly remainder_primitive(const IntPoly& a, const IntPoly& b) {
  RatPoly ra(a), rb(b), q;
  divmod(ra, rb, q);
  return primitive_scale(ra);
}

}  // namespace

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::coeff(int i) const {
  static const Int kZero = 0;
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

const Int& IntPoly::leading() const {
  if (c_.empty()) throw std::invalid_argument("leading: zero polynomial");
  return c_.back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly{};
  std::vector<Int> out(a.coeffs().size() + b.coeffs().size() - 1);
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs().size(); ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a) {
  std::vector<Int> out(a.coeffs().size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = -a.coeffs()[i];
  return IntPoly(std::move(out));
}

IntPoly scale(const IntPoly& a, const Int& k) {
  if (k == 0) return IntPoly{};
  std::vector<Int> out(a.coeffs().size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = a.coeffs()[i] * k;
  return IntPoly(std::move(out));
}

IntPoly derivative(const IntPoly& p) {
  if (p.degree() <= 0) return IntPoly{};
  std::vector<Int> out(p.degree());
  for (int i = 1; i <= p.degree(); ++i) out[i - 1] = p.coeffs()[i] * i;
  return IntPoly(std::move(out));
}

Rational eval_rational(const IntPoly& p, const Rational& x) {
  Rational acc(0);
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + Rational(p.coeffs()[i]);
  return acc;
}

int sign_at_rational(const IntPoly& p, const Rational& x) {
  if (p.is_zero()) return 0;
  const Int& num = x.get_num();
  const Int& den = x.get_den();
  // sign of p(x) * den^deg; den > 0 so the scaling does not change the sign
  Int acc = p.leading();
  Int dpow = 1;
  for (int i = p.degree() - 1; i >= 0; --i) {
    dpow *= den;
    acc = acc * num + p.coeffs()[i] * dpow;
  }
  return sgn_int(acc);
}

std::optional<IntPoly> try_exact_div(const IntPoly& p, const IntPoly& d) {
  if (d.is_zero()) throw std::invalid_argument("exact_div: zero divisor");
  if (p.is_zero()) return IntPoly{};
  if (p.degree() < d.degree()) return std::nullopt;
  RatPoly rem(p), div(d), quot;
  divmod(rem, div, quot);
  if (rem.degree() >= 0) return std::nullopt;
  std::vector<Int> out(quot.c.size());
  for (size_t i = 0; i < quot.c.size(); ++i) {
    if (quot.c[i].get_den() != 1) return std::nullopt;
    out[i] = quot.c[i].get_num();
  }
  return IntPoly(std::move(out));
}

IntPoly exact_div(const IntPoly& p, const IntPoly& d) {
  auto q = try_exact_div(p, d);
  if (!q) throw std::invalid_argument("exact_div: not divisible");
  return std::move(*q);
}

Int content(const IntPoly& p) {
  Int g = 0;
  for (const Int& c : p.coeffs()) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return abs(g);
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  Int c = content(p);
  if (c == 1) return p;
  std::vector<Int> out(p.coeffs().size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = p.coeffs()[i] / c;
  return IntPoly(std::move(out));
}

IntPoly poly_gcd(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("poly_gcd: both zero");
  IntPoly a = primitive_part(p);
  IntPoly b = primitive_part(q);
  if (a.is_zero()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = remainder_primitive(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.leading() < 0) a = -a;
  return a;
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
  if (p.degree() <= 1) return p;
  return exact_div(p, poly_gcd(p, derivative(p)));
}

SturmChain::SturmChain(const IntPoly& p, bool assume_squarefree) {
  if (p.is_zero()) throw std::invalid_argument("sturm: zero polynomial");
  IntPoly s = assume_squarefree ? p : squarefree_part(p);
  seq_.push_back(s);
  if (s.degree() >= 1) {
    seq_.push_back(primitive_part(derivative(s)));
    while (seq_.back().degree() >= 1) {
      IntPoly r = remainder_primitive(seq_[seq_.size() - 2], seq_.back());
      if (r.is_zero()) break;  // cannot happen for square-free input
      seq_.push_back(-r);
    }
  }
}

int SturmChain::variations_at(const Rational& x) const {
  int var = 0, prev = 0;
  for (const IntPoly& s : seq_) {
    int sg = sign_at_rational(s, x);
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++var;
    prev = sg;
  }
  return var;
}

int SturmChain::variations_at_pos_inf() const {
  int var = 0, prev = 0;
  for (const IntPoly& s : seq_) {
    int sg = sgn_int(s.leading());
    if (prev != 0 && sg != prev) ++var;
    prev = sg;
  }
  return var;
}

int SturmChain::variations_at_neg_inf() const {
  int var = 0, prev = 0;
  for (const IntPoly& s : seq_) {
    int sg = sgn_int(s.leading());
    if (s.degree() % 2 == 1) sg = -sg;
    if (prev != 0 && sg != prev) ++var;
    prev = sg;
  }
  return var;
}

int SturmChain::count_in(const Rational& l, const Rational& u) const {
  return variations_at(l) - variations_at(u);
}

int SturmChain::count_above(const Rational& r) const {
  return variations_at(r) - variations_at_pos_inf();
}

int SturmChain::count_all() const {
  return variations_at_neg_inf() - variations_at_pos_inf();
}

int sturm_count(const IntPoly& p, const Rational& l, const Rational& u) {
  if (!(l < u)) throw std::invalid_argument("sturm_count: need l < u");
  return SturmChain(p).count_in(l, u);
}

int count_roots_above(const IntPoly& p, const Rational& r) {
  return SturmChain(p).count_above(r);
}

Rational cauchy_root_bound(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("cauchy_root_bound: zero polynomial");
  Int maxabs = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Int a = abs(p.coeffs()[i]);
    if (a > maxabs) maxabs = a;
  }
  return Rational(1) + make_rational(maxabs, abs(p.leading()));
}

std::string to_coeff_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  for (int i = 0; i <= p.degree(); ++i) {
    if (i) os << ',';
    os << p.coeffs()[i].get_str();
  }
  return os.str();
}

}  // namespace lambda2
