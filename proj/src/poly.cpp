#include "coxgrowth/poly.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

#include "coxgrowth/errors.hpp"

namespace coxgrowth {

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(const Integer& c, int degree) {
  if (degree < 0) throw InvalidArgument("negative monomial degree");
  std::vector<Integer> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Integer IntPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

int IntPoly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return static_cast<int>(i);
  return -1;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly& IntPoly::operator*=(const Integer& c) {
  for (auto& x : c_) x *= c;
  trim();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Integer IntPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

double IntPoly::evaluate(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

int IntPoly::sign_at(const Rational& x) const {
  if (c_.empty()) return 0;
  // Homogenised Horner: sign of sum c_i p^i q^{d-i} for x = p/q, q > 0.
  const Integer& p = x.get_num();
  const Integer& q = x.get_den();
  Integer acc = c_.back();
  Integer pw = 1;
  for (std::size_t k = c_.size() - 1; k-- > 0;) {
    pw *= q;
    acc *= p;
    mpz_addmul(acc.get_mpz_t(), c_[k].get_mpz_t(), pw.get_mpz_t());
  }
  return sgn(acc);
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Integer> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

IntPoly IntPoly::reversed(int d) const {
  if (d < degree()) throw InvalidArgument("reversal degree below polynomial degree");
  std::vector<Integer> r(static_cast<std::size_t>(d) + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) r[static_cast<std::size_t>(d) - i] = c_[i];
  return IntPoly(std::move(r));
}

bool IntPoly::is_palindromic() const { return *this == reversed(); }

IntPoly IntPoly::shifted(int k) const {
  if (c_.empty() || k == 0) return *this;
  if (k > 0) {
    std::vector<Integer> r(static_cast<std::size_t>(k), Integer(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return IntPoly(std::move(r));
  }
  if (valuation() < -k) throw InvalidArgument("division by t^k is not exact");
  return IntPoly(std::vector<Integer>(c_.begin() - k, c_.end()));
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::exact_quotient(const Integer& c) const {
  IntPoly r = *this;
  for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

IntPoly IntPoly::primitive_part() const {
  if (c_.empty()) return {};
  Integer g = content();
  if (sgn(leading()) < 0) g = -g;
  return exact_quotient(g);
}

std::string IntPoly::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Integer& c = c_[k];
    if (sgn(c) == 0) continue;
    Integer a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || a != 1) os << a.get_str();
    if (k >= 1) {
      if (a != 1) os << "*";
      os << var;
      if (k >= 2) os << "^" << k;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Integer> r = a.coefficients();
  const int db = b.degree();
  const auto& bc = b.coefficients();
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db) + 1);
  Integer rem;
  for (int k = a.degree() - db; k >= 0; --k) {
    Integer& top = r[static_cast<std::size_t>(k + db)];
    if (sgn(top) == 0) continue;
    mpz_fdiv_qr(q[k].get_mpz_t(), rem.get_mpz_t(), top.get_mpz_t(), bc.back().get_mpz_t());
    if (sgn(rem) != 0) return std::nullopt;
    for (int j = 0; j <= db; ++j) mpz_submul(r[static_cast<std::size_t>(k + j)].get_mpz_t(), q[k].get_mpz_t(), bc[j].get_mpz_t());
  }
  for (int i = 0; i < db; ++i)
    if (sgn(r[static_cast<std::size_t>(i)]) != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

IntPoly positive_pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by zero");
  std::vector<Integer> r = a.coefficients();
  const int db = b.degree();
  const auto& bc = b.coefficients();
  Integer lb = abs(bc.back());
  const bool negate = sgn(bc.back()) < 0;
  int dr = a.degree();
  Integer f;
  while (dr >= db) {
    // r <- |lc(b)| r - sign(lc b) lc(r) t^{dr-db} b, which cancels the top term.
    f = r[static_cast<std::size_t>(dr)];
    if (negate) f = -f;
    for (auto& x : r) x *= lb;
    for (int j = 0; j <= db; ++j) mpz_submul(r[static_cast<std::size_t>(dr - db + j)].get_mpz_t(), f.get_mpz_t(), bc[j].get_mpz_t());
    r.resize(static_cast<std::size_t>(dr));
    while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
    dr = static_cast<int>(r.size()) - 1;
    // Keep coefficients small; division by a positive content preserves signs.
    if (!r.empty()) {
      Integer g = IntPoly(r).content();
      if (g > 1)
        for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
  }
  return IntPoly(std::move(r));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = positive_pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() <= 0) return p.primitive_part();
  IntPoly g = gcd(p, p.derivative());
  auto q = exact_divide(p.primitive_part(), g);
  return q->primitive_part();
}

IntPoly bracket(int k) {
  if (k < 1) throw InvalidArgument("bracket [k] needs k >= 1");
  return IntPoly(std::vector<Integer>(static_cast<std::size_t>(k), Integer(1)));
}

IntPoly bracket_product(std::span<const int> ks) {
  IntPoly r{1};
  for (int k : ks) r *= bracket(k);
  return r;
}

IntPoly bracket_product(std::initializer_list<int> ks) {
  return bracket_product(std::span<const int>(ks.begin(), ks.size()));
}

IntPoly cyclotomic(int d) {
  if (d < 1) throw InvalidArgument("cyclotomic index must be >= 1");
  static std::mutex mu;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  IntPoly p = IntPoly::monomial(1, d) - IntPoly{1};
  for (int e = 1; e < d; ++e)
    if (d % e == 0) p = *exact_divide(p, cyclotomic(e));
  std::lock_guard lock(mu);
  cache.emplace(d, p);
  return p;
}

std::vector<int> bracket_cyclotomic_factors(int k) {
  std::vector<int> out;
  for (int d = 2; d <= k; ++d)
    if (k % d == 0) out.push_back(d);
  return out;
}

// ---------------------------------------------------------------------------

RatFunc::RatFunc(IntPoly num) : num_(std::move(num)), den_{1} { normalise_content(); }

RatFunc::RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = IntPoly{1};
    return;
  }
  IntPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = *exact_divide(num_, g);
    den_ = *exact_divide(den_, g);
  }
  normalise_content();
}

RatFunc RatFunc::from_coprime(IntPoly num, IntPoly den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  RatFunc r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  if (r.num_.is_zero()) r.den_ = IntPoly{1};
  r.normalise_content();
  return r;
}

void RatFunc::normalise_content() {
  if (num_.is_zero()) {
    den_ = IntPoly{1};
    return;
  }
  Integer g = gcd(num_.content(), den_.content());
  if (sgn(den_.leading()) < 0) g = -g;
  if (g != 1) {
    num_ = num_.exact_quotient(g);
    den_ = den_.exact_quotient(g);
  }
}

RatFunc RatFunc::operator-() const { return from_coprime(-num_, den_); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DomainError("division by the zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

Rational RatFunc::evaluate(const Rational& x) const {
  Rational d = den_.evaluate(x);
  if (sgn(d) == 0) throw DomainError("rational function evaluated at a pole");
  return num_.evaluate(x) / d;
}

std::string RatFunc::to_string(std::string_view var) const {
  if (is_polynomial() && den_.leading() == 1) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

// ---------------------------------------------------------------------------

SturmSequence::SturmSequence(const IntPoly& squarefree) {
  chain_.push_back(squarefree);
  if (squarefree.degree() <= 0) return;
  chain_.push_back(squarefree.derivative().primitive_part());
  for (;;) {
    const IntPoly& a = chain_[chain_.size() - 2];
    const IntPoly& b = chain_.back();
    if (b.degree() <= 0) break;
    IntPoly r = positive_pseudo_remainder(a, b);
    if (r.is_zero()) break;
    Integer c = r.content();
    chain_.push_back(-r.exact_quotient(c));
  }
}

int SturmSequence::variations(const Rational& x) const {
  int changes = 0, last = 0;
  for (const IntPoly& p : chain_) {
    const int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

Rational default_epsilon() { return Rational(1, 1000000) * Rational(1, 1000000); }

namespace {

Rational cauchy_bound(const IntPoly& p) {
  Integer m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Integer(abs(p.coeff(i))));
  Rational b = Rational(m) / Rational(abs(p.leading())) + 1;
  return b;
}

}  // namespace

void refine(RootInterval& r, const Rational& eps) {
  if (r.hi - r.lo <= eps) return;
  if (r.poly.sign_at(r.hi) == 0) {
    Rational lo = r.hi - eps;
    if (lo > r.lo) r.lo = lo;
    return;
  }
  const int s_lo = r.poly.sign_at(r.lo);
  while (r.hi - r.lo > eps) {
    Rational mid = (r.lo + r.hi) / 2;
    const int s = r.poly.sign_at(mid);
    if (s == 0) {
      r.hi = mid;
      Rational lo = mid - eps;
      if (lo > r.lo) r.lo = lo;
      return;
    }
    if (s == s_lo)
      r.lo = mid;
    else
      r.hi = mid;
  }
}

RootInterval smallest_positive_root(const IntPoly& p, const Rational& eps) {
  if (p.is_zero()) throw InvalidArgument("root isolation of the zero polynomial");
  if (sgn(eps) <= 0) throw InvalidArgument("root isolation tolerance must be positive");
  IntPoly q = squarefree_part(p);
  q = q.shifted(-std::max(q.valuation(), 0)).primitive_part();
  if (q.degree() <= 0) throw NoPositiveRoot("polynomial " + p.to_string() + " has no positive real root");
  SturmSequence sturm(q);
  RootInterval r{Rational(0), cauchy_bound(q), q};
  if (sturm.count(r.lo, r.hi) == 0) throw NoPositiveRoot("polynomial " + p.to_string() + " has no positive real root");
  while (sturm.count(r.lo, r.hi) > 1) {
    Rational mid = (r.lo + r.hi) / 2;
    if (sturm.count(r.lo, mid) >= 1)
      r.hi = mid;
    else
      r.lo = mid;
  }
  refine(r, eps);
  return r;
}

}  // namespace coxgrowth
