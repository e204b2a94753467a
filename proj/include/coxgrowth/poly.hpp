#ifndef COXGROWTH_POLY_HPP
#define COXGROWTH_POLY_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coxgrowth {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense polynomial in Z[t], coefficients in ascending degree, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long> coeffs);
  explicit IntPoly(std::vector<Integer> coeffs);
  static IntPoly monomial(const Integer& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Integer coeff(int i) const;
  const std::vector<Integer>& coefficients() const { return c_; }
  const Integer& leading() const { return c_.back(); }
  /// Exponent of the largest power of t dividing the polynomial.
  int valuation() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const Integer& c);
  IntPoly operator-() const;
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  Integer evaluate(const Integer& x) const;
  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;
  /// Sign of p(x) computed exactly.
  int sign_at(const Rational& x) const;

  IntPoly derivative() const;
  /// t^d p(1/t); d must be >= degree().
  IntPoly reversed(int d) const;
  IntPoly reversed() const { return reversed(degree()); }
  bool is_palindromic() const;
  /// Multiplies by t^k (k >= 0) or divides by t^{-k} (k < 0, must be exact).
  IntPoly shifted(int k) const;

  /// Non-negative gcd of the coefficients.
  Integer content() const;
  /// p / content(p), with positive leading coefficient.
  IntPoly primitive_part() const;
  IntPoly exact_quotient(const Integer& c) const;

  std::string to_string(std::string_view var = "t") const;

 private:
  void trim();
  std::vector<Integer> c_;
};

/// Quotient a / b when b divides a in Z[t]; nullopt otherwise.
std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b);
/// Remainder r with c*a = q*b + r for some positive integer c.
IntPoly positive_pseudo_remainder(const IntPoly& a, const IntPoly& b);
/// Monic-up-to-content gcd over Q[t]: primitive, positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
/// Product of the distinct irreducible factors of p (primitive).
IntPoly squarefree_part(const IntPoly& p);

/// [k] = 1 + t + ... + t^{k-1}.
IntPoly bracket(int k);
/// [k1,...,kr] = [k1]...[kr].
IntPoly bracket_product(std::span<const int> ks);
IntPoly bracket_product(std::initializer_list<int> ks);
/// d-th cyclotomic polynomial.
IntPoly cyclotomic(int d);
/// Cyclotomic indices d > 1 with [k] = prod Phi_d.
std::vector<int> bracket_cyclotomic_factors(int k);

/// Reduced ratio num/den: coprime over Q, den != 0 with positive leading
/// coefficient, and the integer contents of num and den coprime.
class RatFunc {
 public:
  RatFunc() : den_{1} {}
  RatFunc(IntPoly num);  // NOLINT(google-explicit-constructor)
  RatFunc(IntPoly num, IntPoly den);
  /// Skips the gcd; caller guarantees coprimality over Q.
  static RatFunc from_coprime(IntPoly num, IntPoly den);

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  Rational evaluate(const Rational& x) const;
  std::string to_string(std::string_view var = "t") const;

 private:
  void normalise_content();
  IntPoly num_;
  IntPoly den_;
};

/// Sturm chain of a square-free polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& squarefree);
  /// Number of distinct roots in (a, b]; p(a) must be nonzero.
  int count(const Rational& a, const Rational& b) const;
  int variations(const Rational& x) const;
  const IntPoly& polynomial() const { return chain_.front(); }

 private:
  std::vector<IntPoly> chain_;
};

/// Half-open interval (lo, hi] holding exactly one root of `poly`
/// (the square-free, t-free part of the polynomial it was computed from).
struct RootInterval {
  Rational lo;
  Rational hi;
  IntPoly poly;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  double approx() const { return midpoint().get_d(); }
};

Rational default_epsilon();  // 10^-12

/// Certified isolating interval of width <= eps around the smallest positive
/// real root of p. Throws NoPositiveRoot when p has none.
RootInterval smallest_positive_root(const IntPoly& p, const Rational& eps = default_epsilon());
/// Shrinks an isolating interval until its width is <= eps.
void refine(RootInterval& r, const Rational& eps);

}  // namespace coxgrowth

#endif  // COXGROWTH_POLY_HPP
