#ifndef COXGROWTH_ALGNUM_HPP
#define COXGROWTH_ALGNUM_HPP

#include <gmpxx.h>

#include <array>
#include <string>

#include "coxgrowth/graph.hpp"

namespace coxgrowth {

/// Element of the multiquadratic field Q(sqrt2, sqrt3, sqrt5), stored as 8
/// rational coordinates. Internally coordinate k multiplies sqrt(d_k) where
/// bit 0 of k selects the prime 2, bit 1 the prime 3 and bit 2 the prime 5.
class AlgNum {
 public:
  static constexpr int kDim = 8;

  AlgNum() = default;
  AlgNum(long v) { c_[0] = v; }  // NOLINT(google-explicit-constructor)
  AlgNum(const mpq_class& v) { c_[0] = v; }  // NOLINT(google-explicit-constructor)

  /// sqrt(d) for squarefree d dividing 30.
  static AlgNum sqrt(int d);

  /// Coordinate on the basis {1, r2, r3, r5, r6, r10, r15, r30} in that order.
  const mpq_class& coordinate(int basis_index) const;
  /// Radicand of internal slot k (1, 2, 3, 6, 5, 10, 15, 30).
  static int radicand(int slot);

  bool is_zero() const;
  bool is_rational() const;
  /// Exact sign, decided by interval evaluation with increasing precision.
  int sign() const;
  double approx() const;

  AlgNum& operator+=(const AlgNum& o);
  AlgNum& operator-=(const AlgNum& o);
  AlgNum operator-() const;
  friend AlgNum operator+(AlgNum a, const AlgNum& b) { return a += b; }
  friend AlgNum operator-(AlgNum a, const AlgNum& b) { return a -= b; }
  friend AlgNum operator*(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator/(const AlgNum& a, const AlgNum& b) { return a * b.inverse(); }
  AlgNum inverse() const;

  friend bool operator==(const AlgNum& a, const AlgNum& b) { return a.c_ == b.c_; }

  /// Byte string identifying the element; equal iff the elements are equal.
  void append_key(std::string& out) const;
  std::string to_string() const;

 private:
  AlgNum conjugate(int prime_bit) const;
  std::array<mpq_class, kDim> c_{};
};

/// -cos(pi/m) for m in {2,3,4,5,6,inf} (inf gives -1). Throws UnsupportedWeight otherwise.
AlgNum minus_cos_pi_over(Weight m);

}  // namespace coxgrowth

#endif  // COXGROWTH_ALGNUM_HPP
