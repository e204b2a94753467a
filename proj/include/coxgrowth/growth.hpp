#ifndef COXGROWTH_GROWTH_HPP
#define COXGROWTH_GROWTH_HPP

#include <map>
#include <string>
#include <vector>

#include "coxgrowth/classify.hpp"
#include "coxgrowth/graph.hpp"
#include "coxgrowth/poly.hpp"

namespace coxgrowth {

/// A special subgroup W_T of finite order.
struct FiniteSubsetRecord {
  NodeSubset subset;
  std::vector<IrreducibleType> types;  // sorted multiset of component types
  IntPoly poincare;                    // Solomon: product over exponents of [m_i + 1]
};

/// Every T (including the empty set) with W_T finite, sorted by bitmask.
std::vector<FiniteSubsetRecord> finite_subsets(const CoxeterGraph& g,
                                               const ExponentTable& table = ExponentTable::standard());

/// Poincare polynomial of a finite group from its component types.
IntPoly poincare_polynomial(const std::vector<IrreducibleType>& types,
                            const ExponentTable& table = ExponentTable::standard());

/// Steinberg's alternating sum  sum_T (-1)^{|T|} / f_T(t)  = 1 / f_S(1/t), reduced.
RatFunc steinberg(const CoxeterGraph& g, const ExponentTable& table = ExponentTable::standard());

/// Terms of the Steinberg sum grouped by denominator: the sorted bracket list
/// [m_1+1, ..., m_r+1] of each finite W_T mapped to the summed signs.
/// Groups whose signs cancel are dropped.
std::map<std::vector<int>, long> steinberg_terms(const CoxeterGraph& g,
                                                 const ExponentTable& table = ExponentTable::standard());

struct GrowthSeries {
  bool finite = false;
  /// f_S(t); a polynomial when the group is finite.
  RatFunc f;
  /// 1 / f_S(1/t).
  RatFunc steinberg_form;
};

GrowthSeries growth_series(const CoxeterGraph& g, const ExponentTable& table = ExponentTable::standard());

/// Growth rate tau = 1/R, R the radius of convergence of f_S.
struct GrowthRate {
  enum class Kind {
    Exponential,  // tau > 1, certified by `radius`
    Unit,         // tau = 1 (affine, or a product of affine and finite factors)
  };
  Kind kind = Kind::Exponential;
  /// Isolating interval (lo, hi] for R inside (0, 1); unused for Unit.
  RootInterval radius;

  /// tau in [tau_lo(), tau_hi()).
  Rational tau_lo() const;
  Rational tau_hi() const;
  double approx() const;
};

/// Throws DomainError for finite groups.
GrowthRate growth_rate(const CoxeterGraph& g, const Rational& eps = default_epsilon(),
                       const ExponentTable& table = ExponentTable::standard());

/// Midpoint of the certified tau interval to 6 decimals, with the interval width.
std::string format_rate(const GrowthRate& r);

/// Number of elements of each length 0..k, by power-series division.
std::vector<Integer> series_coeffs(const CoxeterGraph& g, int k,
                                   const ExponentTable& table = ExponentTable::standard());

}  // namespace coxgrowth

#endif  // COXGROWTH_GROWTH_HPP
