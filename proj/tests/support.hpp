#ifndef COXGROWTH_TESTS_SUPPORT_HPP
#define COXGROWTH_TESTS_SUPPORT_HPP

// Independent reference implementations used as test oracles. Nothing here
// calls the library routine it is used to check.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "coxgrowth/classify.hpp"
#include "coxgrowth/graph.hpp"
#include "coxgrowth/poly.hpp"

namespace oracle {

using coxgrowth::CoxeterGraph;
using coxgrowth::Rational;
using coxgrowth::Weight;

inline std::vector<std::uint32_t> upper_under(const CoxeterGraph& g, const std::vector<int>& pos) {
  const int n = g.order();
  std::vector<int> at(n);
  for (int i = 0; i < n; ++i) at[pos[i]] = i;
  std::vector<std::uint32_t> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back(g.weight(at[i], at[j]).code());
  return out;
}

// Minimal upper triangle over all n! labellings.
inline std::vector<std::uint32_t> brute_canonical(const CoxeterGraph& g) {
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  auto best = upper_under(g, p);
  while (std::next_permutation(p.begin(), p.end())) best = std::min(best, upper_under(g, p));
  return best;
}

inline bool brute_isomorphic(const CoxeterGraph& a, const CoxeterGraph& b) {
  if (a.order() != b.order()) return false;
  std::vector<int> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < a.order() && ok; ++i)
      for (int j = i + 1; j < a.order() && ok; ++j) ok = a.weight(i, j) == b.weight(p[i], p[j]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline Weight random_weight(std::mt19937_64& rng, bool allow_infinity = true) {
  static const Weight kAll[] = {Weight(2), Weight(3), Weight(4), Weight(5), Weight(6), coxgrowth::kInfinity};
  std::uniform_int_distribution<int> d(0, allow_infinity ? 5 : 4);
  return kAll[d(rng)];
}

inline CoxeterGraph random_graph(std::mt19937_64& rng, int n, bool allow_infinity = true) {
  CoxeterGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.set_weight(i, j, random_weight(rng, allow_infinity));
  return g;
}

// Root of p in (lo, hi) by plain rational bisection; p(lo) and p(hi) must
// have opposite signs.
template <class F>
Rational bisect(F p, Rational lo, Rational hi, const Rational& eps) {
  const int slo = sgn(p(lo));
  while (hi - lo > eps) {
    Rational mid = (lo + hi) / 2;
    if (sgn(p(mid)) == slo)
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / 2;
}

// Every spherical graph with at most max_rank nodes, one per isomorphism class.
inline std::vector<CoxeterGraph> spherical_graphs_up_to(int max_rank) {
  std::vector<CoxeterGraph> out;
  std::set<coxgrowth::CanonicalForm> seen;
  for (int n = 1; n <= max_rank; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::vector<int> w(pairs, 0);
    for (;;) {
      CoxeterGraph g(n);
      int k = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.set_weight(i, j, Weight(2 + w[k++]));
      if (coxgrowth::is_spherical(g) && seen.insert(canonical_form(g)).second) out.push_back(g);
      int p = 0;
      while (p < pairs && w[p] == 4) w[p++] = 0;
      if (p == pairs) break;
      ++w[p];
    }
  }
  return out;
}

// (positive, negative, zero) eigenvalue counts of the Gram matrix by cyclic
// Jacobi rotations in doubles.
inline std::array<int, 3> gram_inertia(const CoxeterGraph& g) {
  const int n = g.order();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Weight m = g.weight(i, j);
      a[i][j] = i == j ? 1.0 : m.is_infinite() ? -1.0 : -std::cos(std::numbers::pi / m.value());
    }
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-28) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1 : -1) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::array<int, 3> s{};
  for (int i = 0; i < n; ++i) ++s[std::abs(a[i][i]) < 1e-9 ? 2 : a[i][i] > 0 ? 0 : 1];
  return s;
}

}  // namespace oracle

#endif  // COXGROWTH_TESTS_SUPPORT_HPP
