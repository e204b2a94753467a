#ifndef COXGROWTH_ORACLE_HPP
#define COXGROWTH_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "coxgrowth/algnum.hpp"
#include "coxgrowth/graph.hpp"
#include "coxgrowth/poly.hpp"

namespace coxgrowth {

/// Square matrix over Q(sqrt2, sqrt3, sqrt5), row-major.
class ReflectionMatrix {
 public:
  explicit ReflectionMatrix(int n = 0) : n_(n), a_(static_cast<std::size_t>(n) * n) {}
  static ReflectionMatrix identity(int n);

  int size() const { return n_; }
  AlgNum& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const AlgNum& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  friend ReflectionMatrix operator*(const ReflectionMatrix& a, const ReflectionMatrix& b);
  friend bool operator==(const ReflectionMatrix&, const ReflectionMatrix&) = default;

  std::string key() const;

 private:
  int n_;
  std::vector<AlgNum> a_;
};

/// Generators s_i(e_j) = e_j + 2cos(pi/m_ij) e_i, s_i(e_i) = -e_i.
std::vector<ReflectionMatrix> tits_representation(const CoxeterGraph& g);

inline constexpr std::uint64_t kDefaultCap = 1000000;

/// Number of group elements of each length 0..k by breadth-first closure.
/// Throws CapExceeded once more than `cap` elements have been visited.
std::vector<Integer> bfs_counts(const CoxeterGraph& g, int k, std::uint64_t cap = kDefaultCap);

/// Size of the group when the closure terminates within `cap` elements.
std::uint64_t group_order(const CoxeterGraph& g, std::uint64_t cap = kDefaultCap);

/// Smallest p in 1..limit with (s_i s_j)^p = 1, or 0 if none.
int product_order(const CoxeterGraph& g, int i, int j, int limit);

}  // namespace coxgrowth

#endif  // COXGROWTH_ORACLE_HPP
