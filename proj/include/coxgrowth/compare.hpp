#ifndef COXGROWTH_COMPARE_HPP
#define COXGROWTH_COMPARE_HPP

#include <compare>
#include <optional>
#include <vector>

#include "coxgrowth/graph.hpp"
#include "coxgrowth/growth.hpp"

namespace coxgrowth {

/// Injective node map a -> b with m_st <= m'_{e(s)e(t)} for all pairs.
using Embedding = std::vector<int>;

/// Lexicographically first dominance embedding of `a` into `b`, if any.
std::optional<Embedding> dominates(const CoxeterGraph& a, const CoxeterGraph& b);
bool is_dominance_embedding(const CoxeterGraph& a, const CoxeterGraph& b, const Embedding& e);

/// Graphs obtained by attaching one new node to a single node of `g` with an
/// edge of the given weight; deduplicated up to isomorphism, sorted by canonical form.
std::vector<CoxeterGraph> extensions(const CoxeterGraph& g, Weight edge = Weight(3));
/// Union of the extensions of several graphs, deduplicated.
std::vector<CoxeterGraph> extensions(const std::vector<CoxeterGraph>& gs, Weight edge = Weight(3));

/// Certified comparison of two growth rates. Refines the (mutable) intervals
/// until they separate or an exact common root proves equality.
std::strong_ordering compare_rates(GrowthRate& a, GrowthRate& b);

struct MinimalRate {
  std::size_t index = 0;  // position in the input list
  CoxeterGraph graph;
  GrowthRate rate;
  /// True when no other member shares the minimal rate.
  bool unique = true;
};

/// Member of `gs` with certifiably minimal growth rate; exact ties are broken
/// by canonical form. Every group must be infinite.
MinimalRate minimal_rate(const std::vector<CoxeterGraph>& gs, const Rational& eps = default_epsilon(),
                         const ExponentTable& table = ExponentTable::standard());

}  // namespace coxgrowth

#endif  // COXGROWTH_COMPARE_HPP
