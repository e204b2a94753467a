#ifndef COXGROWTH_GRAPH_HPP
#define COXGROWTH_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace coxgrowth {

/// Edge label m_ij of a Coxeter graph. Infinity is a sentinel ordered above
/// every finite label; the default label 2 means "no edge".
class Weight {
 public:
  static constexpr std::uint32_t kInfinityCode = std::numeric_limits<std::uint32_t>::max();

  constexpr Weight() = default;
  constexpr explicit Weight(std::uint32_t m) : code_(m) {}
  static constexpr Weight infinity() { return Weight(kInfinityCode); }

  constexpr bool is_infinite() const { return code_ == kInfinityCode; }
  constexpr bool is_edge() const { return code_ >= 3; }
  /// Finite label; meaningless for infinity.
  constexpr std::uint32_t value() const { return code_; }
  constexpr std::uint32_t code() const { return code_; }

  constexpr auto operator<=>(const Weight&) const = default;

  std::string to_string() const;

 private:
  std::uint32_t code_ = 2;
};

inline constexpr Weight kInfinity = Weight::infinity();

/// Subset of the nodes of a graph, stored as a bitmask (node i <-> bit i).
class NodeSubset {
 public:
  constexpr NodeSubset() = default;
  constexpr explicit NodeSubset(std::uint64_t mask) : mask_(mask) {}
  static NodeSubset of(std::initializer_list<int> nodes);
  static constexpr NodeSubset full(int n) {
    return NodeSubset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool contains(int i) const { return (mask_ >> i) & 1U; }
  constexpr bool empty() const { return mask_ == 0; }
  int size() const;
  int smallest() const;
  std::vector<int> members() const;

  constexpr NodeSubset with(int i) const { return NodeSubset(mask_ | (std::uint64_t{1} << i)); }
  constexpr NodeSubset without(int i) const { return NodeSubset(mask_ & ~(std::uint64_t{1} << i)); }

  constexpr auto operator<=>(const NodeSubset&) const = default;

 private:
  std::uint64_t mask_ = 0;
};

/// Raw 1-based weight map as read from user input, before validation.
using WeightMap = std::map<std::pair<int, int>, Weight>;

struct Edge {
  int i;
  int j;
  Weight m;
  auto operator<=>(const Edge&) const = default;
};

/// Coxeter graph on nodes 0..order()-1 with symmetric labels m_ij >= 2 (m_ii = 1).
/// A plain value type; all algorithms in the library take it by const reference.
class CoxeterGraph {
 public:
  static constexpr int kMaxOrder = 64;

  CoxeterGraph() = default;
  explicit CoxeterGraph(int n);
  CoxeterGraph(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  bool empty() const { return n_ == 0; }
  Weight weight(int i, int j) const;

  /// Sets m_ij = m_ji; validates range and m >= 2.
  void set_weight(int i, int j, Weight m);

  /// Appends an isolated node and returns its index.
  int add_node();

  std::vector<Edge> edges() const;
  /// Indices j with m_ij >= 3.
  std::vector<int> neighbours(int i) const;
  int degree(int i) const;
  bool has_infinite_edge() const;

  friend bool operator==(const CoxeterGraph&, const CoxeterGraph&) = default;

 private:
  void check_node(int i) const;

  int n_ = 0;
  std::vector<Weight> m_;
};

/// Builds a graph from a raw (1-based) weight map, enforcing every invariant.
CoxeterGraph validate(const WeightMap& raw, int n);

/// Linear graph [k1,...,kN] on N+1 nodes; every k >= 3.
CoxeterGraph from_linear_symbol(std::span<const Weight> symbol);
CoxeterGraph from_linear_symbol(std::initializer_list<Weight> symbol);

/// Y-shaped graph [p,3^{k,l}]: node 0 -p- node 1 (the centre of valency 3),
/// then simple strings of k and l edges hanging off the centre.
CoxeterGraph y_shape(Weight p, int k, int l);

/// Tree with simple legs of the given lengths around the centre node 0.
CoxeterGraph star(std::span<const int> legs);
CoxeterGraph star(std::initializer_list<int> legs);

/// Restriction to `t`, relabelled by the order-preserving map onto 0..|t|-1.
CoxeterGraph induced_subgraph(const CoxeterGraph& g, NodeSubset t);

/// Components under edges of weight >= 3, sorted by smallest member.
std::vector<NodeSubset> connected_components(const CoxeterGraph& g);
std::vector<NodeSubset> connected_components(const CoxeterGraph& g, NodeSubset within);
bool is_connected(const CoxeterGraph& g);

/// Relabels node i to perm[i].
CoxeterGraph permuted(const CoxeterGraph& g, std::span<const int> perm);

/// Isomorphism-invariant encoding: the upper triangle of the weight matrix
/// under a canonical relabelling.
struct CanonicalForm {
  int order = 0;
  std::vector<std::uint32_t> upper;

  auto operator<=>(const CanonicalForm&) const = default;
  std::vector<Edge> edges() const;
  CoxeterGraph graph() const;
  std::string to_string() const;
};

CanonicalForm canonical_form(const CoxeterGraph& g);
/// Canonical relabelling: node i of g goes to position labelling[i].
std::vector<int> canonical_labelling(const CoxeterGraph& g);
bool isomorphic(const CoxeterGraph& a, const CoxeterGraph& b);

std::string to_string(const CoxeterGraph& g);

}  // namespace coxgrowth

#endif  // COXGROWTH_GRAPH_HPP
