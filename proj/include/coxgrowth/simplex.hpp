#ifndef COXGROWTH_SIMPLEX_HPP
#define COXGROWTH_SIMPLEX_HPP

#include <optional>
#include <string>
#include <vector>

#include "coxgrowth/algnum.hpp"
#include "coxgrowth/classify.hpp"
#include "coxgrowth/graph.hpp"

namespace coxgrowth {

/// Symmetric matrix of inner products of unit normals.
class GramMatrix {
 public:
  explicit GramMatrix(int n = 0) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  int size() const { return n_; }
  AlgNum& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const AlgNum& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  friend bool operator==(const GramMatrix&, const GramMatrix&) = default;

 private:
  int n_;
  std::vector<AlgNum> a_;
};

/// Diagonal 1, off-diagonal -cos(pi/m_ij). Throws UnsupportedWeight.
GramMatrix gram(const CoxeterGraph& g);

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  auto operator<=>(const Signature&) const = default;
};

/// Inertia by exact symmetric elimination.
Signature signature(const GramMatrix& m);

enum class VolumeClass {
  Spherical,
  Affine,
  CompactHyperbolic,
  FiniteVolumeNoncompact,
  InfiniteVolume,
};

std::string to_string(VolumeClass c);

enum class LinkKind { Spherical, Affine, Other };

std::string to_string(LinkKind k);

struct VertexLink {
  int deleted_node = 0;
  LinkKind kind = LinkKind::Other;
  std::vector<IrreducibleType> types;
};

struct SimplexReport {
  VolumeClass volume = VolumeClass::InfiniteVolume;
  Signature signature;
  /// One entry per node for hyperbolic input; empty for spherical and affine.
  std::vector<VertexLink> links;
};

/// Volume class of the simplex with Coxeter graph `g`. When `dimension` is
/// given the graph must have dimension + 1 nodes. Throws InvalidArgument for
/// disconnected graphs and DomainError for Gram matrices of any other signature.
SimplexReport simplex_class(const CoxeterGraph& g, std::optional<int> dimension = std::nullopt);

/// Multisets {k_1..k_c}, c >= 2, k_i >= 3, with sum (k_i - 1) = n - 1; sorted by
/// number of parts, then lexicographically.
std::vector<std::vector<int>> ideal_link_partitions(int n);

/// All non-isomorphic FINITE_VOLUME_NONCOMPACT simplex graphs with n + 1 nodes
/// and weights in {2,3,4,5,6,inf}, sorted by canonical form.
std::vector<CoxeterGraph> noncompact_simplex_corpus(int n);

}  // namespace coxgrowth

#endif  // COXGROWTH_SIMPLEX_HPP
