#ifndef COXGROWTH_CLASSIFY_HPP
#define COXGROWTH_CLASSIFY_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "coxgrowth/graph.hpp"

namespace coxgrowth {

enum class Family {
  // spherical
  A, B, D, E6, E7, E8, F4, H3, H4, I2,
  // affine
  ATilde1, ATilde, BTilde, CTilde, DTilde, ETilde6, ETilde7, ETilde8, FTilde4, GTilde2,
  Indefinite,
};

/// Label of a connected Coxeter graph. `rank` is the number of nodes for
/// spherical types and (order - 1) for affine ones, matching the usual
/// subscripts (A_3 has 3 nodes, C~_2 has 3). `m` is only used by I2.
struct IrreducibleType {
  Family family = Family::Indefinite;
  int rank = 0;
  std::uint32_t m = 0;

  bool spherical() const;
  bool affine() const;
  /// Number of nodes of a graph of this type.
  int order() const;
  std::string name() const;

  auto operator<=>(const IrreducibleType&) const = default;
};

IrreducibleType classify_irreducible(const CoxeterGraph& g);

/// True iff every component is spherical; the empty graph is spherical.
bool is_spherical(const CoxeterGraph& g);
/// True iff every component is affine. Throws on the empty graph.
bool is_affine(const CoxeterGraph& g);

/// Component types of `g`, ordered by the smallest node of each component.
std::vector<IrreducibleType> component_types(const CoxeterGraph& g);

/// Exponents of the irreducible spherical groups. Replaceable per type so
/// callers can inject a corrupted table when testing the verification chain.
class ExponentTable {
 public:
  static const ExponentTable& standard();

  std::vector<int> exponents(const IrreducibleType& t) const;
  void override_entry(const IrreducibleType& t, std::vector<int> exponents);

 private:
  std::map<IrreducibleType, std::vector<int>> overrides_;
};

std::vector<int> exponents(const IrreducibleType& t);

/// Order of the finite group of type `t` as the product of (m_i + 1).
unsigned long long group_order(const IrreducibleType& t, const ExponentTable& table = ExponentTable::standard());

// Reference graphs for every named family (spherical and affine).
CoxeterGraph spherical_graph(const IrreducibleType& t);
CoxeterGraph affine_graph(const IrreducibleType& t);

/// All connected affine graphs with `order` nodes (including E~ types).
std::vector<IrreducibleType> affine_types_of_order(int order);
/// All irreducible spherical types with the given rank and labels <= max_m.
std::vector<IrreducibleType> spherical_types_of_rank(int rank, std::uint32_t max_m = 6);

}  // namespace coxgrowth

#endif  // COXGROWTH_CLASSIFY_HPP
