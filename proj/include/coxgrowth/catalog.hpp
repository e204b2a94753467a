#ifndef COXGROWTH_CATALOG_HPP
#define COXGROWTH_CATALOG_HPP

#include <string>
#include <vector>

#include "coxgrowth/graph.hpp"

namespace coxgrowth::catalog {

/// Non-cocompact simplex graph of minimal growth rate in dimension n, 2 <= n <= 9.
CoxeterGraph gamma(int n);

/// Order-4 graphs with an infinite edge: [inf,3,3], [3,inf,3], [inf,3^{1,1}].
CoxeterGraph w(int i);

/// Six-node graph of a non-simplex finite-volume polyhedron.
CoxeterGraph p0();

/// The four infinite-volume extensions of order-5 affine graphs, 1 <= i <= 4.
CoxeterGraph delta(int i);

/// F~4 extended at the node before its 4-edge.
CoxeterGraph f4_extension();

struct Named {
  std::string name;
  CoxeterGraph graph;
};

/// Every graph above under its short name ("gamma3", "w0", "p0", "delta2", ...).
std::vector<Named> all();

}  // namespace coxgrowth::catalog

#endif  // COXGROWTH_CATALOG_HPP
