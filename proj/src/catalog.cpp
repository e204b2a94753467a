#include "coxgrowth/catalog.hpp"

#include "coxgrowth/errors.hpp"

namespace coxgrowth::catalog {

namespace {

const Weight k3(3);
const Weight k4(4);
const Weight k6(6);

CoxeterGraph extended(CoxeterGraph g, int at) {
  const int v = g.add_node();
  g.set_weight(at, v, k3);
  return g;
}

}  // namespace

CoxeterGraph gamma(int n) {
  switch (n) {
    case 2: return from_linear_symbol({kInfinity, k3});
    case 3: return from_linear_symbol({k6, k3, k3});
    case 4: return y_shape(k4, 2, 1);
    case 5: return from_linear_symbol({k3, k4, k3, k3, k3});
    case 6: {
      // Legs of lengths 3 (ending in the 4-edge), 2 and 1 around node 3.
      CoxeterGraph g = from_linear_symbol({k4, k3, k3, k3, k3});
      return extended(std::move(g), 3);
    }
    case 7: return star({2, 2, 3});
    case 8: return star({1, 3, 4});
    case 9: return star({1, 2, 6});
    default: break;
  }
  throw InvalidArgument("gamma(n) is defined for 2 <= n <= 9");
}

CoxeterGraph w(int i) {
  switch (i) {
    case 0: return from_linear_symbol({kInfinity, k3, k3});
    case 1: return from_linear_symbol({k3, kInfinity, k3});
    case 2: return y_shape(kInfinity, 1, 1);
    default: break;
  }
  throw InvalidArgument("w(i) is defined for 0 <= i <= 2");
}

CoxeterGraph p0() {
  enum { A, B, C, D, E, F };
  const Edge edges[] = {
      {B, A, k4}, {A, D, k4}, {C, E, k3}, {E, D, k3}, {C, B, k3}, {F, C, k4}, {F, E, k4}, {B, D, k3},
  };
  return CoxeterGraph(6, edges);
}

CoxeterGraph delta(int i) {
  switch (i) {
    case 1: {
      // B~4 with the extra node on the end of the 4-edge away from the fork.
      enum { p0, p1, p2, p3, q1, q2 };
      const Edge edges[] = {{p0, p1, k4}, {p1, p2, k3}, {p1, q1, k3}, {p2, p3, k3}, {p2, q2, k3}};
      return CoxeterGraph(6, edges);
    }
    case 2: return extended(from_linear_symbol({k4, k3, k3, k4}), 1);
    case 3: return extended(from_linear_symbol({k3, k4, k3, k3}), 1);
    case 4: return extended(from_linear_symbol({k3, k4, k3, k3}), 2);
    default: break;
  }
  throw InvalidArgument("delta(i) is defined for 1 <= i <= 4");
}

CoxeterGraph f4_extension() { return delta(3); }

std::vector<Named> all() {
  std::vector<Named> out;
  for (int n = 2; n <= 9; ++n) out.push_back({"gamma" + std::to_string(n), gamma(n)});
  for (int i = 0; i <= 2; ++i) out.push_back({"w" + std::to_string(i), w(i)});
  out.push_back({"p0", p0()});
  for (int i = 1; i <= 4; ++i) out.push_back({"delta" + std::to_string(i), delta(i)});
  out.push_back({"f4ext", f4_extension()});
  return out;
}

}  // namespace coxgrowth::catalog
