#include "coxgrowth/classify.hpp"

#include <algorithm>
#include <array>

#include "coxgrowth/errors.hpp"

namespace coxgrowth {

bool IrreducibleType::spherical() const {
  switch (family) {
    case Family::A: case Family::B: case Family::D: case Family::E6: case Family::E7:
    case Family::E8: case Family::F4: case Family::H3: case Family::H4: case Family::I2:
      return true;
    default:
      return false;
  }
}

bool IrreducibleType::affine() const { return !spherical() && family != Family::Indefinite; }

int IrreducibleType::order() const {
  if (family == Family::Indefinite) return 0;
  return spherical() ? rank : rank + 1;
}

std::string IrreducibleType::name() const {
  const std::string r = std::to_string(rank);
  switch (family) {
    case Family::A: return "A" + r;
    case Family::B: return "B" + r;
    case Family::D: return "D" + r;
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::H3: return "H3";
    case Family::H4: return "H4";
    case Family::I2: return "I2(" + std::to_string(m) + ")";
    case Family::ATilde1: return "~A1";
    case Family::ATilde: return "~A" + r;
    case Family::BTilde: return "~B" + r;
    case Family::CTilde: return "~C" + r;
    case Family::DTilde: return "~D" + r;
    case Family::ETilde6: return "~E6";
    case Family::ETilde7: return "~E7";
    case Family::ETilde8: return "~E8";
    case Family::FTilde4: return "~F4";
    case Family::GTilde2: return "~G2";
    case Family::Indefinite: return "indefinite";
  }
  return "?";
}

namespace {

constexpr IrreducibleType indefinite() { return IrreducibleType{Family::Indefinite, 0, 0}; }

// Walks a leg away from `centre` starting at `first`; returns the edge labels.
std::vector<Weight> walk_leg(const CoxeterGraph& g, int centre, int first) {
  std::vector<Weight> labels{g.weight(centre, first)};
  int prev = centre, cur = first;
  for (;;) {
    int next = -1;
    for (int u : g.neighbours(cur))
      if (u != prev) next = u;
    if (next < 0) break;
    labels.push_back(g.weight(cur, next));
    prev = cur;
    cur = next;
  }
  return labels;
}

IrreducibleType classify_path(const CoxeterGraph& g) {
  const int k = g.order();
  int start = 0;
  for (int v = 0; v < k; ++v)
    if (g.degree(v) == 1) {
      start = v;
      break;
    }
  const std::vector<int> first = g.neighbours(start);
  std::vector<Weight> w = walk_leg(g, start, first.front());

  std::vector<std::size_t> special;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != Weight(3)) special.push_back(i);
  const std::size_t last = w.size() - 1;
  auto at_end = [&](std::size_t i) { return i == 0 || i == last; };

  if (special.empty()) return {Family::A, k, 0};
  if (special.size() == 1) {
    const std::size_t i = special.front();
    const Weight m = w[i];
    if (m == Weight(4)) {
      if (at_end(i)) return {Family::B, k, 0};
      if (k == 4) return {Family::F4, 4, 0};
      if (k == 5 && (i == 2 || i == 1)) return {Family::FTilde4, 4, 0};
      return indefinite();
    }
    if (m == Weight(5) && at_end(i)) {
      if (k == 3) return {Family::H3, 3, 0};
      if (k == 4) return {Family::H4, 4, 0};
      return indefinite();
    }
    if (m == Weight(6) && at_end(i) && k == 3) return {Family::GTilde2, 2, 0};
    return indefinite();
  }
  if (special.size() == 2 && special[0] == 0 && special[1] == last && w[0] == Weight(4) && w[last] == Weight(4))
    return {Family::CTilde, k - 1, 0};
  return indefinite();
}

IrreducibleType classify_tree_with_one_branch(const CoxeterGraph& g, int centre) {
  std::vector<std::vector<Weight>> legs;
  for (int u : g.neighbours(centre)) legs.push_back(walk_leg(g, centre, u));
  std::sort(legs.begin(), legs.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });

  int non_simple = 0;
  for (const auto& leg : legs)
    for (Weight m : leg)
      if (m != Weight(3)) ++non_simple;

  const std::size_t a = legs[0].size(), b = legs[1].size(), c = legs[2].size();
  const int k = g.order();
  if (non_simple == 0) {
    if (a == 1 && b == 1) return {Family::D, k, 0};
    if (a == 1 && b == 2 && c == 2) return {Family::E6, 6, 0};
    if (a == 1 && b == 2 && c == 3) return {Family::E7, 7, 0};
    if (a == 1 && b == 2 && c == 4) return {Family::E8, 8, 0};
    if (a == 2 && b == 2 && c == 2) return {Family::ETilde6, 6, 0};
    if (a == 1 && b == 3 && c == 3) return {Family::ETilde7, 7, 0};
    if (a == 1 && b == 2 && c == 5) return {Family::ETilde8, 8, 0};
    return indefinite();
  }
  if (non_simple == 1 && a == 1 && b == 1) {
    // B~: the 4-label sits on the outer end of the longest leg (any leg when all have length one).
    for (const auto& leg : legs)
      if (leg.back() == Weight(4) && (leg.size() == c)) return {Family::BTilde, k - 1, 0};
  }
  return indefinite();
}

}  // namespace

IrreducibleType classify_irreducible(const CoxeterGraph& g) {
  const int k = g.order();
  if (k == 0) throw InvalidArgument("cannot classify the empty graph");
  if (!is_connected(g)) throw InvalidArgument("cannot classify a disconnected graph");
  if (k == 1) return {Family::A, 1, 0};
  if (k == 2) {
    const Weight m = g.weight(0, 1);
    if (m.is_infinite()) return {Family::ATilde1, 1, 0};
    if (m == Weight(3)) return {Family::A, 2, 0};
    if (m == Weight(4)) return {Family::B, 2, 0};
    return {Family::I2, 2, m.value()};
  }
  if (g.has_infinite_edge()) return indefinite();

  const auto edges = g.edges();
  const int e = static_cast<int>(edges.size());
  std::array<int, 5> deg_count{};
  int branch = -1, max_deg = 0;
  for (int v = 0; v < k; ++v) {
    const int d = g.degree(v);
    max_deg = std::max(max_deg, d);
    if (d < 5) ++deg_count[d];
    if (d == 3) branch = v;
  }

  if (e == k) {
    // A connected graph with as many edges as nodes has one cycle; it is affine only as A~.
    const bool simple_cycle = deg_count[2] == k;
    const bool all_three = std::all_of(edges.begin(), edges.end(), [](const Edge& x) { return x.m == Weight(3); });
    return simple_cycle && all_three ? IrreducibleType{Family::ATilde, k - 1, 0} : indefinite();
  }
  if (e != k - 1) return indefinite();

  if (max_deg >= 5) return indefinite();
  if (max_deg == 4) {
    const bool star = k == 5 && deg_count[1] == 4;
    const bool all_three = std::all_of(edges.begin(), edges.end(), [](const Edge& x) { return x.m == Weight(3); });
    return star && all_three ? IrreducibleType{Family::DTilde, 4, 0} : indefinite();
  }
  if (deg_count[3] == 0) return classify_path(g);
  if (deg_count[3] == 1) return classify_tree_with_one_branch(g, branch);
  if (deg_count[3] == 2) {
    const bool all_three = std::all_of(edges.begin(), edges.end(), [](const Edge& x) { return x.m == Weight(3); });
    if (!all_three) return indefinite();
    for (int v = 0; v < k; ++v) {
      if (g.degree(v) != 3) continue;
      int leaves = 0;
      for (int u : g.neighbours(v))
        if (g.degree(u) == 1) ++leaves;
      if (leaves != 2) return indefinite();
    }
    return {Family::DTilde, k - 1, 0};
  }
  return indefinite();
}

std::vector<IrreducibleType> component_types(const CoxeterGraph& g) {
  std::vector<IrreducibleType> out;
  for (NodeSubset c : connected_components(g)) out.push_back(classify_irreducible(induced_subgraph(g, c)));
  return out;
}

bool is_spherical(const CoxeterGraph& g) {
  const auto types = component_types(g);
  return std::all_of(types.begin(), types.end(), [](const IrreducibleType& t) { return t.spherical(); });
}

bool is_affine(const CoxeterGraph& g) {
  if (g.empty()) throw InvalidArgument("is_affine of the empty graph");
  const auto types = component_types(g);
  return std::all_of(types.begin(), types.end(), [](const IrreducibleType& t) { return t.affine(); });
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> standard_exponents(const IrreducibleType& t) {
  std::vector<int> e;
  const int n = t.rank;
  switch (t.family) {
    case Family::A:
      for (int i = 1; i <= n; ++i) e.push_back(i);
      break;
    case Family::B:
      for (int i = 1; i <= n; ++i) e.push_back(2 * i - 1);
      break;
    case Family::D:
      for (int i = 1; i <= n - 1; ++i) e.push_back(2 * i - 1);
      e.push_back(n - 1);
      break;
    case Family::E6: e = {1, 4, 5, 7, 8, 11}; break;
    case Family::E7: e = {1, 5, 7, 9, 11, 13, 17}; break;
    case Family::E8: e = {1, 7, 11, 13, 17, 19, 23, 29}; break;
    case Family::F4: e = {1, 5, 7, 11}; break;
    case Family::H3: e = {1, 5, 9}; break;
    case Family::H4: e = {1, 11, 19, 29}; break;
    case Family::I2: e = {1, static_cast<int>(t.m) - 1}; break;
    default:
      throw DomainError("exponents are only defined for spherical types, got " + t.name());
  }
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

const ExponentTable& ExponentTable::standard() {
  static const ExponentTable table;
  return table;
}

std::vector<int> ExponentTable::exponents(const IrreducibleType& t) const {
  if (auto it = overrides_.find(t); it != overrides_.end()) return it->second;
  return standard_exponents(t);
}

void ExponentTable::override_entry(const IrreducibleType& t, std::vector<int> exps) {
  overrides_[t] = std::move(exps);
}

std::vector<int> exponents(const IrreducibleType& t) { return standard_exponents(t); }

unsigned long long group_order(const IrreducibleType& t, const ExponentTable& table) {
  unsigned long long order = 1;
  for (int m : table.exponents(t)) order *= static_cast<unsigned long long>(m + 1);
  return order;
}

// ---------------------------------------------------------------------------

namespace {

CoxeterGraph path(int k, Weight first = Weight(3), Weight last = Weight(3)) {
  CoxeterGraph g(k);
  for (int i = 0; i + 1 < k; ++i) g.set_weight(i, i + 1, Weight(3));
  if (k >= 2) {
    g.set_weight(k - 2, k - 1, last);
    g.set_weight(0, 1, first);
  }
  return g;
}

}  // namespace

CoxeterGraph spherical_graph(const IrreducibleType& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return path(n);
    case Family::B:
      if (n < 2) break;
      return path(n, Weight(4));
    case Family::D:
      if (n < 4) break;
      return star({1, 1, n - 3});
    case Family::E6: return star({1, 2, 2});
    case Family::E7: return star({1, 2, 3});
    case Family::E8: return star({1, 2, 4});
    case Family::F4: return from_linear_symbol({Weight(3), Weight(4), Weight(3)});
    case Family::H3: return from_linear_symbol({Weight(5), Weight(3)});
    case Family::H4: return from_linear_symbol({Weight(5), Weight(3), Weight(3)});
    case Family::I2:
      if (t.m < 3) break;
      return from_linear_symbol({Weight(t.m)});
    default: break;
  }
  throw InvalidArgument("not a spherical type: " + t.name());
}

CoxeterGraph affine_graph(const IrreducibleType& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::ATilde1: return from_linear_symbol({kInfinity});
    case Family::ATilde: {
      if (n < 2) break;
      CoxeterGraph g = path(n + 1);
      g.set_weight(0, n, Weight(3));
      return g;
    }
    case Family::BTilde: {
      if (n < 3) break;
      CoxeterGraph g = path(n, Weight(4));
      g.add_node();
      g.set_weight(n - 2, n, Weight(3));
      return g;
    }
    case Family::CTilde:
      if (n < 2) break;
      return path(n + 1, Weight(4), Weight(4));
    case Family::DTilde: {
      if (n < 4) break;
      CoxeterGraph g = path(n - 1);
      g.add_node();
      g.set_weight(1, n - 1, Weight(3));
      g.add_node();
      g.set_weight(n - 3, n, Weight(3));
      return g;
    }
    case Family::ETilde6: return star({2, 2, 2});
    case Family::ETilde7: return star({1, 3, 3});
    case Family::ETilde8: return star({1, 2, 5});
    case Family::FTilde4: return from_linear_symbol({Weight(3), Weight(3), Weight(4), Weight(3)});
    case Family::GTilde2: return from_linear_symbol({Weight(6), Weight(3)});
    default: break;
  }
  throw InvalidArgument("not an affine type: " + t.name());
}

std::vector<IrreducibleType> affine_types_of_order(int order) {
  std::vector<IrreducibleType> out;
  const int n = order - 1;
  if (order == 2) out.push_back({Family::ATilde1, 1, 0});
  if (order >= 3) {
    out.push_back({Family::ATilde, n, 0});
    if (n >= 3) out.push_back({Family::BTilde, n, 0});
    out.push_back({Family::CTilde, n, 0});
    if (n >= 4) out.push_back({Family::DTilde, n, 0});
  }
  if (order == 3) out.push_back({Family::GTilde2, 2, 0});
  if (order == 5) out.push_back({Family::FTilde4, 4, 0});
  if (order == 7) out.push_back({Family::ETilde6, 6, 0});
  if (order == 8) out.push_back({Family::ETilde7, 7, 0});
  if (order == 9) out.push_back({Family::ETilde8, 8, 0});
  return out;
}

std::vector<IrreducibleType> spherical_types_of_rank(int rank, std::uint32_t max_m) {
  std::vector<IrreducibleType> out;
  if (rank < 1) return out;
  out.push_back({Family::A, rank, 0});
  if (rank == 2) {
    if (max_m >= 4) out.push_back({Family::B, 2, 0});
    for (std::uint32_t m = 5; m <= max_m; ++m) out.push_back({Family::I2, 2, m});
    return out;
  }
  if (rank >= 3 && max_m >= 4) out.push_back({Family::B, rank, 0});
  if (rank >= 4) out.push_back({Family::D, rank, 0});
  if (rank == 6) out.push_back({Family::E6, 6, 0});
  if (rank == 7) out.push_back({Family::E7, 7, 0});
  if (rank == 8) out.push_back({Family::E8, 8, 0});
  if (rank == 4 && max_m >= 4) out.push_back({Family::F4, 4, 0});
  if (rank == 3 && max_m >= 5) out.push_back({Family::H3, 3, 0});
  if (rank == 4 && max_m >= 5) out.push_back({Family::H4, 4, 0});
  return out;
}

}  // namespace coxgrowth
