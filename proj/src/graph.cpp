#include "coxgrowth/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "coxgrowth/errors.hpp"

namespace coxgrowth {

std::string Weight::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(code_);
}

NodeSubset NodeSubset::of(std::initializer_list<int> nodes) {
  std::uint64_t mask = 0;
  for (int i : nodes) {
    if (i < 0 || i >= 64) throw InvalidArgument("node index out of range");
    mask |= std::uint64_t{1} << i;
  }
  return NodeSubset(mask);
}

int NodeSubset::size() const { return std::popcount(mask_); }

int NodeSubset::smallest() const { return mask_ == 0 ? -1 : std::countr_zero(mask_); }

std::vector<int> NodeSubset::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

// ---------------------------------------------------------------------------

CoxeterGraph::CoxeterGraph(int n) : n_(n) {
  if (n < 0 || n > kMaxOrder) throw InvalidArgument("graph order must be in 0.." + std::to_string(kMaxOrder));
  m_.assign(static_cast<std::size_t>(n) * n, Weight(2));
  for (int i = 0; i < n; ++i) m_[static_cast<std::size_t>(i) * n + i] = Weight(1);
}

CoxeterGraph::CoxeterGraph(int n, std::span<const Edge> edges) : CoxeterGraph(n) {
  for (const Edge& e : edges) set_weight(e.i, e.j, e.m);
}

void CoxeterGraph::check_node(int i) const {
  if (i < 0 || i >= n_) throw InvalidArgument("node index " + std::to_string(i) + " out of range");
}

Weight CoxeterGraph::weight(int i, int j) const {
  check_node(i);
  check_node(j);
  return m_[static_cast<std::size_t>(i) * n_ + j];
}

void CoxeterGraph::set_weight(int i, int j, Weight m) {
  check_node(i);
  check_node(j);
  if (i == j) throw InvalidArgument("self-weights are implicit (m_ii = 1)");
  if (m < Weight(2)) throw InvalidArgument("weight must be >= 2, got " + m.to_string());
  m_[static_cast<std::size_t>(i) * n_ + j] = m;
  m_[static_cast<std::size_t>(j) * n_ + i] = m;
}

int CoxeterGraph::add_node() {
  CoxeterGraph bigger(n_ + 1);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) bigger.set_weight(i, j, weight(i, j));
  *this = std::move(bigger);
  return n_ - 1;
}

std::vector<Edge> CoxeterGraph::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (Weight m = m_[static_cast<std::size_t>(i) * n_ + j]; m.is_edge()) out.push_back({i, j, m});
  return out;
}

std::vector<int> CoxeterGraph::neighbours(int i) const {
  check_node(i);
  std::vector<int> out;
  for (int j = 0; j < n_; ++j)
    if (j != i && m_[static_cast<std::size_t>(i) * n_ + j].is_edge()) out.push_back(j);
  return out;
}

int CoxeterGraph::degree(int i) const { return static_cast<int>(neighbours(i).size()); }

bool CoxeterGraph::has_infinite_edge() const {
  return std::any_of(m_.begin(), m_.end(), [](Weight w) { return w.is_infinite(); });
}

// ---------------------------------------------------------------------------

CoxeterGraph validate(const WeightMap& raw, int n) {
  if (n < 1) throw InvalidArgument("graph must have at least one node");
  if (n > CoxeterGraph::kMaxOrder) throw InvalidArgument("graph order exceeds " + std::to_string(CoxeterGraph::kMaxOrder));
  CoxeterGraph g(n);
  for (const auto& [key, m] : raw) {
    auto [i, j] = key;
    if (i < 1 || i > n || j < 1 || j > n)
      throw InvalidArgument("edge (" + std::to_string(i) + "," + std::to_string(j) + ") out of range 1.." + std::to_string(n));
    if (i == j) throw InvalidArgument("self-weight at node " + std::to_string(i));
    if (m < Weight(2)) throw InvalidArgument("weight " + m.to_string() + " < 2 on edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
    if (auto it = raw.find({j, i}); it != raw.end() && it->second != m)
      throw InvalidArgument("asymmetric weights on (" + std::to_string(i) + "," + std::to_string(j) + "): " + m.to_string() +
                            " vs " + it->second.to_string());
    g.set_weight(i - 1, j - 1, m);
  }
  return g;
}

CoxeterGraph from_linear_symbol(std::span<const Weight> symbol) {
  if (symbol.empty()) throw InvalidArgument("empty Coxeter symbol");
  CoxeterGraph g(static_cast<int>(symbol.size()) + 1);
  for (std::size_t i = 0; i < symbol.size(); ++i) {
    if (symbol[i] < Weight(3)) throw InvalidArgument("linear symbol weights must be >= 3");
    g.set_weight(static_cast<int>(i), static_cast<int>(i) + 1, symbol[i]);
  }
  return g;
}

CoxeterGraph from_linear_symbol(std::initializer_list<Weight> symbol) {
  return from_linear_symbol(std::span<const Weight>(symbol.begin(), symbol.size()));
}

CoxeterGraph y_shape(Weight p, int k, int l) {
  if (p < Weight(3) || k < 1 || l < 1) throw InvalidArgument("[p,3^{k,l}] needs p >= 3 and k,l >= 1");
  CoxeterGraph g(2 + k + l);
  g.set_weight(0, 1, p);
  int prev = 1;
  for (int i = 0; i < k; ++i) {
    g.set_weight(prev, 2 + i, Weight(3));
    prev = 2 + i;
  }
  prev = 1;
  for (int i = 0; i < l; ++i) {
    g.set_weight(prev, 2 + k + i, Weight(3));
    prev = 2 + k + i;
  }
  return g;
}

CoxeterGraph star(std::span<const int> legs) {
  int n = 1;
  for (int l : legs) {
    if (l < 0) throw InvalidArgument("leg lengths must be non-negative");
    n += l;
  }
  CoxeterGraph g(n);
  int next = 1;
  for (int l : legs) {
    int prev = 0;
    for (int i = 0; i < l; ++i, ++next) {
      g.set_weight(prev, next, Weight(3));
      prev = next;
    }
  }
  return g;
}

CoxeterGraph star(std::initializer_list<int> legs) { return star(std::span<const int>(legs.begin(), legs.size())); }

CoxeterGraph induced_subgraph(const CoxeterGraph& g, NodeSubset t) {
  if (g.order() < 64 && (t.mask() >> g.order()) != 0) throw InvalidArgument("subset out of range");
  const std::vector<int> nodes = t.members();
  CoxeterGraph h(static_cast<int>(nodes.size()));
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = a + 1; b < nodes.size(); ++b)
      h.set_weight(static_cast<int>(a), static_cast<int>(b), g.weight(nodes[a], nodes[b]));
  return h;
}

std::vector<NodeSubset> connected_components(const CoxeterGraph& g, NodeSubset within) {
  std::vector<NodeSubset> out;
  std::uint64_t left = within.mask() & NodeSubset::full(g.order()).mask();
  while (left != 0) {
    std::uint64_t comp = left & (~left + 1);
    std::uint64_t frontier = comp;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) {
        const int v = std::countr_zero(f);
        for (std::uint64_t r = left & ~comp; r != 0; r &= r - 1) {
          const int u = std::countr_zero(r);
          if (g.weight(v, u).is_edge()) next |= std::uint64_t{1} << u;
        }
      }
      next &= ~comp;
      comp |= next;
      frontier = next;
    }
    out.emplace_back(comp);
    left &= ~comp;
  }
  return out;
}

std::vector<NodeSubset> connected_components(const CoxeterGraph& g) {
  return connected_components(g, NodeSubset::full(g.order()));
}

bool is_connected(const CoxeterGraph& g) { return connected_components(g).size() == 1; }

CoxeterGraph permuted(const CoxeterGraph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw InvalidArgument("permutation size mismatch");
  CoxeterGraph h(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j) h.set_weight(perm[i], perm[j], g.weight(i, j));
  return h;
}

// ---------------------------------------------------------------------------
// Canonical labelling by individualisation-refinement: colour refinement on
// (colour, multiset of (weight, neighbour colour)), branching on the first
// non-singleton cell, keeping the lexicographically smallest upper triangle
// over all leaves. Twin vertices in a cell are explored once.

namespace {

using Colouring = std::vector<int>;

void refine(const CoxeterGraph& g, Colouring& col) {
  const int n = g.order();
  int classes = n == 0 ? 0 : *std::max_element(col.begin(), col.end()) + 1;
  std::vector<std::pair<std::vector<std::uint64_t>, int>> sig(n);
  for (;;) {
    for (int v = 0; v < n; ++v) {
      auto& s = sig[v].first;
      s.clear();
      s.push_back(static_cast<std::uint64_t>(col[v]));
      for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        Weight w = g.weight(v, u);
        if (w.is_edge()) s.push_back((static_cast<std::uint64_t>(w.code()) << 8) | static_cast<std::uint64_t>(col[u]));
      }
      std::sort(s.begin() + 1, s.end());
      sig[v].second = v;
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a].first < sig[b].first; });
    int c = -1;
    for (int idx = 0; idx < n; ++idx) {
      if (idx == 0 || sig[order[idx]].first != sig[order[idx - 1]].first) ++c;
      col[order[idx]] = c;
    }
    if (c + 1 == classes) return;
    classes = c + 1;
  }
}

std::vector<std::uint32_t> leaf_code(const CoxeterGraph& g, const Colouring& col) {
  const int n = g.order();
  std::vector<int> inv(n);
  for (int v = 0; v < n; ++v) inv[col[v]] = v;
  std::vector<std::uint32_t> code;
  code.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) code.push_back(g.weight(inv[a], inv[b]).code());
  return code;
}

bool twins(const CoxeterGraph& g, int v, int w) {
  for (int u = 0; u < g.order(); ++u)
    if (u != v && u != w && g.weight(v, u) != g.weight(w, u)) return false;
  return true;
}

struct Search {
  const CoxeterGraph& g;
  std::vector<std::uint32_t> best;
  Colouring best_col;
  bool have = false;

  void run(Colouring col) {
    refine(g, col);
    const int n = g.order();
    std::vector<int> count(n, 0);
    for (int c : col) ++count[c];
    int target = -1;
    for (int c = 0; c < n; ++c)
      if (count[c] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      auto code = leaf_code(g, col);
      if (!have || code < best) {
        best = std::move(code);
        best_col = col;
        have = true;
      }
      return;
    }
    std::vector<int> tried;
    for (int v = 0; v < n; ++v) {
      if (col[v] != target) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](int w) { return twins(g, v, w); })) continue;
      tried.push_back(v);
      Colouring next(col);
      for (int u = 0; u < n; ++u)
        if (col[u] > target || (col[u] == target && u != v)) ++next[u];
      run(std::move(next));
    }
  }
};

}  // namespace

std::vector<int> canonical_labelling(const CoxeterGraph& g) {
  if (g.order() == 0) return {};
  Search s{g, {}, {}, false};
  s.run(Colouring(g.order(), 0));
  return s.best_col;
}

CanonicalForm canonical_form(const CoxeterGraph& g) {
  CanonicalForm f;
  f.order = g.order();
  if (g.order() == 0) return f;
  Search s{g, {}, {}, false};
  s.run(Colouring(g.order(), 0));
  f.upper = std::move(s.best);
  return f;
}

bool isomorphic(const CoxeterGraph& a, const CoxeterGraph& b) {
  return a.order() == b.order() && canonical_form(a) == canonical_form(b);
}

std::vector<Edge> CanonicalForm::edges() const {
  std::vector<Edge> out;
  std::size_t k = 0;
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b, ++k)
      if (Weight w(upper[k]); w.is_edge()) out.push_back({a, b, w});
  return out;
}

CoxeterGraph CanonicalForm::graph() const {
  const auto e = edges();
  return CoxeterGraph(order, e);
}

std::string CanonicalForm::to_string() const { return coxgrowth::to_string(graph()); }

std::string to_string(const CoxeterGraph& g) {
  std::ostringstream os;
  os << "{" << g.order();
  for (const Edge& e : g.edges()) os << " " << e.i + 1 << "-" << e.j + 1 << ":" << e.m.to_string();
  os << "}";
  return os.str();
}

}  // namespace coxgrowth
