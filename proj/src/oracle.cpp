#include "coxgrowth/oracle.hpp"

#include <unordered_set>

#include "coxgrowth/errors.hpp"

namespace coxgrowth {

namespace {

// Row vector c_i of s_i = I + e_i c_i^T: c_ii = -2, c_ij = 2cos(pi/m_ij).
std::vector<std::vector<AlgNum>> generator_rows(const CoxeterGraph& g) {
  const int n = g.order();
  std::vector<std::vector<AlgNum>> c(n, std::vector<AlgNum>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[i][j] = i == j ? AlgNum(-2) : AlgNum(-2) * minus_cos_pi_over(g.weight(i, j));
  return c;
}

// s_i M only changes row i: -M_i + sum_{j != i} c_ij M_j.
ReflectionMatrix left_multiply(const std::vector<AlgNum>& c, int i, const ReflectionMatrix& m) {
  ReflectionMatrix r = m;
  const int n = m.size();
  for (int col = 0; col < n; ++col) {
    AlgNum v = -m.at(i, col);
    for (int j = 0; j < n; ++j)
      if (j != i && !c[j].is_zero() && !m.at(j, col).is_zero()) v += c[j] * m.at(j, col);
    r.at(i, col) = std::move(v);
  }
  return r;
}

struct Layer {
  std::vector<ReflectionMatrix> elements;
  std::unordered_set<std::string> keys;
};

// Advances one length; the Cayley graph is bipartite, so neighbours of the
// current layer lie in the previous or the next one.
Layer next_layer(const std::vector<std::vector<AlgNum>>& c, const Layer& prev, const Layer& cur) {
  Layer next;
  for (const ReflectionMatrix& m : cur.elements)
    for (int i = 0; i < static_cast<int>(c.size()); ++i) {
      ReflectionMatrix x = left_multiply(c[i], i, m);
      std::string key = x.key();
      if (prev.keys.count(key) || next.keys.count(key)) continue;
      next.keys.insert(std::move(key));
      next.elements.push_back(std::move(x));
    }
  return next;
}

Layer start(int n) {
  Layer l;
  l.elements.push_back(ReflectionMatrix::identity(n));
  l.keys.insert(l.elements.back().key());
  return l;
}

}  // namespace

ReflectionMatrix ReflectionMatrix::identity(int n) {
  ReflectionMatrix r(n);
  for (int i = 0; i < n; ++i) r.at(i, i) = AlgNum(1);
  return r;
}

ReflectionMatrix operator*(const ReflectionMatrix& a, const ReflectionMatrix& b) {
  if (a.size() != b.size()) throw InvalidArgument("matrix size mismatch");
  const int n = a.size();
  ReflectionMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < n; ++j)
        if (!b.at(k, j).is_zero()) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

std::string ReflectionMatrix::key() const {
  std::string out;
  for (const AlgNum& x : a_) x.append_key(out);
  return out;
}

std::vector<ReflectionMatrix> tits_representation(const CoxeterGraph& g) {
  const auto c = generator_rows(g);
  const int n = g.order();
  std::vector<ReflectionMatrix> out;
  for (int i = 0; i < n; ++i) {
    ReflectionMatrix s = ReflectionMatrix::identity(n);
    for (int j = 0; j < n; ++j) s.at(i, j) += c[i][j];
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Integer> bfs_counts(const CoxeterGraph& g, int k, std::uint64_t cap) {
  if (k < 0) throw InvalidArgument("length bound must be non-negative");
  const auto c = generator_rows(g);
  Layer prev;
  Layer cur = start(g.order());
  std::vector<Integer> counts{1};
  std::uint64_t total = 1;
  for (int d = 1; d <= k; ++d) {
    Layer next = next_layer(c, prev, cur);
    total += next.elements.size();
    if (total > cap) throw CapExceeded("element cap " + std::to_string(cap) + " exceeded at length " + std::to_string(d), d - 1);
    counts.emplace_back(static_cast<unsigned long>(next.elements.size()));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return counts;
}

std::uint64_t group_order(const CoxeterGraph& g, std::uint64_t cap) {
  const auto c = generator_rows(g);
  Layer prev;
  Layer cur = start(g.order());
  std::uint64_t total = 1;
  for (int d = 1; !cur.elements.empty(); ++d) {
    Layer next = next_layer(c, prev, cur);
    total += next.elements.size();
    if (total > cap) throw CapExceeded("element cap " + std::to_string(cap) + " exceeded at length " + std::to_string(d), d - 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return total;
}

int product_order(const CoxeterGraph& g, int i, int j, int limit) {
  const auto s = tits_representation(g);
  const ReflectionMatrix r = s.at(i) * s.at(j);
  const ReflectionMatrix id = ReflectionMatrix::identity(g.order());
  ReflectionMatrix p = r;
  for (int e = 1; e <= limit; ++e) {
    if (p == id) return e;
    p = p * r;
  }
  return 0;
}

}  // namespace coxgrowth
