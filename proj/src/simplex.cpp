#include "coxgrowth/simplex.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

#include "coxgrowth/errors.hpp"

namespace coxgrowth {

GramMatrix gram(const CoxeterGraph& g) {
  const int n = g.order();
  GramMatrix m(n);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = AlgNum(1);
    for (int j = i + 1; j < n; ++j) {
      const AlgNum c = minus_cos_pi_over(g.weight(i, j));
      m.at(i, j) = c;
      m.at(j, i) = c;
    }
  }
  return m;
}

Signature signature(const GramMatrix& m) {
  const int n = m.size();
  GramMatrix a = m;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(a.at(i, j) == a.at(j, i))) throw InvalidArgument("signature of a non-symmetric matrix");

  Signature s;
  std::vector<int> alive(n);
  for (int i = 0; i < n; ++i) alive[i] = i;
  while (!alive.empty()) {
    auto pivot = std::find_if(alive.begin(), alive.end(), [&](int i) { return !a.at(i, i).is_zero(); });
    if (pivot == alive.end()) {
      // Zero diagonal: replace e_p by e_p + e_q for some a_pq != 0, giving 2 a_pq.
      int p = -1, q = -1;
      for (int i : alive)
        for (int j : alive)
          if (p < 0 && i != j && !a.at(i, j).is_zero()) {
            p = i;
            q = j;
          }
      if (p < 0) {
        s.zero += static_cast<int>(alive.size());
        break;
      }
      for (int k : alive) a.at(p, k) += a.at(q, k);
      for (int k : alive) a.at(k, p) += a.at(k, q);
      pivot = std::find(alive.begin(), alive.end(), p);
    }
    const int p = *pivot;
    const AlgNum d = a.at(p, p);
    if (d.sign() > 0)
      ++s.positive;
    else
      ++s.negative;
    alive.erase(pivot);
    const AlgNum inv = d.inverse();
    for (int i : alive) {
      if (a.at(i, p).is_zero()) continue;
      const AlgNum f = a.at(i, p) * inv;
      for (int j : alive)
        if (!a.at(p, j).is_zero()) a.at(i, j) -= f * a.at(p, j);
    }
  }
  return s;
}

std::string to_string(VolumeClass c) {
  switch (c) {
    case VolumeClass::Spherical: return "SPHERICAL";
    case VolumeClass::Affine: return "AFFINE";
    case VolumeClass::CompactHyperbolic: return "COMPACT_HYPERBOLIC";
    case VolumeClass::FiniteVolumeNoncompact: return "FINITE_VOLUME_NONCOMPACT";
    case VolumeClass::InfiniteVolume: return "INFINITE_VOLUME";
  }
  return "?";
}

std::string to_string(LinkKind k) {
  switch (k) {
    case LinkKind::Spherical: return "spherical";
    case LinkKind::Affine: return "affine";
    case LinkKind::Other: return "other";
  }
  return "?";
}

SimplexReport simplex_class(const CoxeterGraph& g, std::optional<int> dimension) {
  if (g.empty()) throw InvalidArgument("simplex graph must be nonempty");
  if (dimension && g.order() != *dimension + 1)
    throw InvalidArgument("a " + std::to_string(*dimension) + "-simplex has " + std::to_string(*dimension + 1) +
                          " facets, graph has " + std::to_string(g.order()) + " nodes");
  if (!is_connected(g)) throw InvalidArgument("simplex graph must be connected");

  SimplexReport r;
  r.signature = signature(gram(g));
  const auto types = component_types(g);
  if (types.front().spherical()) {
    r.volume = VolumeClass::Spherical;
    return r;
  }
  if (types.front().affine()) {
    r.volume = VolumeClass::Affine;
    return r;
  }
  const int n = g.order() - 1;
  if (r.signature != Signature{n, 1, 0})
    throw DomainError("Gram matrix has signature (" + std::to_string(r.signature.positive) + "," +
                      std::to_string(r.signature.negative) + "," + std::to_string(r.signature.zero) +
                      "), not hyperbolic");

  bool all_spherical = true;
  bool all_finite = true;
  for (int v = 0; v < g.order(); ++v) {
    VertexLink link;
    link.deleted_node = v;
    link.types = component_types(induced_subgraph(g, NodeSubset::full(g.order()).without(v)));
    const bool sph = std::all_of(link.types.begin(), link.types.end(), [](const IrreducibleType& t) { return t.spherical(); });
    const bool aff = std::all_of(link.types.begin(), link.types.end(), [](const IrreducibleType& t) { return t.affine(); });
    link.kind = sph ? LinkKind::Spherical : aff ? LinkKind::Affine : LinkKind::Other;
    all_spherical = all_spherical && sph;
    all_finite = all_finite && (sph || aff);
    r.links.push_back(std::move(link));
  }
  r.volume = all_spherical ? VolumeClass::CompactHyperbolic
             : all_finite  ? VolumeClass::FiniteVolumeNoncompact
                           : VolumeClass::InfiniteVolume;
  return r;
}

std::vector<std::vector<int>> ideal_link_partitions(int n) {
  if (n < 3) throw InvalidArgument("ideal link partitions need n >= 3");
  std::vector<std::vector<int>> out;
  std::vector<int> parts;
  std::function<void(int, int)> go = [&](int remaining, int min_part) {
    if (remaining == 0) {
      if (parts.size() >= 2) out.push_back(parts);
      return;
    }
    for (int p = min_part; p <= remaining; ++p) {
      parts.push_back(p + 1);
      go(remaining - p, p);
      parts.pop_back();
    }
  };
  go(n - 1, 2);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<CoxeterGraph> noncompact_simplex_corpus(int n) {
  if (n < 2) throw InvalidArgument("simplex corpus needs n >= 2");
  static constexpr std::array<Weight, 6> kChoices{Weight(2), Weight(3), Weight(4), Weight(5), Weight(6), kInfinity};
  // A finite-volume noncompact simplex has an ideal vertex whose link is a
  // connected affine graph on n nodes; attach one more node to each such graph.
  std::map<CanonicalForm, CoxeterGraph> found;
  for (const IrreducibleType& t : affine_types_of_order(n)) {
    CoxeterGraph g = affine_graph(t);
    const int v = g.add_node();

    // Every subgraph through v and base node k, other than the whole graph,
    // must be spherical, or connected affine when it has n nodes.
    auto prefix_ok = [&](int k) {
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
        const NodeSubset sub = NodeSubset(s).with(k).with(v);
        const int size = sub.size();
        if (size == n + 1) continue;
        const auto types = component_types(induced_subgraph(g, sub));
        if (std::all_of(types.begin(), types.end(), [](const IrreducibleType& x) { return x.spherical(); })) continue;
        if (size == n && types.size() == 1 && types.front().affine()) continue;
        return false;
      }
      return true;
    };

    std::function<void(int)> assign = [&](int k) {
      if (k == n) {
        if (g.degree(v) == 0) return;
        try {
          if (simplex_class(g).volume == VolumeClass::FiniteVolumeNoncompact) found.try_emplace(canonical_form(g), g);
        } catch (const DomainError&) {
        }
        return;
      }
      for (Weight w : kChoices) {
        g.set_weight(v, k, w);
        if (prefix_ok(k)) assign(k + 1);
      }
      g.set_weight(v, k, Weight(2));
    };
    assign(0);
  }
  std::vector<CoxeterGraph> out;
  out.reserve(found.size());
  for (auto& [key, g] : found) out.push_back(std::move(g));
  return out;
}

}  // namespace coxgrowth
