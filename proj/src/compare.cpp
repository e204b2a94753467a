#include "coxgrowth/compare.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "coxgrowth/errors.hpp"

namespace coxgrowth {

namespace {

// Incident labels of each node, largest first; a node can only be mapped onto
// a node whose profile dominates its own entrywise.
std::vector<std::vector<Weight>> profiles(const CoxeterGraph& g) {
  std::vector<std::vector<Weight>> out(g.order());
  for (int v = 0; v < g.order(); ++v) {
    for (int u : g.neighbours(v)) out[v].push_back(g.weight(v, u));
    std::sort(out[v].rbegin(), out[v].rend());
  }
  return out;
}

bool profile_fits(const std::vector<Weight>& small, const std::vector<Weight>& big) {
  if (small.size() > big.size()) return false;
  for (std::size_t i = 0; i < small.size(); ++i)
    if (small[i] > big[i]) return false;
  return true;
}

}  // namespace

bool is_dominance_embedding(const CoxeterGraph& a, const CoxeterGraph& b, const Embedding& e) {
  if (static_cast<int>(e.size()) != a.order()) return false;
  std::vector<char> used(b.order(), 0);
  for (int x : e) {
    if (x < 0 || x >= b.order() || used[x]) return false;
    used[x] = 1;
  }
  for (int s = 0; s < a.order(); ++s)
    for (int t = s + 1; t < a.order(); ++t)
      if (a.weight(s, t) > b.weight(e[s], e[t])) return false;
  return true;
}

std::optional<Embedding> dominates(const CoxeterGraph& a, const CoxeterGraph& b) {
  if (a.order() > b.order()) return std::nullopt;
  const auto pa = profiles(a);
  const auto pb = profiles(b);
  std::vector<std::vector<int>> candidates(a.order());
  for (int s = 0; s < a.order(); ++s) {
    for (int x = 0; x < b.order(); ++x)
      if (profile_fits(pa[s], pb[x])) candidates[s].push_back(x);
    if (candidates[s].empty()) return std::nullopt;
  }

  Embedding e(a.order(), -1);
  std::vector<char> used(b.order(), 0);
  std::function<bool(int)> place = [&](int s) -> bool {
    if (s == a.order()) return true;
    for (int x : candidates[s]) {
      if (used[x]) continue;
      bool ok = true;
      for (int t = 0; t < s && ok; ++t) ok = a.weight(s, t) <= b.weight(x, e[t]);
      if (!ok) continue;
      e[s] = x;
      used[x] = 1;
      if (place(s + 1)) return true;
      used[x] = 0;
    }
    e[s] = -1;
    return false;
  };
  if (!place(0)) return std::nullopt;
  return e;
}

std::vector<CoxeterGraph> extensions(const std::vector<CoxeterGraph>& gs, Weight edge) {
  if (edge < Weight(3)) throw InvalidArgument("extension edge must have weight >= 3");
  std::map<CanonicalForm, CoxeterGraph> seen;
  for (const CoxeterGraph& g : gs) {
    if (g.empty()) throw InvalidArgument("cannot extend the empty graph");
    for (int v = 0; v < g.order(); ++v) {
      CoxeterGraph h = g;
      const int fresh = h.add_node();
      h.set_weight(v, fresh, edge);
      seen.try_emplace(canonical_form(h), std::move(h));
    }
  }
  std::vector<CoxeterGraph> out;
  out.reserve(seen.size());
  for (auto& [key, h] : seen) out.push_back(std::move(h));
  return out;
}

std::vector<CoxeterGraph> extensions(const CoxeterGraph& g, Weight edge) {
  return extensions(std::vector<CoxeterGraph>{g}, edge);
}

std::strong_ordering compare_rates(GrowthRate& a, GrowthRate& b) {
  using Kind = GrowthRate::Kind;
  if (a.kind == Kind::Unit || b.kind == Kind::Unit) {
    if (a.kind == b.kind) return std::strong_ordering::equal;
    return a.kind == Kind::Unit ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  // tau = 1/R, so the order of the rates is the reverse order of the radii.
  RootInterval& ra = a.radius;
  RootInterval& rb = b.radius;
  bool equality_checked = false;
  for (;;) {
    if (ra.hi <= rb.lo) return std::strong_ordering::greater;
    if (rb.hi <= ra.lo) return std::strong_ordering::less;
    if (!equality_checked) {
      // Overlap only shrinks under refinement, so one test settles equality.
      equality_checked = true;
      const IntPoly common = gcd(ra.poly, rb.poly);
      if (common.degree() >= 1) {
        const Rational lo = std::max(ra.lo, rb.lo);
        const Rational hi = std::min(ra.hi, rb.hi);
        if (SturmSequence(squarefree_part(common)).count(lo, hi) >= 1) return std::strong_ordering::equal;
      }
    }
    refine(ra, ra.width() / 2);
    refine(rb, rb.width() / 2);
  }
}

MinimalRate minimal_rate(const std::vector<CoxeterGraph>& gs, const Rational& eps, const ExponentTable& table) {
  if (gs.empty()) throw InvalidArgument("minimal_rate of an empty collection");
  std::vector<GrowthRate> rates;
  rates.reserve(gs.size());
  for (const CoxeterGraph& g : gs) rates.push_back(growth_rate(g, eps, table));

  MinimalRate best{0, gs[0], rates[0], true};
  CanonicalForm best_form = canonical_form(gs[0]);
  for (std::size_t i = 1; i < gs.size(); ++i) {
    const auto c = compare_rates(rates[i], best.rate);
    if (c == std::strong_ordering::less) {
      best = {i, gs[i], rates[i], true};
      best_form = canonical_form(gs[i]);
    } else if (c == std::strong_ordering::equal) {
      CanonicalForm f = canonical_form(gs[i]);
      if (f != best_form) best.unique = false;
      if (f < best_form) {
        best = {i, gs[i], rates[i], false};
        best_form = std::move(f);
      }
    }
  }
  return best;
}

}  // namespace coxgrowth
