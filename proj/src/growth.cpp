#include "coxgrowth/growth.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <unordered_map>

#include "coxgrowth/errors.hpp"

namespace coxgrowth {

namespace {

constexpr int kMaxSubsetOrder = 26;

// Multiplicities of cyclotomic factors Phi_d, indexed by d.
using CycloExponents = std::vector<int>;

void add_bracket_factors(CycloExponents& e, int k) {
  for (int d : bracket_cyclotomic_factors(k)) {
    if (static_cast<int>(e.size()) <= d) e.resize(static_cast<std::size_t>(d) + 1, 0);
    ++e[static_cast<std::size_t>(d)];
  }
}

CycloExponents cyclotomic_exponents(const std::vector<IrreducibleType>& types, const ExponentTable& table) {
  CycloExponents e;
  for (const auto& t : types)
    for (int m : table.exponents(t)) add_bracket_factors(e, m + 1);
  return e;
}

}  // namespace

IntPoly poincare_polynomial(const std::vector<IrreducibleType>& types, const ExponentTable& table) {
  IntPoly p{1};
  for (const auto& t : types)
    for (int m : table.exponents(t)) p *= bracket(m + 1);
  return p;
}

std::vector<FiniteSubsetRecord> finite_subsets(const CoxeterGraph& g, const ExponentTable& table) {
  const int n = g.order();
  if (n > kMaxSubsetOrder) throw InvalidArgument("finite subset enumeration supports at most " + std::to_string(kMaxSubsetOrder) + " nodes");
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<char> finite(total, 0);
  std::unordered_map<std::uint64_t, IrreducibleType> component_cache;
  std::map<std::vector<IrreducibleType>, IntPoly> poincare_cache;
  std::vector<FiniteSubsetRecord> out;

  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<IrreducibleType> types;
    if (mask != 0) {
      if (!finite[mask & (mask - 1)]) continue;
      bool ok = true;
      for (NodeSubset c : connected_components(g, NodeSubset(mask))) {
        auto it = component_cache.find(c.mask());
        if (it == component_cache.end())
          it = component_cache.emplace(c.mask(), classify_irreducible(induced_subgraph(g, c))).first;
        if (!it->second.spherical()) {
          ok = false;
          break;
        }
        types.push_back(it->second);
      }
      if (!ok) continue;
      std::sort(types.begin(), types.end());
    }
    finite[mask] = 1;
    auto it = poincare_cache.find(types);
    if (it == poincare_cache.end()) it = poincare_cache.emplace(types, poincare_polynomial(types, table)).first;
    out.push_back({NodeSubset(mask), std::move(types), it->second});
  }
  return out;
}

RatFunc steinberg(const CoxeterGraph& g, const ExponentTable& table) {
  // Every f_T is a product of cyclotomic polynomials, so the sum is assembled
  // over their lcm and reduced by trial division with its own factors.
  struct Term {
    Integer coefficient = 0;
    CycloExponents exps;
  };
  std::map<std::vector<IrreducibleType>, Term> terms;
  for (const auto& rec : finite_subsets(g, table)) {
    auto [it, inserted] = terms.try_emplace(rec.types);
    if (inserted) it->second.exps = cyclotomic_exponents(rec.types, table);
    it->second.coefficient += (rec.subset.size() % 2 == 0) ? 1 : -1;
  }

  CycloExponents lcm;
  for (const auto& [key, t] : terms) {
    if (lcm.size() < t.exps.size()) lcm.resize(t.exps.size(), 0);
    for (std::size_t d = 0; d < t.exps.size(); ++d) lcm[d] = std::max(lcm[d], t.exps[d]);
  }

  std::map<std::pair<int, int>, IntPoly> powers;
  auto phi_power = [&](int d, int e) -> const IntPoly& {
    auto it = powers.find({d, e});
    if (it != powers.end()) return it->second;
    IntPoly p{1};
    const IntPoly phi = cyclotomic(d);
    for (int i = 0; i < e; ++i) p *= phi;
    return powers.emplace(std::make_pair(d, e), std::move(p)).first->second;
  };

  IntPoly num;
  for (const auto& [key, t] : terms) {
    if (t.coefficient == 0) continue;
    IntPoly cofactor{1};
    for (std::size_t d = 2; d < lcm.size(); ++d) {
      const int have = d < t.exps.size() ? t.exps[d] : 0;
      if (lcm[d] > have) cofactor *= phi_power(static_cast<int>(d), lcm[d] - have);
    }
    num += cofactor * t.coefficient;
  }

  for (std::size_t d = 2; d < lcm.size(); ++d) {
    const IntPoly phi = cyclotomic(static_cast<int>(d));
    while (lcm[d] > 0 && !num.is_zero()) {
      auto q = exact_divide(num, phi);
      if (!q) break;
      num = std::move(*q);
      --lcm[d];
    }
  }
  IntPoly den{1};
  for (std::size_t d = 2; d < lcm.size(); ++d)
    if (lcm[d] > 0) den *= phi_power(static_cast<int>(d), lcm[d]);
  return RatFunc::from_coprime(std::move(num), std::move(den));
}

std::map<std::vector<int>, long> steinberg_terms(const CoxeterGraph& g, const ExponentTable& table) {
  std::map<std::vector<int>, long> out;
  for (const auto& rec : finite_subsets(g, table)) {
    std::vector<int> brackets;
    for (const auto& t : rec.types)
      for (int m : table.exponents(t)) brackets.push_back(m + 1);
    std::sort(brackets.begin(), brackets.end());
    out[brackets] += (rec.subset.size() % 2 == 0) ? 1 : -1;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

GrowthSeries growth_series(const CoxeterGraph& g, const ExponentTable& table) {
  GrowthSeries s;
  s.steinberg_form = steinberg(g, table);
  if (is_spherical(g)) {
    s.finite = true;
    auto types = component_types(g);
    s.f = RatFunc(poincare_polynomial(types, table));
    return s;
  }
  const IntPoly& p = s.steinberg_form.num();
  const IntPoly& q = s.steinberg_form.den();
  const int d = std::max(p.degree(), q.degree());
  if (p.degree() == q.degree())
    s.f = RatFunc::from_coprime(q.reversed(d), p.reversed(d));
  else
    s.f = RatFunc(q.reversed(d), p.reversed(d));
  return s;
}

Rational GrowthRate::tau_lo() const {
  if (kind == Kind::Unit) return 1;
  return 1 / radius.hi;
}

Rational GrowthRate::tau_hi() const {
  if (kind == Kind::Unit) return 1;
  return 1 / radius.lo;
}

double GrowthRate::approx() const {
  if (kind == Kind::Unit) return 1.0;
  return Rational((tau_lo() + tau_hi()) / 2).get_d();
}

GrowthRate growth_rate(const CoxeterGraph& g, const Rational& eps, const ExponentTable& table) {
  const auto types = component_types(g);
  if (std::all_of(types.begin(), types.end(), [](const IrreducibleType& t) { return t.spherical(); }))
    throw DomainError("finite Coxeter group has no growth rate > 0 (graph is spherical)");
  GrowthRate r;
  if (std::all_of(types.begin(), types.end(), [](const IrreducibleType& t) { return t.spherical() || t.affine(); })) {
    r.kind = GrowthRate::Kind::Unit;
    return r;
  }
  const RatFunc s = steinberg(g, table);
  const int d = std::max(s.num().degree(), s.den().degree());
  // Poles of f_S are the roots of the reversed Steinberg numerator.
  r.radius = smallest_positive_root(s.num().reversed(d), eps);
  while (sgn(r.radius.lo) == 0) refine(r.radius, r.radius.width() / 2);
  if (r.radius.lo >= 1) throw DomainError("growth series has radius of convergence >= 1");
  return r;
}

std::string format_rate(const GrowthRate& r) {
  if (r.kind == GrowthRate::Kind::Unit) return "1 (exact)";
  const Rational width = r.tau_hi() - r.tau_lo();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f (width %.1e)", r.approx(), width.get_d());
  return buf;
}

std::vector<Integer> series_coeffs(const CoxeterGraph& g, int k, const ExponentTable& table) {
  if (k < 0) throw InvalidArgument("series length must be non-negative");
  const GrowthSeries s = growth_series(g, table);
  const IntPoly& num = s.f.num();
  const IntPoly& den = s.f.den();
  const Integer d0 = den.coeff(0);
  if (sgn(d0) == 0) throw DomainError("growth series denominator vanishes at 0");
  std::vector<Integer> a(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) {
    Integer acc = num.coeff(i);
    for (int j = 1; j <= std::min(i, den.degree()); ++j) acc -= den.coeff(j) * a[static_cast<std::size_t>(i - j)];
    if (!mpz_divisible_p(acc.get_mpz_t(), d0.get_mpz_t())) throw DomainError("growth series has non-integral coefficients");
    mpz_divexact(a[static_cast<std::size_t>(i)].get_mpz_t(), acc.get_mpz_t(), d0.get_mpz_t());
  }
  return a;
}

}  // namespace coxgrowth
