#include <doctest.h>

#include "coxgrowth/catalog.hpp"
#include "coxgrowth/errors.hpp"
#include "coxgrowth/growth.hpp"
#include "coxgrowth/simplex.hpp"
#include "support.hpp"

using namespace coxgrowth;

namespace {

Signature signature_by_jacobi(const CoxeterGraph& g) {
  const auto [pos, neg, zero] = oracle::gram_inertia(g);
  return Signature{pos, neg, zero};
}

}  // namespace

TEST_SUITE("simplex") {
  TEST_CASE("Gram entries") {
    const GramMatrix m = gram(from_linear_symbol({Weight(4), kInfinity}));
    CHECK(m.at(0, 0) == AlgNum(1));
    CHECK(m.at(0, 1) == -AlgNum::sqrt(2) / AlgNum(2));
    CHECK(m.at(1, 2) == AlgNum(-1));
    CHECK(m.at(0, 2) == AlgNum(0));
  }

  TEST_CASE("signature examples") {
    CHECK(signature(gram(from_linear_symbol({Weight(5), Weight(3), Weight(3)}))) == Signature{4, 0, 0});
    CHECK(signature(gram(from_linear_symbol({Weight(4), Weight(4)}))) == Signature{2, 0, 1});
    CHECK(signature(gram(catalog::gamma(3))) == Signature{3, 1, 0});
    CHECK(signature(gram(CoxeterGraph(3))) == Signature{3, 0, 0});
    GramMatrix z(2);
    z.at(0, 1) = AlgNum(1);
    z.at(1, 0) = AlgNum(1);
    CHECK(signature(z) == Signature{1, 1, 0});
    z.at(1, 0) = AlgNum(2);
    CHECK_THROWS_AS(signature(z), InvalidArgument);
    CHECK_THROWS_AS(gram(from_linear_symbol({Weight(7)})), UnsupportedWeight);
  }

  TEST_CASE("exact signature agrees with floating-point eigenvalues") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
      const auto g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 6));
      CHECK(signature(gram(g)) == signature_by_jacobi(g));
    }
  }

  TEST_CASE("spherical and affine graphs") {
    for (int rank = 1; rank <= 6; ++rank)
      for (const auto& t : spherical_types_of_rank(rank))
        CHECK(simplex_class(spherical_graph(t)).volume == VolumeClass::Spherical);
    for (int order = 2; order <= 9; ++order)
      for (const auto& t : affine_types_of_order(order)) {
        const SimplexReport r = simplex_class(affine_graph(t));
        CHECK(r.volume == VolumeClass::Affine);
        CHECK(r.signature == Signature{order - 1, 0, 1});
      }
  }

  TEST_CASE("hyperbolic simplices") {
    const SimplexReport g3 = simplex_class(catalog::gamma(3), 3);
    CHECK(g3.volume == VolumeClass::FiniteVolumeNoncompact);
    REQUIRE(g3.links.size() == 4);
    CHECK(g3.links[0].kind == LinkKind::Spherical);
    CHECK(g3.links[3].kind == LinkKind::Affine);
    CHECK(g3.links[3].types.front().name() == "~G2");
    CHECK(simplex_class(from_linear_symbol({Weight(5), Weight(3), Weight(5)})).volume == VolumeClass::CompactHyperbolic);
    CHECK(simplex_class(catalog::f4_extension()).volume == VolumeClass::InfiniteVolume);
    CHECK(to_string(VolumeClass::FiniteVolumeNoncompact) == "FINITE_VOLUME_NONCOMPACT");
  }

  TEST_CASE("simplex errors") {
    CHECK_THROWS_AS(simplex_class(catalog::gamma(3), 4), InvalidArgument);
    CHECK_THROWS_AS(simplex_class(CoxeterGraph(2)), InvalidArgument);
    CHECK_THROWS_AS(simplex_class(CoxeterGraph()), InvalidArgument);
    // signature (3,1,1)
    CHECK_THROWS_AS(simplex_class(from_linear_symbol({kInfinity, kInfinity, kInfinity, kInfinity})), DomainError);
  }

  TEST_CASE("ideal link partitions") {
    using P = std::vector<std::vector<int>>;
    CHECK(ideal_link_partitions(5) == P{{3, 3}});
    CHECK(ideal_link_partitions(6) == P{{3, 4}});
    CHECK(ideal_link_partitions(4) == P{});
    CHECK(ideal_link_partitions(9) == P{{3, 7}, {4, 6}, {5, 5}, {3, 3, 5}, {3, 4, 4}, {3, 3, 3, 3}});
    CHECK_THROWS_AS(ideal_link_partitions(2), InvalidArgument);
  }

  TEST_CASE("simplex corpus is closed under the defining conditions") {
    const std::vector<std::size_t> sizes{23, 9, 12, 3, 4, 4, 3};
    for (int n = 3; n <= 9; ++n) {
      const auto corpus = noncompact_simplex_corpus(n);
      CHECK(corpus.size() == sizes[n - 3]);
      for (const auto& g : corpus) {
        CHECK(g.order() == n + 1);
        CHECK(simplex_class(g).volume == VolumeClass::FiniteVolumeNoncompact);
        CHECK(signature_by_jacobi(g) == Signature{n, 1, 0});
      }
      for (std::size_t i = 0; i + 1 < corpus.size(); ++i) CHECK(canonical_form(corpus[i]) < canonical_form(corpus[i + 1]));
    }
  }

  TEST_CASE("every growth rate in the simplex corpus is at least gamma9's") {
    for (int n = 3; n <= 9; ++n)
      for (const auto& g : noncompact_simplex_corpus(n)) CHECK(growth_rate(g).tau_lo() >= Rational(11379, 10000));
  }

  TEST_CASE("random search finds nothing outside the order-4 corpus") {
    const auto corpus = noncompact_simplex_corpus(3);
    std::mt19937_64 rng(23);
    int found = 0;
    for (int trial = 0; trial < 20000; ++trial) {
      const auto g = oracle::random_graph(rng, 4);
      if (!is_connected(g)) continue;
      try {
        if (simplex_class(g).volume != VolumeClass::FiniteVolumeNoncompact) continue;
      } catch (const DomainError&) {
        continue;
      }
      ++found;
      CHECK(std::any_of(corpus.begin(), corpus.end(), [&](const CoxeterGraph& c) { return oracle::brute_isomorphic(c, g); }));
    }
    CHECK(found > 0);
  }
}
