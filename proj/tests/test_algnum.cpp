#include <doctest.h>

#include <cmath>
#include <random>

#include "coxgrowth/algnum.hpp"
#include "coxgrowth/errors.hpp"

using namespace coxgrowth;

TEST_SUITE("algnum") {
  TEST_CASE("square roots multiply out") {
    const AlgNum r2 = AlgNum::sqrt(2), r3 = AlgNum::sqrt(3), r5 = AlgNum::sqrt(5);
    CHECK(r2 * r2 == AlgNum(2));
    CHECK(r2 * r3 == AlgNum::sqrt(6));
    CHECK(r2 * r3 * r5 * AlgNum::sqrt(30) == AlgNum(30));
    CHECK((r2 + r3).inverse() == r3 - r2);
    CHECK((AlgNum(1) + r5) / AlgNum(2) * ((AlgNum(1) + r5) / AlgNum(2)) == (AlgNum(3) + r5) / AlgNum(2));
    CHECK(r5.is_rational() == false);
    CHECK(AlgNum(7).is_rational());
    CHECK_THROWS(AlgNum(0).inverse());
  }

  TEST_CASE("signs agree with floating point away from zero") {
    std::mt19937_64 rng(31);
    const double roots[] = {1, std::sqrt(2.0), std::sqrt(3.0), std::sqrt(5.0)};
    const int radicands[] = {1, 2, 3, 5};
    for (int trial = 0; trial < 500; ++trial) {
      AlgNum x;
      double v = 0;
      for (int k = 0; k < 4; ++k) {
        const long c = static_cast<long>(rng() % 41) - 20;
        x += AlgNum(c) * (k == 0 ? AlgNum(1) : AlgNum::sqrt(radicands[k]));
        v += static_cast<double>(c) * roots[k];
      }
      CHECK(x.approx() == doctest::Approx(v));
      if (std::abs(v) > 1e-9) CHECK(x.sign() == (v > 0 ? 1 : -1));
    }
    // near cancellation
    const AlgNum tiny = AlgNum::sqrt(2) + AlgNum::sqrt(3) - AlgNum(mpq_class(3146264369, 1000000000));
    CHECK(tiny.sign() == (std::sqrt(2.0) + std::sqrt(3.0) > 3.146264369 ? 1 : -1));
  }

  TEST_CASE("cosines") {
    CHECK(minus_cos_pi_over(Weight(2)).is_zero());
    CHECK(minus_cos_pi_over(Weight(3)) == AlgNum(mpq_class(-1, 2)));
    CHECK(minus_cos_pi_over(kInfinity) == AlgNum(-1));
    for (unsigned m : {4u, 5u, 6u}) {
      const AlgNum c = minus_cos_pi_over(Weight(m));
      CHECK(c.approx() == doctest::Approx(-std::cos(M_PI / m)).epsilon(1e-14));
      CHECK((AlgNum(4) * c * c - AlgNum(2)).approx() == doctest::Approx(2 * std::cos(2 * M_PI / m)));
    }
    CHECK_THROWS_AS(minus_cos_pi_over(Weight(7)), UnsupportedWeight);
  }

  TEST_CASE("keys identify values") {
    std::string a, b, c;
    (AlgNum::sqrt(2) * AlgNum::sqrt(2)).append_key(a);
    AlgNum(2).append_key(b);
    AlgNum(3).append_key(c);
    CHECK(a == b);
    CHECK(a != c);
  }
}
