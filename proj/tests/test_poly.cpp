#include <doctest.h>

#include "coxgrowth/errors.hpp"
#include "coxgrowth/poly.hpp"
#include "support.hpp"

using namespace coxgrowth;

namespace {

IntPoly random_poly(std::mt19937_64& rng, int degree) {
  std::vector<Integer> c;
  for (int i = 0; i <= degree; ++i) c.emplace_back(static_cast<long>(rng() % 21) - 10);
  return IntPoly(c);
}

}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("ring operations") {
    const IntPoly a{1, 1};
    const IntPoly b{-1, 0, 1};
    CHECK(a * a == IntPoly{1, 2, 1});
    CHECK(a + b == IntPoly{0, 1, 1});
    CHECK((b - b).is_zero());
    CHECK((b - b).degree() == -1);
    CHECK(b.derivative() == IntPoly{0, 2});
    CHECK(IntPoly{1, 2, 3}.reversed() == IntPoly{3, 2, 1});
    CHECK(IntPoly{0, 0, 1}.valuation() == 2);
    CHECK(IntPoly{1, 0, 1}.shifted(2) == IntPoly{0, 0, 1, 0, 1});
    CHECK(IntPoly{2, 4, 6}.content() == 2);
    CHECK(IntPoly{-2, -4}.primitive_part() == IntPoly{1, 2});
    CHECK(IntPoly{1, 2, 1}.evaluate(Integer(3)) == 16);
    CHECK(IntPoly{1, 2, 1}.is_palindromic());
  }

  TEST_CASE("exact division and gcd") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
      const IntPoly g = random_poly(rng, 1 + static_cast<int>(rng() % 3));
      const IntPoly a = random_poly(rng, static_cast<int>(rng() % 4));
      const IntPoly b = random_poly(rng, static_cast<int>(rng() % 4));
      if (g.degree() < 1 || a.is_zero() || b.is_zero()) continue;
      const auto q = exact_divide(g * a, g);
      REQUIRE(q.has_value());
      CHECK(*q == a);
      // gcd divides both inputs and is divisible by the planted factor.
      const IntPoly d = gcd(g * a, g * b);
      CHECK(exact_divide(g * a * d.leading(), d).has_value());
      CHECK(exact_divide(d * g.leading(), g.primitive_part()).has_value());
    }
    CHECK_FALSE(exact_divide(IntPoly{1, 0, 1}, IntPoly{1, 1}).has_value());
    CHECK(gcd(IntPoly{-1, 0, 1}, IntPoly{1, 2, 1}) == IntPoly{1, 1});
    CHECK(squarefree_part(IntPoly{1, 2, 1} * IntPoly{0, 1}) == IntPoly{0, 1, 1});
  }

  TEST_CASE("brackets and cyclotomic factors") {
    CHECK(bracket(3) == IntPoly{1, 1, 1});
    CHECK(bracket_product({2, 2}) == IntPoly{1, 2, 1});
    CHECK(cyclotomic(6) == IntPoly{1, -1, 1});
    CHECK(bracket_cyclotomic_factors(6) == std::vector<int>{2, 3, 6});
    for (int k = 1; k <= 30; ++k) {
      IntPoly p{1};
      for (int d : bracket_cyclotomic_factors(k)) p = p * cyclotomic(d);
      CHECK(p == bracket(k));
    }
  }

  TEST_CASE("rational functions reduce") {
    const RatFunc r(IntPoly{-1, 0, 1}, IntPoly{1, 2, 1});
    CHECK(r.num() == IntPoly{-1, 1});
    CHECK(r.den() == IntPoly{1, 1});
    const RatFunc s(IntPoly{2}, IntPoly{-4, 0});
    CHECK(s.den().leading() > 0);
    CHECK(RatFunc(IntPoly{1}, IntPoly{1, 1}) + RatFunc(IntPoly{0, 1}, IntPoly{1, 1}) == RatFunc(IntPoly{1}));
    CHECK((r * RatFunc(IntPoly{1, 1})) == RatFunc(IntPoly{-1, 1}));
    CHECK(r.evaluate(Rational(1, 2)) == Rational(-1, 3));
    CHECK_THROWS(RatFunc(IntPoly{1}, IntPoly{}));
  }

  TEST_CASE("Sturm counts match the planted roots") {
    // (t - 1/2)(t - 2)(t + 3) = (2t - 1)(t - 2)(t + 3)/2
    const IntPoly p = IntPoly{-1, 2} * IntPoly{-2, 1} * IntPoly{3, 1};
    const SturmSequence s(p);
    CHECK(s.count(Rational(0), Rational(10)) == 2);
    CHECK(s.count(Rational(-10), Rational(10)) == 3);
    CHECK(s.count(Rational(1, 2), Rational(2)) == 1);
    CHECK(s.count(Rational(0), Rational(1, 2)) == 1);
  }

  TEST_CASE("smallest positive root of t^3 - t - 1 agrees with bisection") {
    const IntPoly p{-1, -1, 0, 1};
    const Rational eps(1, 1000000000000);
    const RootInterval r = smallest_positive_root(p, eps);
    CHECK(r.width() <= eps);
    CHECK(p.sign_at(r.lo) != p.sign_at(r.hi));
    const Rational ref = oracle::bisect([](const Rational& x) { return Rational(x * x * x - x - 1); }, Rational(1),
                                        Rational(2), Rational(1, 1000000000000000));
    CHECK(r.lo < ref);
    CHECK(ref <= r.hi);
    CHECK(r.approx() == doctest::Approx(1.324717957244746).epsilon(1e-12));
  }

  TEST_CASE("root isolation certifies random products of linear factors") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
      IntPoly p{1};
      Rational smallest(1000);
      for (int k = 0; k < 4; ++k) {
        const long num = 1 + static_cast<long>(rng() % 40);
        const long den = 1 + static_cast<long>(rng() % 9);
        p = p * IntPoly{-num, den};
        smallest = std::min(smallest, Rational(num, den));
      }
      p = p * IntPoly{5, 1, 1};  // no real roots
      const RootInterval r = smallest_positive_root(p, Rational(1, 1000));
      CHECK(r.lo < smallest);
      CHECK(smallest <= r.hi);
      CHECK(r.width() <= Rational(1, 1000));
    }
    CHECK_THROWS_AS(smallest_positive_root(IntPoly{1, 1}), NoPositiveRoot);
    CHECK_THROWS_AS(smallest_positive_root(IntPoly{1, 0, 1}), NoPositiveRoot);
  }

  TEST_CASE("refine shrinks without losing the root") {
    const IntPoly p{-2, 0, 1};
    RootInterval r = smallest_positive_root(p, Rational(1, 10));
    refine(r, Rational(1, 1000000));
    CHECK(r.width() <= Rational(1, 1000000));
    CHECK(r.lo * r.lo < 2);
    CHECK(r.hi * r.hi >= 2);
  }
}
