#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <initializer_list>
#include <vector>

#include "qgrowth/series.hpp"

using namespace qgrowth;

namespace {

RationalFunction rf(std::initializer_list<long> num, std::initializer_list<long> den) {
  std::vector<Rat> n, d;
  for (long c : num) n.emplace_back(c);
  for (long c : den) d.emplace_back(c);
  return RationalFunction(Polynomial(n), Polynomial(d));
}

void check_prefix(const PowerSeries& s, std::initializer_list<long> want) {
  int i = 0;
  for (long w : want) {
    CAPTURE(i);
    CHECK(s.coeff(i) == Rat(w));
    ++i;
  }
}

}  // namespace

TEST_CASE("polynomial arithmetic and gcd") {
  Polynomial a{Rat(1), Rat(-1)};          // 1 - z
  Polynomial b{Rat(1), Rat(0), Rat(-1)};  // 1 - z^2
  CHECK((a * a).coeff(1) == Rat(-2));
  CHECK((b + a).degree() == 2);
  auto [q, r] = b.divmod(a);
  CHECK(r.is_zero());
  CHECK(q == Polynomial{Rat(1), Rat(1)});
  Polynomial g = poly_gcd(b, a * Polynomial{Rat(1), Rat(1)});
  CHECK(g.degree() == 2);
  CHECK(g.coeff(2) == Rat(1));
  CHECK(poly_gcd(a, Polynomial{Rat(1), Rat(1)}).degree() == 0);
}

TEST_CASE("rational function canonical form") {
  RationalFunction x = rf({0, 1, 1}, {1, 1});  // z(1+z)/(1+z) = z
  CHECK(x == rf({0, 1}, {1}));
  CHECK(x.denominator() == Polynomial{Rat(1)});
  RationalFunction y = rf({2, 2}, {4});
  CHECK(y.denominator() == Polynomial{Rat(1)});
  CHECK(y.numerator() == Polynomial{make_rat(1, 2), make_rat(1, 2)});
  CHECK((x / x) == RationalFunction::one());
}

TEST_CASE("power series inverse") {
  PowerSeries s({Rat(1), Rat(-3), Rat(0), Rat(0)}, 3);
  PowerSeries inv = s.inverse();
  check_prefix(inv, {1, 3, 9, 27});
  CHECK((s * inv) == PowerSeries::constant(Rat(1), 3));
}

TEST_CASE("expand rational functions") {
  check_prefix(expand(rf({1, 1}, {1, -1}), 3), {1, 2, 2, 2});
  check_prefix(expand(rf({1, 1}, {1, -8, 8, -1}), 3), {1, 9, 64, 441});
  check_prefix(expand(rf({1, 1}, {1, -17, 16, -2}), 2), {1, 18, 290});
  CHECK_THROWS_AS(expand(rf({1}, {0, 1}), 4), std::domain_error);
}

TEST_CASE("ball accumulation") {
  PowerSeries s({Rat(1), Rat(4), Rat(8), Rat(12)}, 3);
  check_prefix(b_from_s(s), {1, 5, 13, 25});
}

TEST_CASE("closed forms of the free families") {
  check_prefix(expand(closed_form(Family::Ao, 3), 3), {1, 9, 64, 441});
  CHECK(closed_form(Family::Ao, 3) == rf({1, 1}, {1, -8, 8, -1}));
  check_prefix(expand(closed_form(Family::Ao, 4), 2), {1, 16, 225});
  CHECK(closed_form(Family::Au, 3) == rf({1, 1}, {1, -17, 16, -2}));
  check_prefix(expand(closed_form(Family::As, 5), 3), {1, 16, 121, 841});
  CHECK(closed_form(Family::As, 5) == rf({1, 8, 1}, {1, -8, 8, -1}));
  CHECK_THROWS_AS(closed_form(Family::Ao, 2), std::invalid_argument);
  CHECK_THROWS_AS(closed_form(Family::Au, 1), std::invalid_argument);
  CHECK_THROWS_AS(closed_form(Family::As, 4), std::invalid_argument);
}

TEST_CASE("p and q invariants") {
  RationalFunction s_z = rf({1, 1}, {1, -1});
  CHECK(p_invariant(s_z) == rf({0, 2}, {1, 1}));
  CHECK(p_invariant(rf({1, 1}, {1, -3})) == rf({0, 4}, {1, 1}));
  for (long n = 1; n <= 5; ++n) {
    RationalFunction s_fn = rf({1, 1}, {1, -(2 * n - 1)});
    CHECK(q_invariant(s_fn) == RationalFunction(Rat(2 * n)));
  }
  SUBCASE("round trip") {
    for (const auto& s : {s_z, closed_form(Family::Ao, 3), closed_form(Family::As, 6)}) {
      CHECK(s_from_p(p_invariant(s)) == s);
    }
  }
}

TEST_CASE("product constructions") {
  RationalFunction s_z = rf({1, 1}, {1, -1});
  CHECK(free_series(s_z, s_z) == rf({1, 1}, {1, -3}));
  CHECK(tensor_series(s_z, s_z) == rf({1, 2, 1}, {1, -2, 1}));

  SUBCASE("free product splits by leading factor") {
    auto parts = free_series_parts(s_z, s_z);
    CHECK(parts.c1 == rf({0, 2}, {1, -3}));
    CHECK(parts.c2 == parts.c1);
    RationalFunction a = closed_form(Family::Ao, 3);
    RationalFunction b = closed_form(Family::As, 5);
    auto p2 = free_series_parts(a, b);
    CHECK(RationalFunction::one() + p2.c1 + p2.c2 == free_series(a, b));
  }

  SUBCASE("p linearizes free products") {
    RationalFunction a = closed_form(Family::Ao, 4);
    RationalFunction b = closed_form(Family::Au, 2);
    CHECK(p_invariant(free_series(a, b)) == p_invariant(a) + p_invariant(b));
    CHECK(q_invariant(free_series(a, b)) == q_invariant(a) + q_invariant(b));
  }
}

TEST_CASE("free version") {
  // Squares of dims k+1: S = (1+z)/(1-z)^3, the n = 2 orthogonal case.
  RationalFunction s = rf({1, 1}, {1, -3, 3, -1});
  CHECK(free_version_series(s) == closed_form(Family::Au, 2));
}

TEST_CASE("growth ratio") {
  auto r = growth_ratio(closed_form(Family::Ao, 3), 1e-12);
  REQUIRE(r.has_value());
  CHECK(*r == doctest::Approx((7.0 + 3.0 * std::sqrt(5.0)) / 2.0).epsilon(1e-11));

  for (int n = 3; n <= 10; ++n) {
    double qn2 = [](double m) {
      double q = (m - 2 + std::sqrt((m - 2) * (m - 2) - 4)) / 2;
      return q * q;
    }(n + 2);
    auto got = growth_ratio(closed_form(Family::Ao, n), 1e-11);
    REQUIRE(got.has_value());
    CHECK(*got == doctest::Approx(qn2).epsilon(1e-9));
  }

  CHECK_FALSE(growth_ratio(rf({1, 1}, {1, -1}), 1e-9).has_value());
  CHECK_FALSE(growth_ratio(rf({1}, {1}), 1e-9).has_value());
  CHECK_FALSE(growth_ratio(rf({1, 1}, {1, -2, 1}), 1e-9).has_value());
}
