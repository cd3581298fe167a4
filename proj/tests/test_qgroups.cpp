#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <initializer_list>
#include <string>
#include <vector>

#include "qgrowth/qgroups.hpp"
#include "qgrowth/series.hpp"

using namespace qgrowth;

namespace {

RationalFunction rf(std::initializer_list<long> num, std::initializer_list<long> den) {
  std::vector<Rat> n, d;
  for (long c : num) n.emplace_back(c);
  for (long c : den) d.emplace_back(c);
  return RationalFunction(Polynomial(n), Polynomial(d));
}

void check_ints(const std::vector<Int>& got, std::initializer_list<long> want) {
  REQUIRE(got.size() >= want.size());
  size_t i = 0;
  for (long w : want) {
    CAPTURE(i);
    CHECK(got[i] == Int(w));
    ++i;
  }
}

// Splits a free-product word label "{1:x}{2:y}..." into (factor, inner) pairs.
std::vector<std::pair<int, std::string>> split_word(const std::string& label) {
  std::vector<std::pair<int, std::string>> out;
  if (label == "e") return out;
  size_t pos = 0;
  while (pos < label.size()) {
    REQUIRE(label[pos] == '{');
    int tag = label[pos + 1] - '1';
    size_t start = pos + 3;
    int depth = 1;
    size_t end = start;
    while (depth > 0) {
      if (label[end] == '{') ++depth;
      if (label[end] == '}') --depth;
      if (depth > 0) ++end;
    }
    out.emplace_back(tag, label.substr(start, end - start));
    pos = end + 1;
  }
  return out;
}

}  // namespace

TEST_CASE("chain ring dimensions and fusion rules") {
  auto ao3 = ao_ring(3);
  check_ints({ao3->dim("u0"), ao3->dim("u1"), ao3->dim("u2"), ao3->dim("u3"), ao3->dim("u4")},
             {1, 3, 8, 21, 55});
  auto su2 = ao_ring(2);
  for (long k = 0; k <= 6; ++k) CHECK(su2->dim("u" + std::to_string(k)) == k + 1);
  auto as5 = as_ring(5);
  check_ints({as5->dim("v0"), as5->dim("v1"), as5->dim("v2"), as5->dim("v3")}, {1, 4, 11, 29});
  CHECK(as5->generator_dim() == 5);
  CHECK(ao3->generator_dim() == 3);

  MultiplicityVector t = ao3->tensor_with_letter("u2", "u1");
  REQUIRE(t.size() == 2);
  CHECK(t.at("u1") == 1);
  CHECK(t.at("u3") == 1);
  CHECK(ao3->tensor_with_letter("u0", "u1") == MultiplicityVector{{"u1", Int(1)}});

  MultiplicityVector s = as5->tensor_with_letter("v2", "v1");
  REQUIRE(s.size() == 3);
  CHECK(s.at("v1") == 1);
  CHECK(s.at("v2") == 1);
  CHECK(s.at("v3") == 1);
  CHECK(as5->tensor_with_letter("v0", "v1") == MultiplicityVector{{"v1", Int(1)}});
  CHECK(as5->tensor_with_letter("v3", "v0") == MultiplicityVector{{"v3", Int(1)}});

  CHECK(ao3->conjugate("u3") == "u3");
  CHECK_THROWS_AS(ao_ring(1), std::invalid_argument);
  CHECK_THROWS_AS(as_ring(3), std::invalid_argument);
  CHECK_THROWS_AS(ao3->dim("u-1"), std::invalid_argument);
  CHECK_THROWS_AS(ao3->dim("w2"), std::invalid_argument);
  CHECK_THROWS_AS(ao3->dim("u01"), std::invalid_argument);
}

TEST_CASE("group duals") {
  auto z = group_ring(GroupKind::FreeAbelian, 1);
  check_ints(volumes(*z, 3).spheres, {1, 2, 2, 2});
  CHECK(z->conjugate("[3]") == "[-3]");

  auto z2 = group_ring(GroupKind::FreeAbelian, 2);
  auto vt = volumes(*z2, 2);
  check_ints(vt.spheres, {1, 4, 8});
  check_ints(vt.balls, {1, 5, 13});
  CHECK(z2->dim("[1,-2]") == 1);

  auto f2 = group_ring(GroupKind::Free, 2);
  check_ints(volumes(*f2, 3).spheres, {1, 4, 12, 36});
  CHECK(f2->conjugate("[1,-2]") == "[2,-1]");
  CHECK(f2->conjugate("[]") == "[]");

  CHECK_THROWS_AS(z2->dim("[1]"), std::invalid_argument);
  CHECK_THROWS_AS(f2->dim("[1,-1]"), std::invalid_argument);
  CHECK_THROWS_AS(f2->dim("[3]"), std::invalid_argument);
  CHECK_THROWS_AS(z->dim("[01]"), std::invalid_argument);
  CHECK_THROWS_AS(group_ring(GroupKind::Free, 0), std::invalid_argument);
}

TEST_CASE("trivial ring is an identity for both products") {
  auto ao3 = ao_ring(3);
  auto want = volumes(*ao3, 5);
  auto direct = volumes(*direct_product(ao3, trivial_ring()), 5);
  auto freep = volumes(*free_product(trivial_ring(), ao3), 5);
  CHECK(direct.spheres == want.spheres);
  CHECK(freep.spheres == want.spheres);
}

TEST_CASE("direct products") {
  auto z1 = group_ring(GroupKind::FreeAbelian, 1);
  auto zz = direct_product(z1, z1);
  CHECK(volumes(*zz, 6).spheres == volumes(*group_ring(GroupKind::FreeAbelian, 2), 6).spheres);

  auto ao3 = ao_ring(3);
  auto sq = direct_product(ao3, ao3);
  check_ints(volumes(*sq, 2).spheres, {1, 18});
  CHECK(sq->conjugate("(u1,u2)") == "(u1,u2)");
  CHECK(sq->dim("(u1,u2)") == 24);

  auto mixed = direct_product(ao3, group_ring(GroupKind::FreeAbelian, 2));
  CHECK(mixed->conjugate("(u1,[1,0])") == "(u1,[-1,0])");
  // S of a direct product is the product of the factor series.
  PowerSeries lhs = series_from_ring(*mixed, 10);
  PowerSeries prod =
      series_from_ring(*ao3, 10) * series_from_ring(*group_ring(GroupKind::FreeAbelian, 2), 10);
  CHECK(lhs == prod);
  CHECK_THROWS_AS(mixed->dim("(u1)"), std::invalid_argument);
  CHECK_THROWS_AS(mixed->dim("u1"), std::invalid_argument);
}

TEST_CASE("free products") {
  auto z1 = group_ring(GroupKind::FreeAbelian, 1);
  auto ff = free_product(z1, z1);
  CHECK(volumes(*ff, 6).spheres == volumes(*group_ring(GroupKind::Free, 2), 6).spheres);

  auto ao3 = ao_ring(3);
  check_ints(volumes(*free_product(ao3, ao3), 2).spheres, {1, 18, 290});

  // S of a free product satisfies the composition rule for the factor series.
  RationalFunction s_ao3 = closed_form(Family::Ao, 3);
  RationalFunction s_z = rf({1, 1}, {1, -1});
  PowerSeries want = expand(free_series(s_ao3, s_z), 10);
  CHECK(series_from_ring(*free_product(ao3, z1), 10) == want);

  auto w = free_product(ao3, ao3);
  CHECK(w->conjugate("{1:u1}{2:u2}") == "{2:u2}{1:u1}");
  CHECK(w->dim("{1:u2}{2:u1}{1:u1}") == 72);
  CHECK_THROWS_AS(w->dim("{1:u1}{1:u2}"), std::invalid_argument);
  CHECK_THROWS_AS(w->dim("{1:u0}"), std::invalid_argument);
  CHECK_THROWS_AS(w->dim("{3:u1}"), std::invalid_argument);
}

TEST_CASE("free product ball respects word length and dimension") {
  auto ao3 = ao_ring(3);
  auto w = free_product(ao3, ao3);
  auto b = ball(*w, 4);
  CHECK(b.size() > 20);
  for (const auto& [label, len] : b) {
    CAPTURE(label);
    long word_len = 0;
    Int word_dim = 1;
    for (const auto& [tag, inner] : split_word(label)) {
      CHECK((tag == 0 || tag == 1));
      word_len += std::strtol(inner.c_str() + 1, nullptr, 10);
      word_dim *= ao3->dim(inner);
    }
    CHECK(word_len == len);
    CHECK(word_dim == w->dim(label));
  }
}

TEST_CASE("free version growth matches the unitary closed forms") {
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    PowerSeries want = expand(closed_form(Family::Au, n), 12);
    auto got = free_version_growth(ao_ring(n), 12);
    for (int k = 0; k <= 12; ++k) {
      CAPTURE(k);
      CHECK(got.spheres[static_cast<size_t>(k)] == want.coeff(k).get_num());
    }
  }
  CHECK_THROWS_WITH_AS(free_version_growth(as_ring(5), 3), doctest::Contains("degenerate"),
                       std::domain_error);
}

TEST_CASE("free product is associative on volumes") {
  auto z1 = group_ring(GroupKind::FreeAbelian, 1);
  auto left = free_product(free_product(z1, z1), z1);
  auto right = free_product(z1, free_product(z1, z1));
  auto la = volumes(*left, 8);
  auto ra = volumes(*right, 8);
  CHECK(la.spheres == ra.spheres);
  CHECK(la.spheres == volumes(*group_ring(GroupKind::Free, 3), 8).spheres);
}

TEST_CASE("catalog grammar") {
  auto e = ring_from_spec("prod(ao:3,zr:2)");
  CHECK(e.name == "prod(ao:3,zr:2)");
  CHECK_FALSE(e.growth_only);
  CHECK(volumes(*e.ring, 3).spheres ==
        volumes(*direct_product(ao_ring(3), group_ring(GroupKind::FreeAbelian, 2)), 3).spheres);

  CHECK(volumes(*ring_from_spec("ao:3").ring, 3).spheres == volumes(*ao_ring(3), 3).spheres);
  CHECK(ring_from_spec("trivial").ring->generator_dim() == 1);
  CHECK(ring_from_spec("free:2").ring->generator_dim() == 4);

  auto fv = ring_from_spec("freeversion(ao:2)");
  CHECK(fv.growth_only);
  CHECK(ring_from_spec("free(freeversion(ao:2),zr:1)").growth_only);
  CHECK_FALSE(ring_from_spec("free(ao:2,zr:1)").growth_only);

  for (const char* bad : {"ao:1", "as:3", "zr:0", "bogus", "ao:x", "prod(ao:3)",
                          "freeversion(as:5)", "freeversion(freeversion(ao:2))", "prod(ao:3,)",
                          "free(,zr:1)", "ao:3 "}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(ring_from_spec(bad), std::invalid_argument);
  }
}
