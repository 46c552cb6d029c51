#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cpindex/errors.hpp"
#include "cpindex/fhindex.hpp"

using namespace cpindex;
using namespace cpindex::fhindex;

namespace {

struct GridPoint {
  std::uint32_t p;
  int n;
  Field field;
};

std::vector<GridPoint> grid() {
  std::vector<GridPoint> out;
  for (Field f : {Field::Complex, Field::Real}) {
    for (int n = 1; n <= 6; ++n) out.push_back({3, n, f});
    for (int n = 1; n <= 4; ++n) out.push_back({5, n, f});
  }
  return out;
}

// Least l with v^l in the ideal, and least l with u*v^{l-1} in it.
std::pair<int, int> exponents(WreathIdeal& ideal, const wreath::AlgebraPtr& alg, int bound) {
  int lv = 0, lu = 0;
  const auto u = WreathClass::u(alg);
  for (int l = 1; l <= bound && (!lv || !lu); ++l) {
    if (!lu && ideal.contains(u * WreathClass::v_power(alg, l - 1))) lu = l;
    if (!lv && ideal.contains(WreathClass::v_power(alg, l))) lv = l;
  }
  return {lu, lv};
}

}  // namespace

TEST_CASE("index results") {
  const auto a = IndexResult::u_and_v(9), b = IndexResult::v_only(8);
  CHECK(a.render() == "(u*v^8, v^9)");
  CHECK(b.render() == "(v^8)");
  CHECK(IndexResult::u_and_v(1).render() == "(u, v)");
  CHECK(a.u_exponent() == 8);
  CHECK(b.u_exponent() == 8);
  CHECK(b.contains(a));
  CHECK_FALSE(a.contains(b));
  CHECK(parse_shape(to_string(IndexResult::Shape::UAndV)) == IndexResult::Shape::UAndV);
  CHECK_THROWS_AS(parse_shape("both"), ParseError);
}

TEST_CASE("prime splitting") {
  CHECK(split_prime_power(3, 18).a == 2);
  CHECK(split_prime_power(3, 18).q == 2);
  CHECK(split_prime_power(5, 7).a == 0);
  CHECK(ipow(3, 4) == 81);
  CHECK_THROWS_AS(split_prime_power(2, 4), DomainError);
  CHECK_THROWS_AS(split_prime_power(3, 0), DomainError);
}

TEST_CASE("kernel generators") {
  const auto c = kernel_generators(3, 2, Field::Complex);
  CHECK(c.classes.size() == 6);
  for (std::size_t k = 0; k < c.classes.size(); ++k) {
    CHECK(c.classes[k].is_homogeneous());
    CHECK(c.classes[k].max_degree() == 2 * static_cast<int>(k + 1));
  }
  CHECK(kernel_generators(3, 2, Field::Real).names == std::vector<std::string>{"p1", "p2", "p3", "e6"});
  CHECK(kernel_generators(3, 3, Field::Real).names == std::vector<std::string>{"p1", "p2", "p3", "p4"});
}

TEST_CASE("computed index agrees with the closed form across the grid") {
  for (const auto& g : grid()) {
    CAPTURE(g.p);
    CAPTURE(g.n);
    CAPTURE(to_string(g.field));
    const auto c = compute_index(g.p, g.n, g.field);
    CHECK(c.result == closed_form_index(g.p, g.n, g.field));
    CHECK(c.split.a == split_prime_power(g.p, g.n).a);
    CHECK(c.degrees_scanned >= 2 * c.result.l);
  }
}

TEST_CASE("index shapes re-derived from raw membership") {
  for (const auto& g : grid()) {
    CAPTURE(g.p);
    CAPTURE(g.n);
    CAPTURE(to_string(g.field));
    const auto kg = kernel_generators(g.p, g.n, g.field);
    WreathIdeal ideal(kg.base, kg.classes);
    const auto [lu, lv] = exponents(ideal, kg.base.algebra(), 2 * default_max_l(g.p, g.n));
    const auto r = compute_index(g.p, g.n, g.field).result;
    CHECK(lv == r.v_exponent());
    CHECK(lu - 1 == r.u_exponent());
    CHECK((lu == lv || lu == lv + 1));
  }
}

TEST_CASE("the index does not depend on the sign of the regular summand") {
  for (const auto& [p, n] : std::vector<std::pair<std::uint32_t, int>>{{3, 1}, {3, 2}, {3, 3}, {5, 1}}) {
    CAPTURE(p);
    CAPTURE(n);
    const int pn = static_cast<int>(p) * n;
    const auto kg = kernel_generators(p, n, Field::Complex);
    const auto twisted = wreath::wreath_chern(n, p, 2 * pn, -1);
    WreathIdeal ideal(kg.base, std::vector<WreathClass>(twisted.begin() + 1, twisted.end()));
    const auto [lu, lv] = exponents(ideal, kg.base.algebra(), default_max_l(p, n));
    const auto r = compute_index(p, n, Field::Complex).result;
    CHECK(lv == r.v_exponent());
    CHECK(lu - 1 == r.u_exponent());
  }
}

TEST_CASE("the index shrinks along block doubling") {
  // F_{p^a} maps equivariantly into F_{p^a q}, so Index(p^a q) sits inside Index(p^a).
  for (Field f : {Field::Complex, Field::Real})
    for (const auto& [p, small, big] : std::vector<std::tuple<std::uint32_t, int, int>>{{3, 1, 2}, {3, 1, 4}, {3, 1, 5}, {3, 3, 6}, {5, 1, 2}, {5, 1, 3}}) {
      CAPTURE(p);
      CAPTURE(big);
      CAPTURE(to_string(f));
      CHECK(compute_index(p, small, f).result.contains(compute_index(p, big, f).result));
    }
  CHECK(compute_index(3, 6, Field::Complex).result == compute_index(3, 3, Field::Complex).result);
}

TEST_CASE("search bound") {
  CHECK(default_max_l(3, 3) == 18);
  CHECK_THROWS_AS(compute_index(3, 3, Field::Complex, 5), BoundExceeded);
  CHECK(compute_index(3, 3, Field::Complex, 9).result == IndexResult::u_and_v(9));
  CHECK_THROWS_AS(compute_index(3, 3, Field::Complex, 0), DomainError);
}

TEST_CASE("ideal pieces") {
  const auto kg = kernel_generators(3, 1, Field::Complex);
  WreathIdeal ideal(kg.base, kg.classes);
  CHECK(ideal.piece_rank(2) <= ideal.piece_dimension(2));
  CHECK(ideal.contains(WreathClass(kg.base.algebra())));
  CHECK(ideal.contains(kg.classes[0] * WreathClass::v_power(kg.base.algebra(), 2)));
  CHECK_FALSE(ideal.contains(WreathClass::v_power(kg.base.algebra(), 2)));
}

TEST_CASE("reduction relations for n = 3") {
  const auto c = verify_reduction_relations(3, 3, Field::Complex);
  CHECK(c.passed());
  REQUIRE(c.checks.size() == 8);
  std::vector<std::string> families;
  for (const auto& k : c.checks) families.push_back(k.family);
  CHECK(families == std::vector<std::string>{"i", "i", "ii", "i", "i", "iii", "i", "iv"});
  for (const auto& k : c.checks) CHECK(k.solutions == 1);

  const auto r = verify_reduction_relations(3, 3, Field::Real);
  CHECK(r.passed());
  CHECK(r.checks.size() == 4);
}

TEST_CASE("the leading unit is q mod p") {
  // n = 6 = 3 * 2: the family iii coefficient at the top block is 2.
  const auto rep = verify_reduction_relations(3, 6, Field::Complex);
  CHECK(rep.passed());
  bool seen = false;
  for (const auto& k : rep.checks)
    if (k.k == 6) {
      REQUIRE(k.alpha);
      CHECK(*k.alpha == 2);
      seen = true;
    }
  CHECK(seen);
  CHECK(verify_reduction_relations(3, 3, Field::Complex).checks[5].alpha == 1);
}

TEST_CASE("reduction relations need p | n") {
  CHECK_THROWS_AS(verify_reduction_relations(3, 2, Field::Complex), DomainError);
}

TEST_CASE("sphere indices") {
  CHECK(sphere_index(3, 2) == IndexResult::v_only(2));
  CHECK(sphere_index(5, 2) == IndexResult::v_only(4));
  CHECK(sphere_index(3, 1) == IndexResult::v_only(1));
  CHECK_THROWS_AS(sphere_index(3, 0), DomainError);
}

TEST_CASE("shadow bounds") {
  CHECK(shadow_bound(3, 3, Field::Complex).max_r == 8);
  CHECK(shadow_bound(3, 3, Field::Real).max_r == 7);
  CHECK(shadow_bound(3, 1, Field::Complex).max_r == 2);
  CHECK(shadow_bound(5, 10, Field::Complex).max_r == 12);
  CHECK(shadow_bound(3, 3, Field::Real).justification.find("(v^8)") != std::string::npos);
}

TEST_CASE("containment reproduces the complex boundary") {
  for (std::uint32_t p : {3u, 5u, 7u})
    for (int n = 1; n <= 9; ++n) {
      const auto b = shadow_bound(p, n, Field::Complex);
      CHECK(containment_admits(p, n, Field::Complex, b.max_r));
      CHECK_FALSE(containment_admits(p, n, Field::Complex, b.max_r + 1));
    }
}

TEST_CASE("containment reproduces the real boundary when the real index is principal") {
  for (std::uint32_t p : {3u, 5u})
    for (int n : {1, 3, 9}) {
      if (n % static_cast<int>(p) != 0 && n != 1) continue;
      const auto b = shadow_bound(p, n, Field::Real);
      CHECK(containment_admits(p, n, Field::Real, b.max_r));
      CHECK_FALSE(containment_admits(p, n, Field::Real, b.max_r + 1));
    }
}
