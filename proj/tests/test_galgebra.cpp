#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cpindex/errors.hpp"
#include "cpindex/galgebra.hpp"

using namespace cpindex;
using namespace cpindex::galgebra;

namespace {

AlgebraPtr mixed(std::uint32_t p = 5) {
  return make_algebra(p, {{"x", 1, Parity::Odd}, {"z", 2, Parity::Even}, {"y", 3, Parity::Odd}, {"w", 4, Parity::Even}});
}

Polynomial gen(const AlgebraPtr& a, const char* name) { return Polynomial::generator(a, name); }

Polynomial random_homogeneous(const AlgebraPtr& a, int d, std::mt19937& rng) {
  Polynomial x(a);
  for (const auto& m : degree_basis(*a, d)) x.add_term(m, static_cast<std::int64_t>(rng() % a->modulus()));
  return x;
}

// Number of monomials of degree d in even generators of the given degrees.
std::size_t count_monomials(const std::vector<int>& degs, int d) {
  std::vector<std::size_t> ways(static_cast<std::size_t>(d) + 1, 0);
  ways[0] = 1;
  for (int g : degs)
    for (int k = g; k <= d; ++k) ways[static_cast<std::size_t>(k)] += ways[static_cast<std::size_t>(k - g)];
  return ways[static_cast<std::size_t>(d)];
}

}  // namespace

TEST_CASE("Koszul signs") {
  const auto a = mixed();
  const auto x = gen(a, "x"), y = gen(a, "y"), z = gen(a, "z");
  CHECK(x * y == -(y * x));
  CHECK((x * x).is_zero());
  CHECK((y * y).is_zero());
  CHECK(x * z == z * x);
  CHECK((x * z * y) == -(y * z * x));
}

TEST_CASE("generator validation") {
  CHECK_THROWS_AS(make_algebra(5, {{"a", 2, Parity::Even}, {"a", 4, Parity::Even}}), DomainError);
  CHECK_THROWS_AS(make_algebra(4, {{"a", 2, Parity::Even}}), DomainError);
  CHECK_THROWS(make_algebra(5, {{"bad name", 2, Parity::Even}}));
}

TEST_CASE("graded ring axioms on random homogeneous elements") {
  const auto a = mixed();
  std::mt19937 rng(11);
  for (int t = 0; t < 150; ++t) {
    const int da = 1 + static_cast<int>(rng() % 6), db = 1 + static_cast<int>(rng() % 6), dc = 1 + static_cast<int>(rng() % 6);
    const auto x = random_homogeneous(a, da, rng);
    const auto y = random_homogeneous(a, db, rng);
    const auto z = random_homogeneous(a, dc, rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == (y * x).scaled((da * db) % 2 ? -1 : 1));
  }
}

TEST_CASE("homogeneous parts and truncation") {
  const auto a = mixed();
  const auto z = gen(a, "z"), w = gen(a, "w");
  const auto f = Polynomial::constant(a, 1) + z + w + z * w;
  CHECK_FALSE(f.is_homogeneous());
  CHECK(f.max_degree() == 6);
  CHECK(f.homogeneous_part(4) == w);
  CHECK(f.truncated(4) == Polynomial::constant(a, 1) + z + w);
  CHECK(f.homogeneous_parts().size() == 4);
  CHECK((z * w).degree() == 6);
}

TEST_CASE("substitution is a ring map") {
  const auto a = make_algebra(3, {{"s", 2, Parity::Even}, {"t", 2, Parity::Even}});
  const auto b = make_algebra(3, {{"c1", 2, Parity::Even}, {"c2", 4, Parity::Even}});
  const auto s = gen(a, "s"), t = gen(a, "t");
  const std::vector<Polynomial> images{gen(b, "c1"), gen(b, "c1")};
  const auto f = s * s + s * t;
  CHECK(f.substitute(b, images) == gen(b, "c1").pow(2).scaled(2));
  CHECK((s * t).substitute(b, images) == s.substitute(b, images) * t.substitute(b, images));
}

TEST_CASE("degree bases count monomials") {
  const auto a = make_algebra(3, {{"c1", 2, Parity::Even}, {"c2", 4, Parity::Even}, {"c3", 6, Parity::Even}});
  for (int d = 0; d <= 24; ++d) CHECK(degree_basis(*a, d).size() == count_monomials({2, 4, 6}, d));
  const auto o = mixed();
  // x and y are exterior: the basis in degree 4 is w, z^2, x*y.
  CHECK(degree_basis(*o, 4).size() == 3);
}

TEST_CASE("quotient dimensions of a truncated polynomial ring") {
  const auto a = make_algebra(3, {{"x", 2, Parity::Even}});
  const AlgebraPresentation pres(a, {gen(a, "x").pow(3)});
  CHECK(quotient_dimension(pres, 0) == 1);
  CHECK(quotient_dimension(pres, 2) == 1);
  CHECK(quotient_dimension(pres, 4) == 1);
  CHECK(quotient_dimension(pres, 6) == 0);
  CHECK(quotient_dimension(pres, 3) == 0);
}

TEST_CASE("ideal membership") {
  const auto a = make_algebra(5, {{"x", 2, Parity::Even}, {"y", 2, Parity::Even}});
  const AlgebraPresentation pres(a, {gen(a, "x") * gen(a, "y")});
  const std::vector<Polynomial> gens{gen(a, "x").pow(2)};
  CHECK(ideal_member(gens, gen(a, "x").pow(3), pres));
  CHECK(ideal_member(gens, gen(a, "x").pow(2) + gen(a, "x") * gen(a, "y").scaled(3), pres));
  CHECK_FALSE(ideal_member(gens, gen(a, "y").pow(2), pres));
  CHECK(ideal_member(gens, Polynomial(a), pres));
}

TEST_CASE("polynomial text round trip") {
  const auto a = mixed(7);
  std::mt19937 rng(3);
  for (int t = 0; t < 100; ++t) {
    Polynomial f(a);
    for (int d = 0; d <= 8; ++d)
      if (rng() % 2) f = f + random_homogeneous(a, d, rng);
    CHECK(parse_polynomial(render_polynomial(f), a) == f);
  }
  CHECK(parse_polynomial("2*z^2 - x*y + 3", a) == gen(a, "z").pow(2).scaled(2) - gen(a, "x") * gen(a, "y") +
                                                     Polynomial::constant(a, 3));
  CHECK(parse_polynomial("z·w", a) == gen(a, "z") * gen(a, "w"));
  CHECK_THROWS_AS(parse_polynomial("q^2", a), ParseError);
  CHECK_THROWS_AS(parse_polynomial("z^", a), ParseError);
}

TEST_CASE("presentation text round trip") {
  const auto a = make_algebra(3, {{"c1", 2, Parity::Even}, {"c2", 4, Parity::Even}, {"u", 1, Parity::Odd}});
  const AlgebraPresentation pres(a, {gen(a, "c1").pow(3) - gen(a, "c1") * gen(a, "c2").scaled(2), gen(a, "c2").pow(2)});
  const auto back = parse_presentation(render_presentation(pres), 3);
  CHECK(*back.algebra() == *a);
  REQUIRE(back.relations().size() == 2);
  for (int d = 0; d <= 12; ++d) CHECK(quotient_dimension(back, d) == quotient_dimension(pres, d));
  CHECK_THROWS_AS(parse_presentation("rel x\ngen x 2 even\n", 3), ParseError);
  CHECK_THROWS_AS(parse_presentation("gen x 2 sideways\n", 3), ParseError);
}
