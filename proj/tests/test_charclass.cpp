#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cpindex/charclass.hpp"
#include "cpindex/errors.hpp"
#include "cpindex/flagcoh.hpp"

using namespace cpindex;
using namespace cpindex::charclass;

namespace {

std::vector<std::int64_t> series(const galgebra::AlgebraPresentation& pres, int depth) {
  return flagcoh::poincare_series(pres, depth).coefficients;
}

// Partitions fitting in a k x (n-k) box, counted by size: the Betti numbers of Gr_k(C^n).
std::vector<std::int64_t> box_partitions(int n, int k, int depth) {
  const int cols = n - k;
  std::vector<std::int64_t> out(static_cast<std::size_t>(depth) + 1, 0);
  std::vector<int> parts(static_cast<std::size_t>(k), 0);
  // Odometer over weakly decreasing sequences cols >= parts[0] >= ... >= parts[k-1] >= 0.
  for (;;) {
    int size = 0;
    for (int x : parts) size += x;
    if (2 * size <= depth) ++out[static_cast<std::size_t>(2 * size)];
    int i = k - 1;
    while (i >= 0 && parts[static_cast<std::size_t>(i)] == (i == 0 ? cols : parts[static_cast<std::size_t>(i - 1)])) --i;
    if (i < 0) break;
    ++parts[static_cast<std::size_t>(i)];
    for (int m = i + 1; m < k; ++m) parts[static_cast<std::size_t>(m)] = 0;
  }
  return out;
}

long long choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("classifying spaces") {
  const auto bu = classifying_presentation(GroupFamily::unitary(3), 3);
  REQUIRE(bu.algebra()->size() == 3);
  CHECK(bu.algebra()->generators()[2].degree == 6);
  CHECK(bu.relations().empty());

  const auto bso4 = classifying_presentation(GroupFamily::special_orthogonal(4), 3);
  REQUIRE(bso4.algebra()->size() == 2);
  CHECK(bso4.algebra()->generators()[0].degree == 4);
  CHECK(bso4.algebra()->generators()[1].degree == 4);

  const auto bso5 = classifying_presentation(GroupFamily::special_orthogonal(5), 5);
  CHECK(bso5.algebra()->size() == 2);

  const auto bc = classifying_presentation(GroupFamily::cyclic(), 3);
  const auto u = galgebra::Polynomial::generator(bc.algebra(), "u");
  CHECK((u * u).is_zero());
  CHECK(flagcoh::poincare_series(bc, 6).coefficients == std::vector<std::int64_t>{1, 1, 1, 1, 1, 1, 1});
}

TEST_CASE("total and Euler classes") {
  const auto g = GroupFamily::special_orthogonal(4);
  const auto alg = classifying_presentation(g, 3).algebra();
  const auto t = total_class(g, alg);
  const auto e = euler_class(g, alg);
  CHECK(t.homogeneous_part(8) == e * e);
  CHECK(t.max_degree() == 8);
  CHECK_THROWS_AS(euler_class(GroupFamily::special_orthogonal(3), 3), DomainError);
  CHECK_THROWS_AS(total_class(GroupFamily::cyclic(), 3), DomainError);
}

TEST_CASE("inverse total class") {
  for (int n = 1; n <= 4; ++n) {
    const auto g = GroupFamily::unitary(n);
    const auto alg = classifying_presentation(g, 5).algebra();
    const auto t = total_class(g, alg);
    const auto inv = inverse_total_class(t, 16);
    CHECK((t * inv).truncated(16) == galgebra::Polynomial::constant(alg, 1));
  }
}

TEST_CASE("complex Grassmannians against box partitions") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k) {
      const int depth = 2 * k * (n - k) + 2;
      CAPTURE(n);
      CAPTURE(k);
      CHECK(series(grassmann_presentation(n, k, 3), depth) == box_partitions(n, k, depth));
    }
  CHECK(series(grassmann_presentation(4, 2, 3), 8) == std::vector<std::int64_t>{1, 0, 1, 0, 2, 0, 1, 0, 1});
  CHECK_THROWS_AS(grassmann_presentation(3, 3, 3), DomainError);
}

TEST_CASE("oriented Grassmannians satisfy Poincare duality and have the right total rank") {
  for (int n = 3; n <= 8; ++n)
    for (int j = 2; j < n; ++j) {
      CAPTURE(n);
      CAPTURE(j);
      const int dim = j * (n - j);
      const auto s = series(oriented_grassmann_presentation(n, j, 3), dim + 4);
      for (int d = 0; d <= dim; ++d) CHECK(s[static_cast<std::size_t>(d)] == s[static_cast<std::size_t>(dim - d)]);
      for (int d = dim + 1; d <= dim + 4; ++d) CHECK(s[static_cast<std::size_t>(d)] == 0);
      long long total = 0;
      for (auto c : s) total += c;
      const bool exterior = n % 2 == 0 && j % 2 != 0;
      const long long expected = exterior ? 2 * choose(n / 2 - 1, (j - 1) / 2) : 2 * choose(n / 2, j / 2);
      CHECK(total == expected);
      if (!exterior)
        for (int d = 1; d <= dim; d += 2) CHECK(s[static_cast<std::size_t>(d)] == 0);
    }
}

TEST_CASE("small oriented Grassmannians") {
  // Gr~_2(R^4) = S^2 x S^2, Gr~_3(R^4) = S^3, Gr~_2(R^5) a quadric.
  CHECK(series(oriented_grassmann_presentation(4, 2, 3), 4) == std::vector<std::int64_t>{1, 0, 2, 0, 1});
  CHECK(series(oriented_grassmann_presentation(4, 3, 5), 3) == std::vector<std::int64_t>{1, 0, 0, 1});
  CHECK(series(oriented_grassmann_presentation(5, 2, 3), 6) == std::vector<std::int64_t>{1, 0, 1, 0, 1, 0, 1});
  CHECK_THROWS_AS(oriented_grassmann_presentation(4, 1, 3), DomainError);
}
