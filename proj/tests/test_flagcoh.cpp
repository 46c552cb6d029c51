#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cpindex/charclass.hpp"
#include "cpindex/errors.hpp"
#include "cpindex/flagcoh.hpp"

using namespace cpindex;
using namespace cpindex::flagcoh;
using Series = std::vector<std::int64_t>;

namespace {

Series presented(Field f, int j, int r, std::uint32_t p, int depth) {
  return poincare_series(flag_presentation(f, j, r, p), depth).coefficients;
}

// Words in the multiset {0^{(p-r)j}, 1^j, ..., r^j} counted by inversions, in degree 2*inversions.
Series words_by_inversions(int j, int r, int p, int depth) {
  std::vector<int> w;
  for (int i = 0; i < (p - r) * j; ++i) w.push_back(0);
  for (int l = 1; l <= r; ++l)
    for (int i = 0; i < j; ++i) w.push_back(l);
  std::sort(w.begin(), w.end());
  Series out(static_cast<std::size_t>(depth) + 1, 0);
  do {
    int inv = 0;
    for (std::size_t a = 0; a < w.size(); ++a)
      for (std::size_t b = a + 1; b < w.size(); ++b) inv += w[a] > w[b];
    if (2 * inv <= depth) ++out[static_cast<std::size_t>(2 * inv)];
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// prod over `num` of (1 - t^a)/(1 - t^2), divided by prod over `den` of the same; all divisions exact.
Series ratio_of_degree_products(const std::vector<int>& num, const std::vector<int>& den, int depth) {
  Series s{1};
  auto times = [&](int a) {
    Series out(s.size() + static_cast<std::size_t>(a), 0);
    for (std::size_t i = 0; i < s.size(); ++i)
      for (int k = 0; k < a; k += 2) out[i + static_cast<std::size_t>(k)] += s[i];
    s = out;
  };
  auto divide = [&](int a) {  // by 1 + t^2 + ... + t^{a-2}
    Series q(s.size(), 0);
    Series rem = s;
    for (std::size_t i = 0; i < rem.size(); ++i) {
      const auto c = rem[i];
      q[i] = c;
      for (int k = 0; k < a; k += 2)
        if (i + static_cast<std::size_t>(k) < rem.size()) rem[i + static_cast<std::size_t>(k)] -= c;
    }
    s = q;
  };
  for (int a : num) times(a);
  for (int a : den) divide(a);
  s.resize(static_cast<std::size_t>(depth) + 1, 0);
  return s;
}

}  // namespace

TEST_CASE("field names") {
  CHECK(parse_field("complex") == Field::Complex);
  CHECK(parse_field("R") == Field::Real);
  CHECK(to_string(Field::Real) == "real");
  CHECK_THROWS_AS(parse_field("quaternionic"), ParseError);
}

TEST_CASE("complete complex flags") {
  CHECK(presented(Field::Complex, 1, 3, 3, 6) == Series{1, 0, 2, 0, 2, 0, 1});
  CHECK(presented(Field::Complex, 1, 2, 3, 6) == Series{1, 0, 2, 0, 2, 0, 1});
}

TEST_CASE("complex flags count words by inversions") {
  struct Case {
    int j, r;
    std::uint32_t p;
  };
  for (const auto& c : {Case{1, 1, 3}, Case{1, 2, 3}, Case{1, 3, 3}, Case{2, 1, 3}, Case{2, 2, 3}, Case{2, 3, 3},
                        Case{1, 2, 5}, Case{1, 4, 5}}) {
    const int depth = 2 * c.j * c.j * static_cast<int>(c.p * (c.p - 1)) / 2 + 2;
    CAPTURE(c.j);
    CAPTURE(c.r);
    CAPTURE(c.p);
    const auto expected = words_by_inversions(c.j, c.r, static_cast<int>(c.p), depth);
    CHECK(presented(Field::Complex, c.j, c.r, c.p, depth) == expected);
    CHECK(fibration_series_oracle(Field::Complex, c.j, c.r, c.p, depth).coefficients == expected);
    std::vector<int> parts(static_cast<std::size_t>(c.r), c.j);
    if (c.r < static_cast<int>(c.p)) parts.push_back((static_cast<int>(c.p) - c.r) * c.j);
    CHECK(gaussian_multinomial(parts, depth).coefficients == expected);
  }
}

TEST_CASE("q-multinomials") {
  CHECK(gaussian_multinomial({2, 2}, 8).coefficients == Series{1, 0, 1, 0, 2, 0, 1, 0, 1});
  CHECK(gaussian_multinomial({3}, 4).coefficients == Series{1, 0, 0, 0, 0});
  CHECK_THROWS_AS(gaussian_multinomial({-1}, 4), DomainError);
}

TEST_CASE("real flags with even blocks") {
  // SO(6)/SO(2)^3: degrees 4, 6, 8 over three circles.
  const auto expected = ratio_of_degree_products({4, 8, 6}, {2, 2, 2}, 12);
  CHECK(presented(Field::Real, 2, 3, 3, 12) == expected);
  CHECK(presented(Field::Real, 2, 2, 3, 12) == expected);
  CHECK(fibration_series_oracle(Field::Real, 2, 3, 3, 12).coefficients == expected);
}

TEST_CASE("real flags with one block are oriented Grassmannians") {
  for (int j : {2, 3}) {
    const int n = 3 * j;
    const int depth = j * (n - j) + 2;
    CAPTURE(j);
    CHECK(presented(Field::Real, j, 1, 3, depth) ==
          poincare_series(charclass::oriented_grassmann_presentation(n, j, 3), depth).coefficients);
  }
}

TEST_CASE("real flags with odd blocks and r > 1 are not evenly concentrated") {
  // SO(9)/SO(3)^3 has rank deficit one, so the quotient of the classifying
  // series is not a Poincare series past the top of the even part.
  CHECK_THROWS_AS(fibration_series_oracle(Field::Real, 3, 3, 3, 16), StructuralError);
  CHECK(fibration_series_oracle(Field::Real, 3, 3, 3, 15).coefficients == presented(Field::Real, 3, 3, 3, 15));
}

TEST_CASE("domain checks") {
  CHECK_THROWS_AS(flag_presentation(Field::Complex, 1, 4, 3), DomainError);
  CHECK_THROWS_AS(flag_presentation(Field::Complex, 0, 1, 3), DomainError);
  CHECK_THROWS_AS(flag_presentation(Field::Real, 1, 1, 3), DomainError);
  CHECK_THROWS_AS(flag_presentation(Field::Complex, 1, 1, 4), DomainError);
  CHECK(default_depth(2, 3) == 12);
}
