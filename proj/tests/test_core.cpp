#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cpindex/fp.hpp"
#include "cpindex/linalg.hpp"

using namespace cpindex;

TEST_CASE("odd primes") {
  CHECK(is_odd_prime(3));
  CHECK(is_odd_prime(101));
  CHECK_FALSE(is_odd_prime(2));
  CHECK_FALSE(is_odd_prime(9));
  CHECK_THROWS_AS(require_odd_prime(2), DomainError);
  CHECK_THROWS_AS(require_odd_prime(15), DomainError);
}

TEST_CASE("residues and inverses") {
  CHECK(reduce_mod(-1, 5) == 4);
  CHECK(reduce_mod(12, 5) == 2);
  CHECK(signed_residue(4, 5) == -1);
  CHECK(signed_residue(2, 5) == 2);
  for (std::uint32_t p : {3u, 5u, 7u, 11u})
    for (std::uint32_t a = 1; a < p; ++a) CHECK((static_cast<std::uint64_t>(a) * inverse_mod(a, p)) % p == 1);
  CHECK(pow_mod(2, 10, 7) == 1024 % 7);
}

TEST_CASE("field arithmetic") {
  const Fp a(2, 5), b(4, 5);
  CHECK((a + b).value() == 1);
  CHECK((a - b).value() == 3);
  CHECK((a * b).value() == 3);
  CHECK((a / b * b).value() == a.value());
  CHECK_THROWS_AS(Fp(0, 5).inverse(), DomainError);
  CHECK_THROWS_AS(Fp(1, 5) + Fp(1, 7), StructuralError);
}

TEST_CASE("row reducer rank and membership") {
  RowReducer r(3, 3);
  CHECK(r.insert({1, 2, 0}));
  CHECK(r.insert({0, 1, 1}));
  CHECK_FALSE(r.insert({1, 0, 1}));  // first + 2*second
  CHECK(r.rank() == 2);
  CHECK(r.contains({2, 1, 0}));
  CHECK_FALSE(r.contains({0, 0, 1}));
  CHECK(r.reduce({1, 2, 0}) == DenseRow{0, 0, 0});
}

TEST_CASE("row reducer rank matches a determinant count on random 2x2 blocks") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::uint32_t a = rng() % 5, b = rng() % 5, c = rng() % 5, d = rng() % 5;
    RowReducer r(2, 5);
    r.insert({a, b});
    r.insert({c, d});
    const bool zero = a == 0 && b == 0 && c == 0 && d == 0;
    const std::size_t expected = zero ? 0 : ((a * d + 5 * 5 - b * c % 5) % 5 != 0 ? 2 : 1);
    CHECK(r.rank() == expected);
  }
}
