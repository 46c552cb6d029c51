#include "cpindex/fp.hpp"

namespace cpindex {

bool is_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

void require_odd_prime(std::uint64_t p) {
  if (!is_odd_prime(p)) throw DomainError(std::to_string(p) + " is not an odd prime");
  if (p > 0xFFFFu) throw DomainError("prime " + std::to_string(p) + " is too large");
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  std::uint64_t b = base % p;
  while (exp > 0) {
    if (exp & 1) result = result * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime, so a^(p-2) is the inverse.
  return pow_mod(a, p - 2, p);
}

std::uint32_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  if (k > n) return 0;
  std::uint64_t result = 1;
  while (n > 0 || k > 0) {
    std::uint32_t ni = static_cast<std::uint32_t>(n % p);
    std::uint32_t ki = static_cast<std::uint32_t>(k % p);
    if (ki > ni) return 0;
    // small binomial C(ni, ki) mod p via multiplicative formula
    std::uint64_t num = 1, den = 1;
    for (std::uint32_t i = 0; i < ki; ++i) {
      num = num * (ni - i) % p;
      den = den * (i + 1) % p;
    }
    result = result * num % p * inverse_mod(static_cast<std::uint32_t>(den), p) % p;
    n /= p;
    k /= p;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace cpindex
