#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "cpindex/errors.hpp"

namespace cpindex {

bool is_odd_prime(std::uint64_t p);

/// Throws DomainError unless p is an odd prime.
void require_odd_prime(std::uint64_t p);

/// Reduces an arbitrary signed integer into [0, p).
inline std::uint32_t reduce_mod(std::int64_t x, std::uint32_t p) {
  std::int64_t r = x % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

/// Symmetric representative in (-p/2, p/2]; used for printing.
inline std::int64_t signed_residue(std::uint32_t x, std::uint32_t p) {
  return x > p / 2 ? static_cast<std::int64_t>(x) - p : static_cast<std::int64_t>(x);
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp, std::uint32_t p);
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

/// An element of the prime field F_p. The modulus travels with the value;
/// arithmetic between elements of different fields is a StructuralError.
class Fp {
 public:
  Fp(std::int64_t value, std::uint32_t modulus)
      : value_(reduce_mod(value, modulus)), modulus_(modulus) {}

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  Fp operator+(const Fp& o) const {
    check(o);
    return Fp(static_cast<std::int64_t>(value_) + o.value_, modulus_);
  }
  Fp operator-(const Fp& o) const {
    check(o);
    return Fp(static_cast<std::int64_t>(value_) - o.value_, modulus_);
  }
  Fp operator-() const { return Fp(-static_cast<std::int64_t>(value_), modulus_); }
  Fp operator*(const Fp& o) const {
    check(o);
    return Fp(static_cast<std::int64_t>(static_cast<std::uint64_t>(value_) * o.value_ % modulus_),
              modulus_);
  }
  Fp inverse() const {
    if (value_ == 0) throw DomainError("zero has no inverse in F_" + std::to_string(modulus_));
    return Fp(inverse_mod(value_, modulus_), modulus_);
  }
  Fp operator/(const Fp& o) const { return *this * o.inverse(); }
  Fp pow(std::uint64_t e) const { return Fp(pow_mod(value_, e, modulus_), modulus_); }

  bool operator==(const Fp& o) const = default;

 private:
  void check(const Fp& o) const {
    if (modulus_ != o.modulus_)
      throw StructuralError("mixing F_" + std::to_string(modulus_) + " and F_" +
                            std::to_string(o.modulus_));
  }

  std::uint32_t value_;
  std::uint32_t modulus_;
};

inline std::ostream& operator<<(std::ostream& os, const Fp& x) {
  return os << signed_residue(x.value(), x.modulus()) << " (mod " << x.modulus() << ")";
}

/// Binomial coefficient reduced mod p (Lucas).
std::uint32_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p);

}  // namespace cpindex
