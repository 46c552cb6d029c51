#pragma once

// Cohomology of the p-fold wreath power X^p_{hC_p} for an evenly graded,
// relation-free base algebra H*(X).
//
// Normal form: a class is a sum of diagonal terms P(m) u^eps v^j and orbit sums
// O(t) = sum over the p rotations of a non-diagonal tensor monomial t. Orbit
// sums are killed by u and v; a diagonal tuple summed over its orbit is p*t = 0.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cpindex/galgebra.hpp"

namespace cpindex::wreath {

using galgebra::AlgebraPresentation;
using galgebra::AlgebraPtr;
using galgebra::Monomial;
using galgebra::Polynomial;

/// An ordered p-tuple of base monomials.
struct TensorMonomial {
  std::vector<Monomial> slots;

  bool is_diagonal() const;
  /// The lexicographically smallest cyclic rotation.
  TensorMonomial canonical() const;
  TensorMonomial rotated(std::size_t shift) const;
  auto operator<=>(const TensorMonomial&) const = default;
};

/// P(m) u^eps v^j.
struct DiagKey {
  Monomial m;
  int eps = 0;
  int j = 0;
  auto operator<=>(const DiagKey&) const = default;
};

class WreathClass {
 public:
  using DiagTerms = std::map<DiagKey, std::uint32_t>;
  using FreeTerms = std::map<TensorMonomial, std::uint32_t>;  // keys are canonical

  /// The zero class. Throws DomainError unless `base` is evenly graded.
  explicit WreathClass(AlgebraPtr base);

  static WreathClass constant(AlgebraPtr base, std::int64_t c);
  static WreathClass diagonal(AlgebraPtr base, DiagKey key, std::int64_t c = 1);
  static WreathClass u(AlgebraPtr base);
  static WreathClass v_power(AlgebraPtr base, int j);
  /// Orbit sum of t (any rotation); zero if t is diagonal.
  static WreathClass orbit(AlgebraPtr base, const TensorMonomial& t, std::int64_t c = 1);

  const AlgebraPtr& base() const { return base_; }
  std::uint32_t modulus() const { return base_->modulus(); }
  const DiagTerms& diag() const { return diag_; }
  const FreeTerms& free() const { return free_; }
  bool is_zero() const { return diag_.empty() && free_.empty(); }

  int degree(const DiagKey& k) const;
  int degree(const TensorMonomial& t) const;
  int max_degree() const;
  WreathClass homogeneous_part(int d) const;
  bool is_homogeneous() const;

  void add_diag(const DiagKey& k, std::int64_t c);
  void add_free(const TensorMonomial& t, std::int64_t c);

  WreathClass operator+(const WreathClass& o) const;
  WreathClass operator-(const WreathClass& o) const;
  WreathClass operator-() const;
  WreathClass operator*(const WreathClass& o) const;
  WreathClass scaled(std::int64_t c) const;
  WreathClass pow(unsigned e) const;

  bool operator==(const WreathClass& o) const;

 private:
  void check(const WreathClass& o) const;

  AlgebraPtr base_;
  DiagTerms diag_;
  FreeTerms free_;
};

/// P(x) = x^{(x)p}, decomposed into diagonal and orbit parts.
WreathClass p_power(const Polynomial& x);

/// I(coeff * t) = coeff * (sum of the p rotations of t); zero on diagonal tuples.
WreathClass transfer_i(const AlgebraPtr& base, const TensorMonomial& t, std::int64_t coeff = 1);

/// z(phi) = P(phi) - sum of P over the homogeneous parts of phi.
WreathClass z_class(const Polynomial& phi);

WreathClass wreath_mul(const WreathClass& a, const WreathClass& b);

/// Basis of the degree-d piece: diagonal keys first, then canonical orbit keys.
struct WreathBasis {
  std::vector<DiagKey> diag;
  std::vector<TensorMonomial> free;
  std::size_t size() const { return diag.size() + free.size(); }
};

/// Requires a relation-free, evenly graded base.
WreathBasis wreath_degree_basis(const AlgebraPresentation& base, int d);

/// Total wreath class sum_r P(t_{(r)}) (1 + s v^{p-1})^{n - r} + z(t), where
/// t_{(r)} is the part of `total` in degree step*r and s = regular_sign.
WreathClass wreath_total_class(const Polynomial& total, int n, int step, int regular_sign = 1);

/// c_k(gamma^n_U wr C_p) for 0 <= k, 2k <= max_degree. Index k of the result is c_k.
std::vector<WreathClass> wreath_chern(int n, std::uint32_t p, int max_degree, int regular_sign = 1);
std::vector<WreathClass> wreath_chern(const Polynomial& total, int n, int max_degree,
                                      int regular_sign = 1);

/// p_i(gamma^n_SO wr C_p) for 0 <= i, 4i <= max_degree. Index i of the result is p_i.
std::vector<WreathClass> wreath_pontrjagin(int n, std::uint32_t p, int max_degree,
                                           int regular_sign = 1);
std::vector<WreathClass> wreath_pontrjagin(const Polynomial& total, int n, int max_degree,
                                           int regular_sign = 1);

/// e(gamma^n_SO wr C_p) = P(e_n), n even.
WreathClass wreath_euler(int n, std::uint32_t p);

/// Restriction along a point of the base: every base class of positive degree goes to 0.
WreathClass restrict_to_point(const WreathClass& x);

// Text: `3*P(c1^2)*u*v^2 + O(c1|1|c2)`; the unit diagonal class prints as `1`.
std::string render_wreath(const WreathClass& x);
WreathClass parse_wreath(std::string_view text, const AlgebraPtr& base);

}  // namespace cpindex::wreath
