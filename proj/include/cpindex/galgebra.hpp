#pragma once

// Finitely presented graded-commutative algebras over F_p.
//
// Degrees are true cohomological degrees throughout (v has degree 2, c_i has
// degree 2i, p_i has degree 4i). Odd generators anticommute and square to zero;
// the sign of a product is fixed by the declaration order of the generators.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cpindex/fp.hpp"

namespace cpindex::galgebra {

enum class Parity { Even, Odd };

struct GeneratorSpec {
  std::string name;
  int degree = 1;
  Parity parity = Parity::Even;

  bool operator==(const GeneratorSpec&) const = default;
};

/// Exponent vector over a fixed generator list. Ordering is lexicographic on
/// the exponents, which for monomials of equal degree is the graded-lex order
/// used for bases and printing.
struct Monomial {
  std::vector<int> exponents;

  bool is_one() const;
  auto operator<=>(const Monomial&) const = default;
};

/// The free graded-commutative algebra on a list of generators over F_p.
class FreeAlgebra {
 public:
  FreeAlgebra(std::uint32_t modulus, std::vector<GeneratorSpec> generators);

  std::uint32_t modulus() const { return p_; }
  const std::vector<GeneratorSpec>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  Monomial one() const { return Monomial{std::vector<int>(gens_.size(), 0)}; }
  Monomial generator(std::size_t i) const;
  int degree(const Monomial& m) const;

  /// True when every generator is even (in degree and parity).
  bool is_evenly_graded() const;

  /// Koszul-signed product of two monomials, or nullopt when an odd generator
  /// would appear twice.
  std::optional<std::pair<Monomial, int>> multiply(const Monomial& a, const Monomial& b) const;

  bool operator==(const FreeAlgebra& o) const { return p_ == o.p_ && gens_ == o.gens_; }

 private:
  std::uint32_t p_;
  std::vector<GeneratorSpec> gens_;
};

using AlgebraPtr = std::shared_ptr<const FreeAlgebra>;

AlgebraPtr make_algebra(std::uint32_t modulus, std::vector<GeneratorSpec> generators);

/// Throws StructuralError unless the two algebras coincide.
void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// Sparse element of a FreeAlgebra. No zero coefficients are stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, std::uint32_t>;

  explicit Polynomial(AlgebraPtr algebra);

  static Polynomial constant(AlgebraPtr algebra, std::int64_t c);
  static Polynomial generator(AlgebraPtr algebra, std::size_t i);
  static Polynomial generator(AlgebraPtr algebra, std::string_view name);
  static Polynomial monomial(AlgebraPtr algebra, Monomial m, std::int64_t c = 1);

  const AlgebraPtr& algebra() const { return alg_; }
  std::uint32_t modulus() const { return alg_->modulus(); }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Fp coefficient(const Monomial& m) const;
  Fp constant_term() const { return coefficient(alg_->one()); }

  bool is_homogeneous() const;
  /// Degree of a nonzero homogeneous polynomial.
  std::optional<int> degree() const;
  int max_degree() const;
  Polynomial homogeneous_part(int d) const;
  /// Nonzero homogeneous components keyed by degree.
  std::map<int, Polynomial> homogeneous_parts() const;
  Polynomial truncated(int max_degree) const;

  void add_term(const Monomial& m, std::int64_t c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(std::int64_t c) const;
  Polynomial scaled(const Fp& c) const;
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& o) const;

  /// Ring homomorphism sending generator i to images[i] (all in `target`).
  Polynomial substitute(const AlgebraPtr& target, std::span<const Polynomial> images) const;

 private:
  AlgebraPtr alg_;
  Terms terms_;
};

/// Graded-commutative product; mismatched generator sets are a StructuralError.
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

/// A homogeneous presentation: generators plus relation polynomials. Squares
/// of odd generators are implicit.
class AlgebraPresentation {
 public:
  AlgebraPresentation(AlgebraPtr algebra, std::vector<Polynomial> relations = {});

  const AlgebraPtr& algebra() const { return alg_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  std::uint32_t modulus() const { return alg_->modulus(); }

 private:
  AlgebraPtr alg_;
  std::vector<Polynomial> relations_;
};

/// All monomials of degree exactly d in the free algebra, ignoring relations.
/// Order: lexicographically descending on the exponent vector.
std::vector<Monomial> degree_basis(const FreeAlgebra& algebra, int d);
std::vector<Monomial> degree_basis(const AlgebraPresentation& pres, int d);

/// dim_{F_p} of the degree-d piece of the quotient algebra.
std::size_t quotient_dimension(const AlgebraPresentation& pres, int d);

/// Decides whether a homogeneous `elt` lies in the ideal generated by `gens`
/// plus the relations of `pres`.
bool ideal_member(std::span<const Polynomial> gens, const Polynomial& elt,
                  const AlgebraPresentation& pres);

// Text format -------------------------------------------------------------
//
//   gen <name> <degree> <even|odd>
//   rel <polynomial>
//
// Polynomials are written as terms `k*g1^e1*g2^e2` joined by `+` (a leading
// `-` on a term is allowed, as is `-` as a separator; `·` is accepted in place
// of `*`). Lines starting with `#` are comments.

std::string render_monomial(const FreeAlgebra& algebra, const Monomial& m);
std::string render_polynomial(const Polynomial& x);
Polynomial parse_polynomial(std::string_view text, const AlgebraPtr& algebra);
Monomial parse_monomial(std::string_view text, const FreeAlgebra& algebra);

std::string render_presentation(const AlgebraPresentation& pres);
AlgebraPresentation parse_presentation(std::string_view text, std::uint32_t modulus);

}  // namespace cpindex::galgebra
