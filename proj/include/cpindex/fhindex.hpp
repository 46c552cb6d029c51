#pragma once

// Fadell-Husseini index of the cyclic action on F_n = G(pn)/G(n)^p, G = U or SO,
// computed as an ideal in H*(BC_p) = F_p[u,v]/(u^2) by membership tests in the
// cohomology of the wreath power.

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cpindex/flagcoh.hpp"
#include "cpindex/wreath.hpp"

namespace cpindex::fhindex {

using flagcoh::Field;
using wreath::WreathClass;

/// (v^l) or (u v^{l-1}, v^l).
struct IndexResult {
  enum class Shape { VOnly, UAndV };
  Shape shape = Shape::VOnly;
  int l = 1;

  static IndexResult v_only(int l) { return {Shape::VOnly, l}; }
  static IndexResult u_and_v(int l) { return {Shape::UAndV, l}; }

  /// Least j with v^j in the ideal.
  int v_exponent() const { return l; }
  /// Least j with u v^j in the ideal.
  int u_exponent() const { return shape == Shape::UAndV ? l - 1 : l; }
  /// Ideal containment: *this contains `other`.
  bool contains(const IndexResult& other) const;

  std::string render() const;
  bool operator==(const IndexResult&) const = default;
};

std::string to_string(IndexResult::Shape s);
IndexResult::Shape parse_shape(std::string_view s);

/// n = p^a q with p not dividing q.
struct PrimeSplit {
  int a = 0;
  int q = 1;
};
PrimeSplit split_prime_power(std::uint32_t p, int n);
long long ipow(long long base, int e);

struct KernelGenerators {
  wreath::AlgebraPresentation base;
  std::vector<std::string> names;
  std::vector<WreathClass> classes;
};

/// Complex: c_1..c_{pn} of gamma^n_U wr C_p. Real: the Pontrjagin classes of
/// gamma^n_SO wr C_p in degrees up to 2pn, plus P(e_n) for even n.
KernelGenerators kernel_generators(std::uint32_t p, int n, Field field);

/// Row-reduced degree pieces of the ideal generated by homogeneous wreath classes.
class WreathIdeal {
 public:
  WreathIdeal(wreath::AlgebraPresentation base, std::vector<WreathClass> generators);

  /// Membership of a homogeneous class (zero is always a member).
  bool contains(const WreathClass& x);
  std::size_t piece_dimension(int d);  // dimension of the degree-d part of the ring
  std::size_t piece_rank(int d);       // dimension of the degree-d part of the ideal

 private:
  struct Piece;
  Piece& piece(int d);

  wreath::AlgebraPresentation base_;
  std::vector<WreathClass> gens_;
  std::map<int, std::shared_ptr<Piece>> pieces_;
};

struct IndexComputation {
  std::uint32_t p = 3;
  int n = 1;
  Field field = Field::Complex;
  PrimeSplit split;
  IndexResult result;
  std::size_t generators_used = 0;
  int degrees_scanned = 0;
  double elapsed_seconds = 0;
};

int default_max_l(std::uint32_t p, int n);

/// Throws BoundExceeded if neither u v^{l-1} nor v^l enters the ideal for l <= max_l,
/// and StructuralError if the two exponents are not of the form (l, l) or (l+1, l).
IndexComputation compute_index(std::uint32_t p, int n, Field field, std::optional<int> max_l = {});

IndexResult closed_form_index(std::uint32_t p, int n, Field field);

struct RelationCheck {
  int k = 0;
  std::string family;     // "i", "ii", "iii", "iv"
  std::string predicted;  // the predicted relation with lambda = alpha = 1
  bool holds = false;
  int lambda = 0;              // unit with g_k = lambda * R mod the previous generators
  std::optional<int> alpha;    // family iii: the unit coefficient of the v-power
  std::optional<bool> alpha_zero_excluded;  // family iii: R with alpha = 0 fails
  int solutions = 0;           // number of (lambda, alpha) pairs that work
};

struct VerificationReport {
  std::uint32_t p = 3;
  int n = 1;
  Field field = Field::Complex;
  PrimeSplit split;
  std::vector<RelationCheck> checks;
  bool u_relation = false;      // u v^{p^{a+1}-1} in the ideal of the checked generators
  bool v_relation = false;      // v^{p^{a+1}} likewise
  bool alpha0_relation = false;  // alpha_0 v^{p^{a+1}-1} - z_{2(p^{a+1}-1)} likewise
  double elapsed_seconds = 0;

  bool passed() const;
};

/// Requires p | n. Reduces each kernel generator modulo the earlier ones and
/// matches it against the predicted relation family.
VerificationReport verify_reduction_relations(std::uint32_t p, int n, Field field);

IndexResult sphere_index(std::uint32_t p, int r);

struct ShadowBound {
  Field field = Field::Complex;
  std::uint32_t p = 3;
  int n = 1;
  PrimeSplit split;
  int max_r = 0;
  std::string justification;
};

ShadowBound shadow_bound(std::uint32_t p, int n, Field field);

/// True when the sphere index of r copies of the reduced regular representation
/// is not contained in the flag index, so no equivariant map F_n -> S(rho^r) exists.
bool containment_admits(std::uint32_t p, int n, Field field, int r);

}  // namespace cpindex::fhindex
