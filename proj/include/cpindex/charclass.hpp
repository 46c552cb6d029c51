#pragma once

// Classifying-space cohomology, total characteristic classes, and
// presentations of complex and oriented real Grassmannians.

#include <cstdint>
#include <string>

#include "cpindex/galgebra.hpp"

namespace cpindex::charclass {

using galgebra::AlgebraPresentation;
using galgebra::AlgebraPtr;
using galgebra::Polynomial;

enum class Family { U, SO, Cp };

struct GroupFamily {
  Family tag = Family::U;
  int rank = 1;  // ignored for Cp

  static GroupFamily unitary(int n) { return {Family::U, n}; }
  static GroupFamily special_orthogonal(int n) { return {Family::SO, n}; }
  static GroupFamily cyclic() { return {Family::Cp, 1}; }
};

std::string describe(const GroupFamily& g);

/// H*(BU(n)) = F_p[c1..cn], H*(BSO(n)) = F_p[p1.., (e_n)], H*(BC_p) = F_p[u,v]/(u^2).
AlgebraPresentation classifying_presentation(const GroupFamily& g, std::uint32_t p);

/// 1 + c1 + ... + cn, or 1 + p1 + ... with the top class e_n^2 when n is even.
Polynomial total_class(const GroupFamily& g, const AlgebraPtr& algebra);
Polynomial total_class(const GroupFamily& g, std::uint32_t p);

/// The generator e_n of H*(BSO(n)), n even.
Polynomial euler_class(const GroupFamily& g, const AlgebraPtr& algebra);
Polynomial euler_class(const GroupFamily& g, std::uint32_t p);

/// The series s with t*s = 1 through degree max_degree. t must have constant term 1.
Polynomial inverse_total_class(const Polynomial& t, int max_degree);

/// H*(Gr_k(C^n)): generators c1..ck, relations the components of (1+c1+...+ck)^{-1}
/// in degrees 2(n-k+1) .. 2n.
AlgebraPresentation grassmann_presentation(int n, int k, std::uint32_t p);

/// H*(SO(n)/SO(j)xSO(n-j)) for 1 < j < n.
AlgebraPresentation oriented_grassmann_presentation(int n, int j, std::uint32_t p);

}  // namespace cpindex::charclass
