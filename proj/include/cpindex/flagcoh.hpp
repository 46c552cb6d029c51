#pragma once

// Cohomology of the partial flag manifolds
//   F^U_{j,r}  = U(pj) / U(j)^r x U((p-r)j)
//   F^SO_{j,r} = SO(pj) / SO(j)^r x SO((p-r)j)
// and independent Poincare-series oracles.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cpindex/galgebra.hpp"

namespace cpindex::flagcoh {

enum class Field { Complex, Real };

std::string to_string(Field f);
Field parse_field(std::string_view s);

/// Truncated series sum_d coefficients[d] t^d, optionally compared with an oracle.
struct SeriesReport {
  std::string label;
  std::vector<std::int64_t> coefficients;  // degrees 0..depth
  std::optional<std::vector<std::int64_t>> oracle;
  std::string oracle_label;

  int depth() const { return static_cast<int>(coefficients.size()) - 1; }
  /// True when an oracle is attached and agrees coefficient-wise.
  bool matches() const { return oracle && *oracle == coefficients; }
  bool odd_degrees_vanish() const;
};

/// Generators c{i}_{l} (l = 1..r, complement l = 0) or p{i}_{l} and e{d}_{l};
/// relations are the components of the pulled-back total class of the ambient
/// bundle, plus Euler-class relations in the real case.
galgebra::AlgebraPresentation flag_presentation(Field field, int j, int r, std::uint32_t p);

int default_depth(int j, std::uint32_t p);

SeriesReport poincare_series(const galgebra::AlgebraPresentation& pres, int depth);

/// Series of the fibre of B(G(j)^r x G((p-r)j)) -> BG(pj), computed as the
/// quotient of the two classifying-space series. Throws StructuralError when
/// the quotient has a negative coefficient.
SeriesReport fibration_series_oracle(Field field, int j, int r, std::uint32_t p, int depth);

/// The q-multinomial [sum(parts); parts]_q at q = t^2, built by the q-Pascal rule.
SeriesReport gaussian_multinomial(const std::vector<int>& parts, int depth);

}  // namespace cpindex::flagcoh
