#include "cpindex/flagcoh.hpp"

#include "cpindex/errors.hpp"

namespace cpindex::flagcoh {

using galgebra::AlgebraPresentation;
using galgebra::GeneratorSpec;
using galgebra::Parity;
using galgebra::Polynomial;
using Series = std::vector<std::int64_t>;

std::string to_string(Field f) { return f == Field::Complex ? "complex" : "real"; }

Field parse_field(std::string_view s) {
  if (s == "complex" || s == "C") return Field::Complex;
  if (s == "real" || s == "R") return Field::Real;
  throw ParseError("field must be 'complex' or 'real', got '" + std::string(s) + "'");
}

bool SeriesReport::odd_degrees_vanish() const {
  for (std::size_t d = 1; d < coefficients.size(); d += 2)
    if (coefficients[d] != 0) return false;
  return true;
}

namespace {

void check_domain(Field field, int j, int r, std::uint32_t p) {
  require_odd_prime(p);
  if (j < 1) throw DomainError("j must be positive");
  if (r < 1 || r > static_cast<int>(p))
    throw DomainError("need 1 <= r <= p, got r=" + std::to_string(r));
  if (field == Field::Real && j == 1) throw DomainError("real flags need j > 1");
}

std::string gen_name(const std::string& stem, int i, int l) {
  return stem + std::to_string(i) + "_" + std::to_string(l);
}

// One block of the classifying space: generators and the total class in terms
// of them (with p_{d/2} read as e_d^2 for even d).
struct Block {
  int rank;
  int label;
};

void add_block_generators(Field field, const Block& b, std::vector<GeneratorSpec>& gens) {
  if (field == Field::Complex) {
    for (int i = 1; i <= b.rank; ++i) gens.push_back({gen_name("c", i, b.label), 2 * i, Parity::Even});
    return;
  }
  for (int i = 1; 2 * i < b.rank; ++i) gens.push_back({gen_name("p", i, b.label), 4 * i, Parity::Even});
  if (b.rank % 2 == 0 && b.rank > 0) gens.push_back({gen_name("e", b.rank, b.label), b.rank, Parity::Even});
}

Polynomial block_total(Field field, const Block& b, const galgebra::AlgebraPtr& alg) {
  Polynomial t = Polynomial::constant(alg, 1);
  if (field == Field::Complex) {
    for (int i = 1; i <= b.rank; ++i) t = t + Polynomial::generator(alg, gen_name("c", i, b.label));
    return t;
  }
  for (int i = 1; 2 * i < b.rank; ++i) t = t + Polynomial::generator(alg, gen_name("p", i, b.label));
  if (b.rank % 2 == 0 && b.rank > 0)
    t = t + Polynomial::generator(alg, gen_name("e", b.rank, b.label)).pow(2);
  return t;
}

std::vector<Block> blocks(int j, int r, std::uint32_t p) {
  std::vector<Block> out;
  for (int l = 1; l <= r; ++l) out.push_back({j, l});
  const int rest = (static_cast<int>(p) - r) * j;
  if (rest > 0) out.push_back({rest, 0});
  return out;
}

}  // namespace

int default_depth(int j, std::uint32_t p) { return 2 * j * static_cast<int>(p); }

AlgebraPresentation flag_presentation(Field field, int j, int r, std::uint32_t p) {
  check_domain(field, j, r, p);
  const auto bs = blocks(j, r, p);
  std::vector<GeneratorSpec> gens;
  for (const auto& b : bs) add_block_generators(field, b, gens);
  auto alg = galgebra::make_algebra(p, gens);

  Polynomial total = Polynomial::constant(alg, 1);
  for (const auto& b : bs) total = total * block_total(field, b, alg);

  const int N = j * static_cast<int>(p);
  std::vector<Polynomial> rels;
  if (field == Field::Complex) {
    for (int i = 1; i <= N; ++i) rels.push_back(total.homogeneous_part(2 * i));
    return AlgebraPresentation(alg, std::move(rels));
  }
  for (int i = 1; 2 * i <= N; ++i) rels.push_back(total.homogeneous_part(4 * i));
  if (N % 2 == 0) {
    // pj even forces j even, so every block carries an Euler class and the
    // ambient one pulls back to their product.
    Polynomial euler = Polynomial::constant(alg, 1);
    for (const auto& b : bs) euler = euler * Polynomial::generator(alg, gen_name("e", b.rank, b.label));
    rels.push_back(euler);
  }
  return AlgebraPresentation(alg, std::move(rels));
}

SeriesReport poincare_series(const AlgebraPresentation& pres, int depth) {
  SeriesReport out;
  out.label = "presentation";
  for (int d = 0; d <= depth; ++d)
    out.coefficients.push_back(static_cast<std::int64_t>(galgebra::quotient_dimension(pres, d)));
  return out;
}

namespace {

Series multiply(const Series& a, const Series& b, int depth) {
  Series out(static_cast<std::size_t>(depth) + 1, 0);
  for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= depth; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t k = 0; k < b.size() && static_cast<int>(i + k) <= depth; ++k) out[i + k] += a[i] * b[k];
  }
  return out;
}

// 1 / (1 - t^d) truncated.
Series geometric(int d, int depth) {
  Series out(static_cast<std::size_t>(depth) + 1, 0);
  for (int k = 0; k <= depth; k += d) out[static_cast<std::size_t>(k)] = 1;
  return out;
}

// 1 - t^d truncated.
Series binomial_factor(int d, int depth) {
  Series out(static_cast<std::size_t>(depth) + 1, 0);
  out[0] = 1;
  if (d <= depth) out[static_cast<std::size_t>(d)] -= 1;
  return out;
}

// Generator degrees of H*(BU(n)) or H*(BSO(n)).
std::vector<int> classifying_degrees(Field field, int n) {
  std::vector<int> degs;
  if (field == Field::Complex) {
    for (int i = 1; i <= n; ++i) degs.push_back(2 * i);
  } else {
    for (int i = 1; 2 * i < n; ++i) degs.push_back(4 * i);
    if (n % 2 == 0 && n > 0) degs.push_back(n);
  }
  return degs;
}

}  // namespace

SeriesReport fibration_series_oracle(Field field, int j, int r, std::uint32_t p, int depth) {
  check_domain(field, j, r, p);
  Series s(static_cast<std::size_t>(depth) + 1, 0);
  s[0] = 1;
  for (const auto& b : blocks(j, r, p))
    for (int d : classifying_degrees(field, b.rank)) s = multiply(s, geometric(d, depth), depth);
  for (int d : classifying_degrees(field, j * static_cast<int>(p))) s = multiply(s, binomial_factor(d, depth), depth);
  for (std::size_t d = 0; d < s.size(); ++d)
    if (s[d] < 0)
      throw StructuralError("fibration series quotient has coefficient " + std::to_string(s[d]) +
                            " in degree " + std::to_string(d) + "; the quotient is not a Poincare series");
  SeriesReport out;
  out.label = "fibration";
  out.coefficients = std::move(s);
  return out;
}

SeriesReport gaussian_multinomial(const std::vector<int>& parts, int depth) {
  // [n choose k]_q via [n;k] = [n-1;k-1] + q^k [n-1;k], then the multinomial as a
  // product of binomials. Polynomials are in q; q = t^2 at the end.
  using QPoly = std::vector<std::int64_t>;
  auto add_shifted = [](QPoly& acc, const QPoly& x, int shift) {
    if (acc.size() < x.size() + static_cast<std::size_t>(shift)) acc.resize(x.size() + static_cast<std::size_t>(shift), 0);
    for (std::size_t i = 0; i < x.size(); ++i) acc[i + static_cast<std::size_t>(shift)] += x[i];
  };
  int total = 0;
  for (int part : parts) {
    if (part < 0) throw DomainError("parts must be nonnegative");
    total += part;
  }
  // rows[m][k] = [m choose k]_q.
  std::vector<std::vector<QPoly>> rows{{QPoly{1}}};
  for (int m = 1; m <= total; ++m) {
    std::vector<QPoly> next(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
      QPoly acc;
      if (k >= 1) add_shifted(acc, rows.back()[static_cast<std::size_t>(k - 1)], 0);
      if (k <= m - 1) add_shifted(acc, rows.back()[static_cast<std::size_t>(k)], k);
      next[static_cast<std::size_t>(k)] = acc;
    }
    rows.push_back(std::move(next));
  }
  QPoly q{1};
  int remaining = total;
  for (int part : parts) {
    const QPoly& b = rows[static_cast<std::size_t>(remaining)][static_cast<std::size_t>(part)];
    QPoly prod(q.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t k = 0; k < b.size(); ++k) prod[i + k] += q[i] * b[k];
    q = std::move(prod);
    remaining -= part;
  }
  SeriesReport out;
  out.label = "gaussian";
  out.coefficients.assign(static_cast<std::size_t>(depth) + 1, 0);
  for (std::size_t i = 0; i < q.size() && static_cast<int>(2 * i) <= depth; ++i) out.coefficients[2 * i] = q[i];
  return out;
}

}  // namespace cpindex::flagcoh
