#include "cpindex/selftest.hpp"

#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "cpindex/charclass.hpp"
#include "cpindex/errors.hpp"
#include "cpindex/fhindex.hpp"
#include "cpindex/flagcoh.hpp"
#include "cpindex/wreath.hpp"

namespace cpindex::selftest {

using fhindex::IndexResult;
using flagcoh::Field;
using galgebra::AlgebraPresentation;
using galgebra::AlgebraPtr;
using galgebra::Monomial;
using galgebra::Polynomial;
using wreath::WreathClass;

namespace {

struct Failures {
  std::vector<std::string> items;
  int checked = 0;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) items.push_back(what);
  }

  Outcome outcome(const std::string& summary) const {
    if (items.empty()) return {true, summary};
    std::ostringstream os;
    os << items.size() << "/" << checked << " failed: ";
    for (std::size_t i = 0; i < items.size(); ++i) os << (i ? "; " : "") << items[i];
    return {false, os.str()};
  }
};

std::string point(std::uint32_t p, int n, Field f) {
  return "(" + std::to_string(p) + "," + std::to_string(n) + "," + flagcoh::to_string(f) + ")";
}

Outcome closed_form_cases(Field field, const std::vector<std::tuple<std::uint32_t, int, IndexResult>>& cases) {
  Failures f;
  std::ostringstream summary;
  for (const auto& [p, n, expected] : cases) {
    const auto c = fhindex::compute_index(p, n, field);
    f.expect(c.result == expected,
             point(p, n, field) + " gave " + c.result.render() + ", expected " + expected.render());
    summary << point(p, n, field) << " " << c.result.render() << " ";
  }
  return f.outcome(summary.str());
}

}  // namespace

Outcome closed_form_complex() {
  using R = IndexResult;
  return closed_form_cases(Field::Complex, {{3, 1, R::u_and_v(3)},
                                            {3, 2, R::u_and_v(3)},
                                            {3, 4, R::u_and_v(3)},
                                            {5, 1, R::u_and_v(5)},
                                            {5, 2, R::u_and_v(5)},
                                            {3, 3, R::u_and_v(9)}});
}

Outcome closed_form_real() {
  using R = IndexResult;
  return closed_form_cases(Field::Real, {{3, 1, R::v_only(2)},
                                         {5, 1, R::v_only(4)},
                                         {3, 2, R::u_and_v(3)},
                                         {3, 3, R::v_only(8)},
                                         {3, 5, R::u_and_v(3)}});
}

Outcome relation_shapes() {
  Failures f;
  std::ostringstream summary;
  for (Field field : {Field::Complex, Field::Real}) {
    const auto rep = fhindex::verify_reduction_relations(3, 3, field);
    const std::string tag = point(3, 3, field);
    std::set<std::string> families;
    for (const auto& c : rep.checks) {
      families.insert(c.family);
      f.expect(c.holds, tag + " k=" + std::to_string(c.k) + " family " + c.family + " fails");
      f.expect(c.lambda >= 1 && c.lambda < 3, tag + " k=" + std::to_string(c.k) + " lambda not a unit");
      if (c.alpha) {
        f.expect(*c.alpha >= 1 && *c.alpha < 3, tag + " k=" + std::to_string(c.k) + " alpha not a unit");
        f.expect(c.alpha_zero_excluded.value_or(false),
                 tag + " k=" + std::to_string(c.k) + " relation also holds with alpha = 0");
      }
    }
    if (field == Field::Complex) {
      f.expect(rep.checks.size() == 8, tag + " expected 8 generators");
      f.expect(families == std::set<std::string>{"i", "ii", "iii", "iv"}, tag + " not all four families seen");
    }
    f.expect(rep.u_relation, tag + " u relation fails");
    f.expect(rep.v_relation, tag + " v relation fails");
    f.expect(rep.alpha0_relation, tag + " alpha_0 relation fails");
    summary << tag << " families";
    for (const auto& c : rep.checks) summary << " " << c.family;
    summary << "; ";
  }
  return f.outcome(summary.str());
}

Outcome flag_cohomology_oracles() {
  struct Case {
    Field field;
    int j, r, depth;
  };
  const std::vector<Case> cases{{Field::Complex, 1, 3, 6},
                                {Field::Complex, 1, 2, 6},
                                {Field::Complex, 2, 3, 12},
                                {Field::Real, 3, 3, 16},
                                {Field::Real, 2, 3, 12}};
  constexpr std::uint32_t p = 3;
  Failures f;
  for (const auto& c : cases) {
    const std::string tag = std::string(c.field == Field::Complex ? "C" : "R") + "(" + std::to_string(c.j) + "," +
                            std::to_string(c.r) + ",3)";
    const auto series = flagcoh::poincare_series(flagcoh::flag_presentation(c.field, c.j, c.r, p), c.depth);
    f.expect(series.odd_degrees_vanish(), tag + " has odd-degree classes");
    try {
      const auto oracle = flagcoh::fibration_series_oracle(c.field, c.j, c.r, p, c.depth);
      f.expect(oracle.coefficients == series.coefficients, tag + " differs from the fibration series");
    } catch (const StructuralError& e) {
      f.expect(false, tag + ": " + e.what());
    }
    if (c.field == Field::Complex) {
      std::vector<int> parts(static_cast<std::size_t>(c.r), c.j);
      if (c.r < static_cast<int>(p)) parts.push_back((static_cast<int>(p) - c.r) * c.j);
      f.expect(flagcoh::gaussian_multinomial(parts, c.depth).coefficients == series.coefficients,
               tag + " differs from the q-multinomial");
    }
  }
  return f.outcome("5 flag manifolds agree with their oracles");
}

namespace {

// Splitting: the wreath total class of a Whitney sum of blocks against the
// product of the blocks' wreath total classes.
void whitney(Failures& f, std::uint32_t p, const std::vector<int>& ranks) {
  std::vector<galgebra::GeneratorSpec> gens;
  for (std::size_t b = 0; b < ranks.size(); ++b)
    for (int i = 1; i <= ranks[b]; ++i)
      gens.push_back({"c" + std::to_string(i) + "_" + std::to_string(b), 2 * i, galgebra::Parity::Even});
  const auto alg = galgebra::make_algebra(p, gens);
  Polynomial sum_total = Polynomial::constant(alg, 1);
  WreathClass product = WreathClass::constant(alg, 1);
  int n = 0;
  for (std::size_t b = 0; b < ranks.size(); ++b) {
    Polynomial block = Polynomial::constant(alg, 1);
    for (int i = 1; i <= ranks[b]; ++i)
      block = block + Polynomial::generator(alg, "c" + std::to_string(i) + "_" + std::to_string(b));
    sum_total = sum_total * block;
    product = product * wreath::wreath_total_class(block, ranks[b], 2);
    n += ranks[b];
  }
  std::string tag = "Whitney p=" + std::to_string(p) + " ranks";
  for (int r : ranks) tag += " " + std::to_string(r);
  f.expect(wreath::wreath_total_class(sum_total, n, 2) == product, tag);
}

void compositions(int n, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    if (prefix.size() > 1) out.push_back(prefix);
    return;
  }
  for (int k = 1; k <= n; ++k) {
    prefix.push_back(k);
    compositions(n - k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Outcome wreath_class_properties() {
  Failures f;

  for (std::uint32_t p : {3u, 5u})
    for (int n = 2; n <= 3; ++n) {
      std::vector<std::vector<int>> splits;
      std::vector<int> prefix;
      compositions(n, prefix, splits);
      for (const auto& ranks : splits) whitney(f, p, ranks);
    }

  // Complexification: p_i(xi) = (-1)^i c_{2i}(xi (x) C), c(xi (x) C) = sum (-1)^r p_r.
  constexpr std::uint32_t p3 = 3;
  for (int n = 1; n <= 3; ++n) {
    const auto g = charclass::GroupFamily::special_orthogonal(n);
    const auto pres = charclass::classifying_presentation(g, p3);
    const auto total = charclass::total_class(g, pres.algebra());
    Polynomial complexified(pres.algebra());
    for (const auto& [deg, part] : total.homogeneous_parts()) complexified = complexified + part.scaled((deg / 4) % 2 ? -1 : 1);
    const int top = 2 * static_cast<int>(p3) * n;
    const auto pont = wreath::wreath_pontrjagin(total, n, top);
    const auto chern = wreath::wreath_chern(complexified, n, top);
    for (std::size_t i = 0; i < pont.size(); ++i)
      f.expect(pont[i] == chern[2 * i].scaled(i % 2 ? -1 : 1),
               "complexification n=" + std::to_string(n) + " p_" + std::to_string(i));
  }

  for (std::uint32_t p : {3u, 5u})
    for (int n = 1; n <= 3; ++n) {
      const auto g = charclass::GroupFamily::unitary(n);
      const auto alg = charclass::classifying_presentation(g, p).algebra();
      const auto restricted = wreath::restrict_to_point(wreath::wreath_total_class(charclass::total_class(g, alg), n, 2));
      const auto expected = (WreathClass::constant(alg, 1) + WreathClass::v_power(alg, static_cast<int>(p) - 1))
                                .pow(static_cast<unsigned>(n));
      f.expect(restricted == expected, "point restriction p=" + std::to_string(p) + " n=" + std::to_string(n));
    }

  for (std::uint32_t p : {3u, 5u})
    for (int m = 1; m <= 2; ++m) {
      const auto g = charclass::GroupFamily::special_orthogonal(2 * m);
      const auto alg = charclass::classifying_presentation(g, p).algebra();
      const auto e = charclass::euler_class(g, alg);
      const Monomial em = e.terms().begin()->first;
      const auto euler = wreath::wreath_euler(2 * m, p);
      const std::string tag = "Euler p=" + std::to_string(p) + " n=" + std::to_string(2 * m);
      f.expect(euler == WreathClass::diagonal(alg, {em, 0, 0}), tag + " is not P(e)");
      const auto pont = wreath::wreath_pontrjagin(charclass::total_class(g, alg), 2 * m, 4 * m * static_cast<int>(p));
      f.expect(euler.pow(2) == pont.back(), tag + " squared is not the top Pontrjagin class");
    }

  return f.outcome(std::to_string(f.checked) + " identities hold");
}

namespace {

class RandomClasses {
 public:
  RandomClasses(AlgebraPresentation base, std::mt19937& rng) : base_(std::move(base)), rng_(rng) {}

  const AlgebraPtr& algebra() const { return base_.algebra(); }

  WreathClass element(int max_degree) {
    WreathClass x(algebra());
    const int terms = 1 + uniform(0, 2);
    for (int t = 0; t < terms; ++t) {
      const auto& b = basis(uniform(0, max_degree));
      if (b.size() == 0) continue;
      const auto i = static_cast<std::size_t>(uniform(0, static_cast<int>(b.size()) - 1));
      const int c = uniform(1, static_cast<int>(modulus()) - 1);
      if (i < b.diag.size()) x.add_diag(b.diag[i], c);
      else x.add_free(b.free[i - b.diag.size()], c);
    }
    return x;
  }

  WreathClass orbit(int max_degree) {
    for (;;) {
      const auto& b = basis(uniform(1, max_degree));
      if (b.free.empty()) continue;
      return WreathClass::orbit(algebra(), b.free[static_cast<std::size_t>(uniform(0, static_cast<int>(b.free.size()) - 1))]);
    }
  }

  Polynomial homogeneous(int max_degree) {
    for (;;) {
      const auto mons = galgebra::degree_basis(*algebra(), 2 * uniform(0, max_degree / 2));
      if (mons.empty()) continue;
      Polynomial x(algebra());
      for (const auto& m : mons) x.add_term(m, uniform(0, static_cast<int>(modulus()) - 1));
      return x;
    }
  }

  Polynomial monomial(int max_degree) {
    const auto mons = galgebra::degree_basis(*algebra(), 2 * uniform(0, max_degree / 2));
    if (mons.empty()) return Polynomial::constant(algebra(), 1);
    return Polynomial::monomial(algebra(), mons[static_cast<std::size_t>(uniform(0, static_cast<int>(mons.size()) - 1))]);
  }

 private:
  std::uint32_t modulus() const { return base_.modulus(); }
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  const wreath::WreathBasis& basis(int d) {
    auto it = cache_.find(d);
    if (it == cache_.end()) it = cache_.emplace(d, wreath::wreath_degree_basis(base_, d)).first;
    return it->second;
  }

  AlgebraPresentation base_;
  std::mt19937& rng_;
  std::map<int, wreath::WreathBasis> cache_;
};

}  // namespace

Outcome ring_axioms(unsigned seed, int triples) {
  Failures f;
  std::mt19937 rng(seed);
  constexpr std::uint32_t p = 3;
  constexpr int max_degree = 10;
  for (const auto& g : {charclass::GroupFamily::unitary(2), charclass::GroupFamily::special_orthogonal(3)}) {
    RandomClasses gen(charclass::classifying_presentation(g, p), rng);
    const auto alg = gen.algebra();
    const auto u = WreathClass::u(alg);
    const auto v = WreathClass::v_power(alg, 1);
    const std::string tag = charclass::describe(g);
    int bad = 0;
    for (int t = 0; t < triples && bad < 5; ++t) {
      const auto a = gen.element(max_degree);
      const auto b = gen.element(max_degree);
      const auto c = gen.element(max_degree);
      const std::string at = tag + " triple " + std::to_string(t);
      const std::size_t before = f.items.size();
      f.expect((a * b) * c == a * (b * c), at + " associativity");
      f.expect(a * b == b * a, at + " commutativity");
      f.expect(a * (b + c) == a * b + a * c, at + " distributivity");

      const auto orbit = gen.orbit(max_degree);
      f.expect((orbit * u).is_zero() && (orbit * v).is_zero(), at + " I*u or I*v nonzero");

      const auto m1 = gen.monomial(max_degree);
      const auto m2 = gen.monomial(max_degree);
      f.expect(wreath::p_power(m1 * m2) == wreath::p_power(m1) * wreath::p_power(m2), at + " P not multiplicative");

      const auto x = gen.homogeneous(max_degree);
      const auto y = gen.homogeneous(max_degree);
      f.expect(wreath::z_class(x).is_zero(), at + " z of a homogeneous class is nonzero");
      f.expect((wreath::p_power(x + y) - wreath::p_power(x) - wreath::p_power(y)).diag().empty(),
               at + " P(x+y)-P(x)-P(y) has a diagonal part");
      if (f.items.size() != before) ++bad;
    }
  }
  return f.outcome(std::to_string(triples) + " triples each over BU(2) and BSO(3), " + std::to_string(f.checked) +
                   " checks");
}

Outcome applied_bounds() {
  Failures f;
  int points = 0;
  for (std::uint32_t p : {3u, 5u})
    for (int n = 1; n <= 5; ++n)
      for (Field field : {Field::Complex, Field::Real}) {
        ++points;
        const std::string tag = point(p, n, field);
        const auto split = fhindex::split_prime_power(p, n);
        const long long sharp = 2 * (fhindex::ipow(p, split.a + 1) - 1) / (p - 1);
        const long long expected = field == Field::Complex ? sharp : sharp - 1;
        const auto b = fhindex::shadow_bound(p, n, field);
        f.expect(b.max_r == expected, tag + " maxR " + std::to_string(b.max_r) + " != " + std::to_string(expected));
        f.expect(fhindex::containment_admits(p, n, field, b.max_r), tag + " containment rejects maxR");
        f.expect(!fhindex::containment_admits(p, n, field, b.max_r + 1), tag + " containment admits maxR+1");
      }
  return f.outcome(std::to_string(points) + " grid points");
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "closed-form index, complex", [] { return closed_form_complex(); }},
      {2, "closed-form index, real", [] { return closed_form_real(); }},
      {3, "reduction relation families", [] { return relation_shapes(); }},
      {4, "flag cohomology oracles", [] { return flag_cohomology_oracles(); }},
      {5, "wreath characteristic classes", [] { return wreath_class_properties(); }},
      {6, "wreath ring axioms", [] { return ring_axioms(); }},
      {7, "shadow bounds", [] { return applied_bounds(); }},
  };
  return all;
}

records::CriterionRecord run_criterion(const Criterion& c) {
  records::CriterionRecord r;
  r.id = c.id;
  r.name = c.name;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Outcome o = c.run();
    r.passed = o.passed;
    r.detail = o.detail;
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

records::SelftestRecord run_all() {
  records::SelftestRecord out;
  out.passed = true;
  for (const auto& c : criteria()) {
    out.criteria.push_back(run_criterion(c));
    out.passed = out.passed && out.criteria.back().passed;
  }
  return out;
}

}  // namespace cpindex::selftest
