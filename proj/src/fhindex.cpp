#include "cpindex/fhindex.hpp"

#include <sstream>

#include "cpindex/charclass.hpp"
#include "cpindex/errors.hpp"
#include "cpindex/linalg.hpp"

namespace cpindex::fhindex {

using wreath::DiagKey;
using wreath::TensorMonomial;

bool IndexResult::contains(const IndexResult& other) const {
  return v_exponent() <= other.v_exponent() && u_exponent() <= other.u_exponent();
}

namespace {

std::string v_power(int j) {
  if (j == 0) return "1";
  return j == 1 ? "v" : "v^" + std::to_string(j);
}

}  // namespace

std::string IndexResult::render() const {
  if (shape == Shape::VOnly) return "(" + v_power(l) + ")";
  const std::string uv = l == 1 ? "u" : "u*" + v_power(l - 1);
  return "(" + uv + ", " + v_power(l) + ")";
}

std::string to_string(IndexResult::Shape s) { return s == IndexResult::Shape::VOnly ? "VOnly" : "UAndV"; }

IndexResult::Shape parse_shape(std::string_view s) {
  if (s == "VOnly") return IndexResult::Shape::VOnly;
  if (s == "UAndV") return IndexResult::Shape::UAndV;
  throw ParseError("unknown index shape '" + std::string(s) + "'");
}

PrimeSplit split_prime_power(std::uint32_t p, int n) {
  require_odd_prime(p);
  if (n < 1) throw DomainError("n must be positive, got " + std::to_string(n));
  PrimeSplit s{0, n};
  while (s.q % static_cast<int>(p) == 0) {
    s.q /= static_cast<int>(p);
    ++s.a;
  }
  return s;
}

long long ipow(long long base, int e) {
  long long r = 1;
  while (e-- > 0) r *= base;
  return r;
}

KernelGenerators kernel_generators(std::uint32_t p, int n, Field field) {
  require_odd_prime(p);
  if (n < 1) throw DomainError("n must be positive, got " + std::to_string(n));
  const int pn = static_cast<int>(p) * n;
  if (field == Field::Complex) {
    const auto g = charclass::GroupFamily::unitary(n);
    auto base = charclass::classifying_presentation(g, p);
    auto chern = wreath::wreath_chern(charclass::total_class(g, base.algebra()), n, 2 * pn);
    KernelGenerators out{base, {}, {}};
    for (int k = 1; k <= pn; ++k) {
      out.names.push_back("c" + std::to_string(k));
      out.classes.push_back(chern[static_cast<std::size_t>(k)]);
    }
    return out;
  }
  const auto g = charclass::GroupFamily::special_orthogonal(n);
  auto base = charclass::classifying_presentation(g, p);
  auto pont = wreath::wreath_pontrjagin(charclass::total_class(g, base.algebra()), n, 2 * pn);
  KernelGenerators out{base, {}, {}};
  for (int k = 1; 4 * k <= 2 * pn; ++k) {
    out.names.push_back("p" + std::to_string(k));
    out.classes.push_back(pont[static_cast<std::size_t>(k)]);
  }
  if (n % 2 == 0) {
    out.names.push_back("e" + std::to_string(pn));
    out.classes.push_back(wreath::p_power(charclass::euler_class(g, base.algebra())));
  }
  return out;
}

// WreathIdeal ----------------------------------------------------------------

struct WreathIdeal::Piece {
  wreath::WreathBasis basis;
  std::map<DiagKey, std::size_t> diag_col;
  std::map<TensorMonomial, std::size_t> free_col;
  RowReducer reducer;

  Piece(const wreath::AlgebraPresentation& base, int d)
      : basis(wreath::wreath_degree_basis(base, d)), reducer(basis.size(), base.modulus()) {
    for (std::size_t i = 0; i < basis.diag.size(); ++i) diag_col.emplace(basis.diag[i], i);
    for (std::size_t i = 0; i < basis.free.size(); ++i) free_col.emplace(basis.free[i], basis.diag.size() + i);
  }

  DenseRow row(const WreathClass& x) const {
    DenseRow r(basis.size(), 0);
    for (const auto& [k, c] : x.diag()) {
      auto it = diag_col.find(k);
      if (it == diag_col.end()) throw StructuralError("diagonal term outside the degree basis");
      r[it->second] = c;
    }
    for (const auto& [t, c] : x.free()) {
      auto it = free_col.find(t);
      if (it == free_col.end()) throw StructuralError("orbit term outside the degree basis");
      r[it->second] = c;
    }
    return r;
  }
};

WreathIdeal::WreathIdeal(wreath::AlgebraPresentation base, std::vector<WreathClass> generators)
    : base_(std::move(base)) {
  for (auto& g : generators) {
    galgebra::require_same_algebra(base_.algebra(), g.base());
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw StructuralError("ideal generators must be homogeneous");
    gens_.push_back(std::move(g));
  }
}

WreathIdeal::Piece& WreathIdeal::piece(int d) {
  auto it = pieces_.find(d);
  if (it != pieces_.end()) return *it->second;
  auto pc = std::make_shared<Piece>(base_, d);
  const wreath::AlgebraPtr& alg = base_.algebra();
  for (const auto& g : gens_) {
    const int e = g.max_degree();
    if (e > d) continue;
    const auto lower = wreath::wreath_degree_basis(base_, d - e);
    for (const auto& k : lower.diag) {
      WreathClass prod = g * WreathClass::diagonal(alg, k);
      if (!prod.is_zero()) pc->reducer.insert(pc->row(prod));
    }
    for (const auto& t : lower.free) {
      WreathClass prod = g * WreathClass::orbit(alg, t);
      if (!prod.is_zero()) pc->reducer.insert(pc->row(prod));
    }
  }
  pieces_.emplace(d, pc);
  return *pc;
}

bool WreathIdeal::contains(const WreathClass& x) {
  galgebra::require_same_algebra(base_.algebra(), x.base());
  if (x.is_zero()) return true;
  if (!x.is_homogeneous()) throw StructuralError("membership needs a homogeneous class");
  Piece& pc = piece(x.max_degree());
  return pc.reducer.contains(pc.row(x));
}

std::size_t WreathIdeal::piece_dimension(int d) { return piece(d).basis.size(); }
std::size_t WreathIdeal::piece_rank(int d) { return piece(d).reducer.rank(); }

// Index search -----------------------------------------------------------------

int default_max_l(std::uint32_t p, int n) {
  return static_cast<int>(2 * ipow(p, split_prime_power(p, n).a + 1));
}

IndexComputation compute_index(std::uint32_t p, int n, Field field, std::optional<int> max_l) {
  const auto start = std::chrono::steady_clock::now();
  IndexComputation out;
  out.p = p;
  out.n = n;
  out.field = field;
  out.split = split_prime_power(p, n);
  const int bound = max_l.value_or(default_max_l(p, n));
  if (bound < 1) throw DomainError("max-l must be positive");

  auto kg = kernel_generators(p, n, field);
  const wreath::AlgebraPtr alg = kg.base.algebra();
  out.generators_used = kg.classes.size();
  WreathIdeal ideal(kg.base, kg.classes);
  const WreathClass u = WreathClass::u(alg);

  std::optional<int> lu, lv;
  for (int l = 1; l <= bound; ++l) {
    const WreathClass v_prev = WreathClass::v_power(alg, l - 1);
    out.degrees_scanned = 2 * l - 1;
    if (!lu && ideal.contains(u * v_prev)) lu = l;
    out.degrees_scanned = 2 * l;
    if (ideal.contains(WreathClass::v_power(alg, l))) {
      lv = l;
      break;
    }
  }
  if (!lv)
    throw BoundExceeded("no power of v entered the index ideal up to l = " + std::to_string(bound));
  if (lu && *lu == *lv) {
    out.result = IndexResult::u_and_v(*lv);
  } else if (!lu) {
    out.degrees_scanned = 2 * *lv + 1;
    if (!ideal.contains(u * WreathClass::v_power(alg, *lv)))
      throw StructuralError("v^" + std::to_string(*lv) + " is in the ideal but u*v^" + std::to_string(*lv) +
                            " is not");
    out.result = IndexResult::v_only(*lv);
  } else {
    throw StructuralError("u*v^" + std::to_string(*lu - 1) + " entered the ideal before v^" +
                          std::to_string(*lv));
  }
  out.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

IndexResult closed_form_index(std::uint32_t p, int n, Field field) {
  const auto s = split_prime_power(p, n);
  const int top = static_cast<int>(ipow(p, s.a + 1));
  if (field == Field::Real && n % 2 != 0 && s.q == 1) return IndexResult::v_only(top - 1);
  return IndexResult::u_and_v(top);
}

// Relation families ----------------------------------------------------------

bool VerificationReport::passed() const {
  if (checks.empty()) return false;
  for (const auto& c : checks) {
    if (!c.holds) return false;
    if (c.alpha_zero_excluded && !*c.alpha_zero_excluded) return false;
  }
  return u_relation && v_relation && alpha0_relation;
}

namespace {

// The predicted relation R_k for generator index k; the v-power term (family iii)
// is returned separately so that its coefficient can be searched.
struct Prediction {
  std::string family;
  WreathClass fixed;
  std::optional<WreathClass> v_term;
};

}  // namespace

VerificationReport verify_reduction_relations(std::uint32_t p, int n, Field field) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.p = p;
  rep.n = n;
  rep.field = field;
  rep.split = split_prime_power(p, n);
  if (rep.split.a < 1) throw DomainError("relation families need p | n");
  const int a = rep.split.a;
  const int P = static_cast<int>(p);
  const int top = static_cast<int>(ipow(p, a + 1));  // p^{a+1}

  auto kg = kernel_generators(p, n, field);
  const wreath::AlgebraPtr alg = kg.base.algebra();
  const bool real = field == Field::Real;
  const auto group = real ? charclass::GroupFamily::special_orthogonal(n) : charclass::GroupFamily::unitary(n);
  const galgebra::Polynomial total = charclass::total_class(group, alg);
  const WreathClass z = wreath::z_class(total);

  // Base class c_i (complex) or p_i (real); zero beyond the rank.
  auto base_class = [&](int i) -> galgebra::Polynomial {
    const int step = real ? 4 : 2;
    return total.homogeneous_part(step * i);
  };

  // k indexes generators; the relation lives in degree 2k (complex) or 4k (real),
  // and the family is decided by K = k (complex) or 2k (real).
  const int last = real ? (top - 1) / 2 : top - 1;
  auto predict = [&](int k) {
    const int K = real ? 2 * k : k;
    const int deg = real ? 4 * k : 2 * k;
    Prediction pr{"", z.homogeneous_part(deg), std::nullopt};
    if (K == top - 1) {
      pr.family = "iv";
      pr.fixed = pr.fixed + wreath::p_power(base_class((ipow(p, a) - 1) / (real ? 2 : 1))) *
                                WreathClass::v_power(alg, P - 1);
      return pr;
    }
    for (int m = 0; m < a; ++m) {
      if (K == top - static_cast<int>(ipow(p, m + 1))) {
        pr.family = "iii";
        const int idx = static_cast<int>((ipow(p, a) - ipow(p, m)) / (real ? 2 : 1));
        pr.fixed = pr.fixed + wreath::p_power(base_class(idx));
        pr.v_term = WreathClass::v_power(alg, K);
        return pr;
      }
    }
    if (k % P != 0) {
      pr.family = "i";
      return pr;
    }
    pr.family = "ii";
    pr.fixed = pr.fixed + wreath::p_power(base_class(k / P));
    return pr;
  };

  std::optional<int> alpha0;
  for (int k = 1; k <= last; ++k) {
    std::vector<WreathClass> previous(kg.classes.begin(), kg.classes.begin() + (k - 1));
    WreathIdeal ideal(kg.base, previous);
    const WreathClass& g = kg.classes[static_cast<std::size_t>(k - 1)];
    const Prediction pr = predict(k);
    RelationCheck chk;
    chk.k = k;
    chk.family = pr.family;
    chk.predicted = wreath::render_wreath(pr.v_term ? pr.fixed + *pr.v_term : pr.fixed);

    for (int lambda = 1; lambda < P; ++lambda) {
      if (!pr.v_term) {
        if (ideal.contains(g - pr.fixed.scaled(lambda))) {
          if (chk.solutions++ == 0) chk.lambda = lambda;
        }
        continue;
      }
      for (int alpha = 1; alpha < P; ++alpha) {
        if (ideal.contains(g - (pr.fixed + pr.v_term->scaled(alpha)).scaled(lambda))) {
          if (chk.solutions++ == 0) {
            chk.lambda = lambda;
            chk.alpha = alpha;
          }
        }
      }
    }
    if (pr.v_term) {
      bool zero_works = false;
      for (int lambda = 1; lambda < P && !zero_works; ++lambda)
        zero_works = ideal.contains(g - pr.fixed.scaled(lambda));
      chk.alpha_zero_excluded = !zero_works;
      if ((real ? 2 * k : k) == top - P && chk.alpha) alpha0 = chk.alpha;
    }
    chk.holds = chk.solutions == 1;
    rep.checks.push_back(std::move(chk));
  }

  WreathIdeal all(kg.base, std::vector<WreathClass>(kg.classes.begin(), kg.classes.begin() + last));
  rep.u_relation = all.contains(WreathClass::u(alg) * WreathClass::v_power(alg, top - 1));
  rep.v_relation = all.contains(WreathClass::v_power(alg, top));
  if (alpha0) {
    const WreathClass rel =
        WreathClass::v_power(alg, top - 1).scaled(*alpha0) - z.homogeneous_part(2 * (top - 1));
    rep.alpha0_relation = all.contains(rel);
  }
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

// Spheres and shadows ----------------------------------------------------------

IndexResult sphere_index(std::uint32_t p, int r) {
  require_odd_prime(p);
  if (r < 1) throw DomainError("r must be positive");
  return IndexResult::v_only(static_cast<int>(p - 1) * r / 2);
}

ShadowBound shadow_bound(std::uint32_t p, int n, Field field) {
  ShadowBound b;
  b.field = field;
  b.p = p;
  b.n = n;
  b.split = split_prime_power(p, n);
  const long long top = ipow(p, b.split.a + 1);
  const int complex_max = static_cast<int>(2 * (top - 1) / (p - 1));
  b.max_r = field == Field::Complex ? complex_max : complex_max - 1;
  const IndexResult flag = closed_form_index(p, n, field);
  std::ostringstream os;
  const IndexResult sphere = sphere_index(p, b.max_r);
  os << "n = " << p << "^" << b.split.a << " * " << b.split.q << "; flag index " << flag.render()
     << "; at r = " << b.max_r << " the sphere index is " << sphere.render() << ", "
     << (flag.contains(sphere) ? "contained" : "not contained") << " in the flag index";
  b.justification = os.str();
  return b;
}

bool containment_admits(std::uint32_t p, int n, Field field, int r) {
  return !closed_form_index(p, n, field).contains(sphere_index(p, r));
}

}  // namespace cpindex::fhindex
