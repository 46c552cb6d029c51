#include "cpindex/wreath.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "cpindex/charclass.hpp"
#include "cpindex/errors.hpp"

namespace cpindex::wreath {

using galgebra::FreeAlgebra;

// TensorMonomial -----------------------------------------------------------

bool TensorMonomial::is_diagonal() const {
  return std::all_of(slots.begin(), slots.end(), [&](const Monomial& m) { return m == slots[0]; });
}

TensorMonomial TensorMonomial::rotated(std::size_t shift) const {
  TensorMonomial out;
  out.slots.reserve(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) out.slots.push_back(slots[(i + shift) % slots.size()]);
  return out;
}

TensorMonomial TensorMonomial::canonical() const {
  TensorMonomial best = *this;
  for (std::size_t s = 1; s < slots.size(); ++s) {
    TensorMonomial r = rotated(s);
    if (r < best) best = std::move(r);
  }
  return best;
}

namespace {

Monomial mono_mul(const FreeAlgebra& alg, const Monomial& a, const Monomial& b) {
  // Bases are evenly graded, so the Koszul sign is always +1.
  return alg.multiply(a, b)->first;
}

TensorMonomial slot_mul(const FreeAlgebra& alg, const TensorMonomial& a, const TensorMonomial& b) {
  TensorMonomial out;
  out.slots.reserve(a.slots.size());
  for (std::size_t i = 0; i < a.slots.size(); ++i) out.slots.push_back(mono_mul(alg, a.slots[i], b.slots[i]));
  return out;
}

TensorMonomial scale_slots(const FreeAlgebra& alg, const TensorMonomial& t, const Monomial& m) {
  TensorMonomial out;
  out.slots.reserve(t.slots.size());
  for (const auto& s : t.slots) out.slots.push_back(mono_mul(alg, s, m));
  return out;
}

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

}  // namespace

// WreathClass --------------------------------------------------------------

WreathClass::WreathClass(AlgebraPtr base) : base_(std::move(base)) {
  if (!base_->is_evenly_graded())
    throw DomainError("wreath powers need an evenly graded base algebra");
}

WreathClass WreathClass::constant(AlgebraPtr base, std::int64_t c) {
  return diagonal(base, DiagKey{base->one(), 0, 0}, c);
}

WreathClass WreathClass::diagonal(AlgebraPtr base, DiagKey key, std::int64_t c) {
  WreathClass x(std::move(base));
  if (key.eps < 0 || key.eps > 1 || key.j < 0) throw DomainError("bad u/v exponents");
  x.add_diag(key, c);
  return x;
}

WreathClass WreathClass::u(AlgebraPtr base) { return diagonal(base, DiagKey{base->one(), 1, 0}); }

WreathClass WreathClass::v_power(AlgebraPtr base, int j) {
  return diagonal(base, DiagKey{base->one(), 0, j});
}

WreathClass WreathClass::orbit(AlgebraPtr base, const TensorMonomial& t, std::int64_t c) {
  WreathClass x(std::move(base));
  if (t.slots.size() != x.modulus()) throw StructuralError("tensor monomial must have p slots");
  x.add_free(t, c);
  return x;
}

int WreathClass::degree(const DiagKey& k) const {
  return static_cast<int>(modulus()) * base_->degree(k.m) + k.eps + 2 * k.j;
}

int WreathClass::degree(const TensorMonomial& t) const {
  int d = 0;
  for (const auto& m : t.slots) d += base_->degree(m);
  return d;
}

int WreathClass::max_degree() const {
  int d = -1;
  for (const auto& [k, c] : diag_) d = std::max(d, degree(k));
  for (const auto& [t, c] : free_) d = std::max(d, degree(t));
  return d;
}

WreathClass WreathClass::homogeneous_part(int d) const {
  WreathClass out(base_);
  for (const auto& [k, c] : diag_)
    if (degree(k) == d) out.diag_.emplace(k, c);
  for (const auto& [t, c] : free_)
    if (degree(t) == d) out.free_.emplace(t, c);
  return out;
}

bool WreathClass::is_homogeneous() const {
  std::optional<int> d;
  auto same = [&](int e) {
    if (!d) d = e;
    return *d == e;
  };
  for (const auto& [k, c] : diag_)
    if (!same(degree(k))) return false;
  for (const auto& [t, c] : free_)
    if (!same(degree(t))) return false;
  return true;
}

void WreathClass::add_diag(const DiagKey& k, std::int64_t c) {
  if (k.eps > 1) return;  // u^2 = 0
  const std::uint32_t cr = reduce_mod(c, modulus());
  if (cr == 0) return;
  auto [it, inserted] = diag_.try_emplace(k, cr);
  if (!inserted) {
    it->second = (it->second + cr) % modulus();
    if (it->second == 0) diag_.erase(it);
  }
}

void WreathClass::add_free(const TensorMonomial& t, std::int64_t c) {
  if (t.is_diagonal()) return;  // p * t = 0
  const std::uint32_t cr = reduce_mod(c, modulus());
  if (cr == 0) return;
  auto [it, inserted] = free_.try_emplace(t.canonical(), cr);
  if (!inserted) {
    it->second = (it->second + cr) % modulus();
    if (it->second == 0) free_.erase(it);
  }
}

void WreathClass::check(const WreathClass& o) const { galgebra::require_same_algebra(base_, o.base_); }

WreathClass WreathClass::operator+(const WreathClass& o) const {
  check(o);
  WreathClass out = *this;
  for (const auto& [k, c] : o.diag_) out.add_diag(k, c);
  for (const auto& [t, c] : o.free_) out.add_free(t, c);
  return out;
}

WreathClass WreathClass::operator-(const WreathClass& o) const { return *this + (-o); }

WreathClass WreathClass::operator-() const { return scaled(-1); }

WreathClass WreathClass::scaled(std::int64_t c) const {
  WreathClass out(base_);
  const std::uint32_t cr = reduce_mod(c, modulus());
  if (cr == 0) return out;
  for (const auto& [k, x] : diag_) out.diag_.emplace(k, mulmod(x, cr, modulus()));
  for (const auto& [t, x] : free_) out.free_.emplace(t, mulmod(x, cr, modulus()));
  return out;
}

WreathClass WreathClass::operator*(const WreathClass& o) const {
  check(o);
  const FreeAlgebra& alg = *base_;
  const std::uint32_t p = modulus();
  WreathClass out(base_);
  for (const auto& [ka, ca] : diag_) {
    for (const auto& [kb, cb] : o.diag_) {
      if (ka.eps + kb.eps > 1) continue;
      out.add_diag(DiagKey{mono_mul(alg, ka.m, kb.m), ka.eps + kb.eps, ka.j + kb.j}, mulmod(ca, cb, p));
    }
  }
  // P(m) * O(t) = O(t * m^{(x)p}); u and v annihilate orbit sums.
  auto diag_times_free = [&](const DiagTerms& d, const FreeTerms& f) {
    for (const auto& [k, c] : d) {
      if (k.eps != 0 || k.j != 0) continue;
      for (const auto& [t, ct] : f) out.add_free(scale_slots(alg, t, k.m), mulmod(c, ct, p));
    }
  };
  diag_times_free(diag_, o.free_);
  diag_times_free(o.diag_, free_);
  // O(t1) O(t2) = sum_h O(t1 * rot^h t2); diagonal products carry p * s = 0.
  for (const auto& [t1, c1] : free_) {
    for (const auto& [t2, c2] : o.free_) {
      const std::uint32_t c = mulmod(c1, c2, p);
      for (std::size_t h = 0; h < p; ++h) out.add_free(slot_mul(alg, t1, t2.rotated(h)), c);
    }
  }
  return out;
}

WreathClass WreathClass::pow(unsigned e) const {
  WreathClass result = constant(base_, 1);
  WreathClass b = *this;
  while (e > 0) {
    if (e & 1u) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

bool WreathClass::operator==(const WreathClass& o) const {
  if (base_ != o.base_ && !(*base_ == *o.base_)) return false;
  return diag_ == o.diag_ && free_ == o.free_;
}

// Operators ----------------------------------------------------------------

WreathClass p_power(const Polynomial& x) {
  const AlgebraPtr& base = x.algebra();
  WreathClass out(base);
  const std::uint32_t p = x.modulus();
  std::vector<std::pair<Monomial, std::uint32_t>> terms(x.terms().begin(), x.terms().end());
  const std::size_t N = terms.size();
  if (N == 0) return out;
  for (const auto& [m, c] : terms) out.add_diag(DiagKey{m, 0, 0}, pow_mod(c, p, p));
  if (N == 1) return out;

  // Each necklace of term indices is visited once through its rotation-minimal
  // representative; its orbit sum carries the product of the coefficients.
  std::vector<std::size_t> idx(p, 0);
  auto is_minimal = [&] {
    for (std::size_t s = 1; s < p; ++s) {
      for (std::size_t i = 0; i < p; ++i) {
        const std::size_t a = idx[i], b = idx[(i + s) % p];
        if (b < a) return false;
        if (b > a) break;
      }
    }
    return true;
  };
  while (true) {
    bool diagonal = std::all_of(idx.begin(), idx.end(), [&](std::size_t i) { return i == idx[0]; });
    if (!diagonal && is_minimal()) {
      TensorMonomial t;
      std::uint32_t c = 1;
      for (std::size_t i : idx) {
        t.slots.push_back(terms[i].first);
        c = mulmod(c, terms[i].second, p);
      }
      out.add_free(t, c);
    }
    std::size_t k = p;
    while (k > 0 && ++idx[k - 1] == N) idx[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

WreathClass transfer_i(const AlgebraPtr& base, const TensorMonomial& t, std::int64_t coeff) {
  return WreathClass::orbit(base, t, coeff);
}

WreathClass z_class(const Polynomial& phi) {
  WreathClass out = p_power(phi);
  for (const auto& [d, part] : phi.homogeneous_parts()) out = out - p_power(part);
  return out;
}

WreathClass wreath_mul(const WreathClass& a, const WreathClass& b) { return a * b; }

WreathBasis wreath_degree_basis(const AlgebraPresentation& base, int d) {
  if (!base.relations().empty())
    throw DomainError("wreath bases need a relation-free base algebra");
  const FreeAlgebra& alg = *base.algebra();
  if (!alg.is_evenly_graded()) throw DomainError("wreath bases need an evenly graded base algebra");
  const int p = static_cast<int>(alg.modulus());
  WreathBasis out;
  if (d < 0) return out;
  for (int j = d / 2; j >= 0; --j) {
    for (int eps = 0; eps <= 1; ++eps) {
      const int rest = d - eps - 2 * j;
      if (rest < 0 || rest % p != 0) continue;
      for (auto& m : galgebra::degree_basis(alg, rest / p)) out.diag.push_back(DiagKey{m, eps, j});
    }
  }
  std::vector<std::vector<Monomial>> by_degree(static_cast<std::size_t>(d) + 1);
  for (int e = 0; e <= d; ++e) by_degree[static_cast<std::size_t>(e)] = galgebra::degree_basis(alg, e);
  TensorMonomial cur;
  cur.slots.resize(static_cast<std::size_t>(p));
  std::function<void(int, int)> rec = [&](int slot, int remaining) {
    if (slot == p - 1) {
      for (const auto& m : by_degree[static_cast<std::size_t>(remaining)]) {
        cur.slots[static_cast<std::size_t>(slot)] = m;
        if (!cur.is_diagonal() && cur.canonical() == cur) out.free.push_back(cur);
      }
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      for (const auto& m : by_degree[static_cast<std::size_t>(e)]) {
        // A canonical tuple starts with its smallest slot.
        if (slot > 0 && m < cur.slots[0]) continue;
        cur.slots[static_cast<std::size_t>(slot)] = m;
        rec(slot + 1, remaining - e);
      }
    }
  };
  rec(0, d);
  return out;
}

WreathClass wreath_total_class(const Polynomial& total, int n, int step, int regular_sign) {
  if (regular_sign != 1 && regular_sign != -1) throw DomainError("regular_sign must be +1 or -1");
  if (step <= 0) throw DomainError("step must be positive");
  const AlgebraPtr& base = total.algebra();
  const int p = static_cast<int>(total.modulus());
  const WreathClass factor =
      WreathClass::constant(base, 1) + WreathClass::v_power(base, p - 1).scaled(regular_sign);
  WreathClass out = z_class(total);
  for (const auto& [deg, part] : total.homogeneous_parts()) {
    if (deg % step != 0) throw StructuralError("total class has a component in degree " + std::to_string(deg));
    const int r = deg / step;
    if (r > n) throw DomainError("total class exceeds rank " + std::to_string(n));
    out = out + p_power(part) * factor.pow(static_cast<unsigned>(n - r));
  }
  return out;
}

std::vector<WreathClass> wreath_chern(const Polynomial& total, int n, int max_degree, int regular_sign) {
  const WreathClass t = wreath_total_class(total, n, 2, regular_sign);
  std::vector<WreathClass> out;
  for (int k = 0; 2 * k <= max_degree; ++k) out.push_back(t.homogeneous_part(2 * k));
  return out;
}

std::vector<WreathClass> wreath_chern(int n, std::uint32_t p, int max_degree, int regular_sign) {
  const auto g = charclass::GroupFamily::unitary(n);
  return wreath_chern(charclass::total_class(g, p), n, max_degree, regular_sign);
}

std::vector<WreathClass> wreath_pontrjagin(const Polynomial& total, int n, int max_degree,
                                           int regular_sign) {
  if (regular_sign != 1 && regular_sign != -1) throw DomainError("regular_sign must be +1 or -1");
  const AlgebraPtr& base = total.algebra();
  const int p = static_cast<int>(total.modulus());
  const WreathClass factor =
      WreathClass::constant(base, 1) + WreathClass::v_power(base, p - 1).scaled(regular_sign);
  WreathClass signed_sum(base);
  for (const auto& [deg, part] : total.homogeneous_parts()) {
    if (deg % 4 != 0) throw StructuralError("Pontrjagin class in degree " + std::to_string(deg));
    const int r = deg / 4;
    if (2 * r > n) throw DomainError("total Pontrjagin class exceeds rank " + std::to_string(n));
    signed_sum = signed_sum + (p_power(part) * factor.pow(static_cast<unsigned>(n - 2 * r))).scaled(r % 2 ? -1 : 1);
  }
  const WreathClass z = z_class(total);
  std::vector<WreathClass> out;
  for (int i = 0; 4 * i <= max_degree; ++i)
    out.push_back(signed_sum.homogeneous_part(4 * i).scaled(i % 2 ? -1 : 1) + z.homogeneous_part(4 * i));
  return out;
}

std::vector<WreathClass> wreath_pontrjagin(int n, std::uint32_t p, int max_degree, int regular_sign) {
  const auto g = charclass::GroupFamily::special_orthogonal(n);
  return wreath_pontrjagin(charclass::total_class(g, p), n, max_degree, regular_sign);
}

WreathClass wreath_euler(int n, std::uint32_t p) {
  if (n <= 0 || n % 2 != 0) throw DomainError("wreath Euler class needs even n, got " + std::to_string(n));
  return p_power(charclass::euler_class(charclass::GroupFamily::special_orthogonal(n), p));
}

WreathClass restrict_to_point(const WreathClass& x) {
  WreathClass out(x.base());
  for (const auto& [k, c] : x.diag())
    if (k.m.is_one()) out.add_diag(k, c);
  return out;
}

// Text ---------------------------------------------------------------------

namespace {

std::string coefficient_prefix(std::uint32_t c, std::uint32_t p, bool unit_term) {
  const std::int64_t k = signed_residue(c, p);
  if (unit_term) return std::to_string(k);
  if (k == 1) return "";
  if (k == -1) return "-";
  return std::to_string(k) + "*";
}

std::string render_diag_key(const FreeAlgebra& alg, const DiagKey& k) {
  std::vector<std::string> factors;
  if (!k.m.is_one()) factors.push_back("P(" + galgebra::render_monomial(alg, k.m) + ")");
  if (k.eps) factors.push_back("u");
  if (k.j == 1) factors.push_back("v");
  if (k.j > 1) factors.push_back("v^" + std::to_string(k.j));
  std::string out;
  for (const auto& f : factors) out += (out.empty() ? "" : "*") + f;
  return out;
}

}  // namespace

std::string render_wreath(const WreathClass& x) {
  if (x.is_zero()) return "0";
  const FreeAlgebra& alg = *x.base();
  struct Item {
    int degree;
    bool free;
    std::string body;
    std::uint32_t c;
  };
  std::vector<Item> items;
  for (const auto& [k, c] : x.diag()) items.push_back({x.degree(k), false, render_diag_key(alg, k), c});
  for (const auto& [t, c] : x.free()) {
    std::string body = "O(";
    for (std::size_t i = 0; i < t.slots.size(); ++i)
      body += (i ? "|" : "") + galgebra::render_monomial(alg, t.slots[i]);
    items.push_back({x.degree(t), true, body + ")", c});
  }
  std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.free < b.free;
  });
  std::string out;
  for (const auto& it : items) {
    if (!out.empty()) out += " + ";
    out += coefficient_prefix(it.c, x.modulus(), it.body.empty()) + it.body;
  }
  return out;
}

WreathClass parse_wreath(std::string_view text, const AlgebraPtr& base) {
  WreathClass out(base);
  const std::uint32_t p = base->modulus();
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError(msg + " at offset " + std::to_string(pos) + " in '" + std::string(text) + "'");
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto peek = [&] {
    skip();
    return pos < text.size() ? text[pos] : '\0';
  };
  auto integer = [&] {
    skip();
    std::int64_t v = 0;
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = (v * 10 + (text[pos] - '0')) % static_cast<std::int64_t>(p);
      ++pos;
    }
    if (pos == start) fail("expected an integer");
    return v;
  };
  auto bracketed = [&](char open, char close) {
    skip();
    if (pos >= text.size() || text[pos] != open) fail(std::string("expected '") + open + "'");
    const std::size_t end = text.find(close, pos);
    if (end == std::string_view::npos) fail(std::string("missing '") + close + "'");
    std::string_view inner = text.substr(pos + 1, end - pos - 1);
    pos = end + 1;
    return inner;
  };

  if (peek() == '\0') fail("empty class");
  bool first = true;
  while (peek() != '\0') {
    std::int64_t sign = 1;
    if (!first) {
      const char ch = peek();
      if (ch == '-') sign = -1;
      else if (ch != '+') fail("expected '+' or '-'");
      ++pos;
    }
    while (peek() == '-' || peek() == '+') {
      if (text[pos] == '-') sign = -sign;
      ++pos;
    }
    first = false;

    std::int64_t coeff = sign;
    DiagKey key{base->one(), 0, 0};
    std::optional<TensorMonomial> tensor;
    do {
      const char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coeff = coeff * integer() % static_cast<std::int64_t>(p);
      } else if (ch == 'P' && text.substr(pos, 2) == "P(") {
        ++pos;
        key.m = mono_mul(*base, key.m, galgebra::parse_monomial(bracketed('(', ')'), *base));
      } else if (ch == 'O' && text.substr(pos, 2) == "O(") {
        ++pos;
        if (tensor) fail("two orbit factors in one term");
        TensorMonomial t;
        std::string_view inner = bracketed('(', ')');
        std::size_t start = 0;
        while (true) {
          const std::size_t bar = inner.find('|', start);
          t.slots.push_back(galgebra::parse_monomial(inner.substr(start, bar - start), *base));
          if (bar == std::string_view::npos) break;
          start = bar + 1;
        }
        if (t.slots.size() != p) fail("orbit needs " + std::to_string(p) + " slots");
        tensor = std::move(t);
      } else if (ch == 'u') {
        ++pos;
        key.eps += 1;
      } else if (ch == 'v') {
        ++pos;
        int e = 1;
        if (peek() == '^') {
          ++pos;
          skip();
          e = 0;
          const std::size_t start = pos;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) e = e * 10 + (text[pos++] - '0');
          if (pos == start) fail("expected an exponent");
        }
        key.j += e;
      } else {
        fail("unexpected character");
      }
      skip();
    } while (pos < text.size() && text[pos] == '*' && ++pos);

    WreathClass term = tensor ? WreathClass::orbit(base, *tensor, coeff) : WreathClass(base);
    if (tensor) {
      if (key.eps || key.j) term = WreathClass(base);  // u, v kill orbit sums
      else term = term * WreathClass::diagonal(base, DiagKey{key.m, 0, 0});
    } else if (key.eps <= 1) {
      term = WreathClass::diagonal(base, key, coeff);
    }
    out = out + term;
  }
  return out;
}

}  // namespace cpindex::wreath
