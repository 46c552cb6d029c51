#include "cpindex/galgebra.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "cpindex/errors.hpp"
#include "cpindex/linalg.hpp"

namespace cpindex::galgebra {

bool Monomial::is_one() const {
  return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; });
}

FreeAlgebra::FreeAlgebra(std::uint32_t modulus, std::vector<GeneratorSpec> generators)
    : p_(modulus), gens_(std::move(generators)) {
  require_odd_prime(p_);
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const auto& g = gens_[i];
    if (g.degree < 1)
      throw DomainError("generator " + g.name + " must have positive degree");
    if (g.name.empty() || !(std::isalpha(static_cast<unsigned char>(g.name[0])) || g.name[0] == '_'))
      throw DomainError("generator name '" + g.name + "' is not an identifier");
    for (char ch : g.name)
      if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
        throw DomainError("generator name '" + g.name + "' is not an identifier");
    for (std::size_t j = 0; j < i; ++j)
      if (gens_[j].name == g.name) throw DomainError("duplicate generator " + g.name);
  }
}

std::optional<std::size_t> FreeAlgebra::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return i;
  return std::nullopt;
}

Monomial FreeAlgebra::generator(std::size_t i) const {
  Monomial m = one();
  m.exponents.at(i) = 1;
  return m;
}

int FreeAlgebra::degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < gens_.size(); ++i) d += m.exponents[i] * gens_[i].degree;
  return d;
}

bool FreeAlgebra::is_evenly_graded() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const GeneratorSpec& g) {
    return g.parity == Parity::Even && g.degree % 2 == 0;
  });
}

std::optional<std::pair<Monomial, int>> FreeAlgebra::multiply(const Monomial& a,
                                                              const Monomial& b) const {
  Monomial out = one();
  int transpositions = 0;
  int odd_in_a_after = 0;  // odd generators of `a` with index > current, scanned right to left
  for (std::size_t k = gens_.size(); k-- > 0;) {
    const bool odd = gens_[k].parity == Parity::Odd;
    if (odd) {
      if (a.exponents[k] && b.exponents[k]) return std::nullopt;
      if (b.exponents[k]) transpositions += odd_in_a_after;
      if (a.exponents[k]) ++odd_in_a_after;
    }
    out.exponents[k] = a.exponents[k] + b.exponents[k];
  }
  return std::make_pair(std::move(out), transpositions % 2 ? -1 : 1);
}

AlgebraPtr make_algebra(std::uint32_t modulus, std::vector<GeneratorSpec> generators) {
  return std::make_shared<const FreeAlgebra>(modulus, std::move(generators));
}

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return;
  if (a->modulus() != b->modulus())
    throw StructuralError("mixing F_" + std::to_string(a->modulus()) + " and F_" +
                          std::to_string(b->modulus()));
  if (!(*a == *b)) throw StructuralError("polynomials over different generator sets");
}

// Polynomial ---------------------------------------------------------------

Polynomial::Polynomial(AlgebraPtr algebra) : alg_(std::move(algebra)) {}

Polynomial Polynomial::constant(AlgebraPtr algebra, std::int64_t c) {
  Polynomial x(algebra);
  x.add_term(algebra->one(), c);
  return x;
}

Polynomial Polynomial::generator(AlgebraPtr algebra, std::size_t i) {
  Polynomial x(algebra);
  x.add_term(algebra->generator(i), 1);
  return x;
}

Polynomial Polynomial::generator(AlgebraPtr algebra, std::string_view name) {
  auto i = algebra->index_of(name);
  if (!i) throw DomainError("no generator named " + std::string(name));
  return generator(std::move(algebra), *i);
}

Polynomial Polynomial::monomial(AlgebraPtr algebra, Monomial m, std::int64_t c) {
  if (m.exponents.size() != algebra->size())
    throw StructuralError("monomial length does not match generator count");
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (m.exponents[i] < 0) throw DomainError("negative exponent");
    if (algebra->generators()[i].parity == Parity::Odd && m.exponents[i] > 1)
      return Polynomial(algebra);
  }
  Polynomial x(algebra);
  x.add_term(m, c);
  return x;
}

Fp Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return Fp(it == terms_.end() ? 0 : it->second, modulus());
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = alg_->degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return alg_->degree(t.first) == d; });
}

std::optional<int> Polynomial::degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return alg_->degree(terms_.begin()->first);
}

int Polynomial::max_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, alg_->degree(m));
  return d;
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial out(alg_);
  for (const auto& [m, c] : terms_)
    if (alg_->degree(m) == d) out.terms_.emplace(m, c);
  return out;
}

std::map<int, Polynomial> Polynomial::homogeneous_parts() const {
  std::map<int, Polynomial> parts;
  for (const auto& [m, c] : terms_) {
    auto [it, inserted] = parts.try_emplace(alg_->degree(m), alg_);
    it->second.terms_.emplace(m, c);
  }
  return parts;
}

Polynomial Polynomial::truncated(int max_degree) const {
  Polynomial out(alg_);
  for (const auto& [m, c] : terms_)
    if (alg_->degree(m) <= max_degree) out.terms_.emplace(m, c);
  return out;
}

void Polynomial::add_term(const Monomial& m, std::int64_t c) {
  const std::uint32_t p = modulus();
  const std::uint32_t cr = reduce_mod(c, p);
  if (cr == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, cr);
  if (!inserted) {
    it->second = (it->second + cr) % p;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_algebra(alg_, o.alg_);
  Polynomial out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::scaled(std::int64_t c) const {
  Polynomial out(alg_);
  const std::uint64_t cr = reduce_mod(c, modulus());
  if (cr == 0) return out;
  for (const auto& [m, x] : terms_)
    out.terms_.emplace(m, static_cast<std::uint32_t>(x * cr % modulus()));
  return out;
}

Polynomial Polynomial::scaled(const Fp& c) const {
  if (c.modulus() != modulus()) throw StructuralError("scalar from a different prime field");
  return scaled(static_cast<std::int64_t>(c.value()));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_algebra(alg_, o.alg_);
  Polynomial out(alg_);
  const std::uint64_t p = modulus();
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      auto prod = alg_->multiply(ma, mb);
      if (!prod) continue;
      const std::uint64_t c = static_cast<std::uint64_t>(ca) * cb % p;
      out.add_term(prod->first, prod->second > 0 ? static_cast<std::int64_t>(c)
                                                 : -static_cast<std::int64_t>(c));
    }
  }
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(alg_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (alg_ != o.alg_ && !(*alg_ == *o.alg_)) return false;
  return terms_ == o.terms_;
}

Polynomial Polynomial::substitute(const AlgebraPtr& target,
                                  std::span<const Polynomial> images) const {
  if (images.size() != alg_->size())
    throw StructuralError("substitution needs one image per generator");
  if (target->modulus() != modulus()) throw StructuralError("substitution changes the prime");
  for (const auto& img : images) require_same_algebra(img.algebra(), target);
  Polynomial out(target);
  for (const auto& [m, c] : terms_) {
    Polynomial t = constant(target, c);
    for (std::size_t i = 0; i < m.exponents.size(); ++i)
      if (m.exponents[i] > 0) t = t * images[i].pow(static_cast<unsigned>(m.exponents[i]));
    out = out + t;
  }
  return out;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

// Presentations ------------------------------------------------------------

AlgebraPresentation::AlgebraPresentation(AlgebraPtr algebra, std::vector<Polynomial> relations)
    : alg_(std::move(algebra)) {
  for (auto& r : relations) {
    require_same_algebra(alg_, r.algebra());
    if (!r.is_homogeneous()) throw StructuralError("relation " + render_polynomial(r) +
                                                   " is not homogeneous");
    if (!r.is_zero()) relations_.push_back(std::move(r));
  }
}

std::vector<Monomial> degree_basis(const FreeAlgebra& algebra, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  const auto& gens = algebra.generators();
  Monomial cur = algebra.one();
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (i == gens.size()) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    int max_e = remaining / gens[i].degree;
    if (gens[i].parity == Parity::Odd) max_e = std::min(max_e, 1);
    for (int e = max_e; e >= 0; --e) {
      cur.exponents[i] = e;
      rec(i + 1, remaining - e * gens[i].degree);
    }
    cur.exponents[i] = 0;
  };
  rec(0, d);
  return out;
}

std::vector<Monomial> degree_basis(const AlgebraPresentation& pres, int d) {
  return degree_basis(*pres.algebra(), d);
}

namespace {

// Span of {g * m : g in gens, deg(g * m) = d} as a row reducer over degree_basis(d).
struct DegreePiece {
  std::vector<Monomial> basis;
  std::map<Monomial, std::size_t> column;
  RowReducer reducer;

  DegreePiece(const AlgebraPresentation& pres, int d)
      : basis(degree_basis(pres, d)), reducer(basis.size(), pres.modulus()) {
    for (std::size_t i = 0; i < basis.size(); ++i) column.emplace(basis[i], i);
  }

  DenseRow to_row(const Polynomial& x) const {
    DenseRow row(basis.size(), 0);
    for (const auto& [m, c] : x.terms()) {
      auto it = column.find(m);
      if (it == column.end()) throw StructuralError("term outside the degree basis");
      row[it->second] = c;
    }
    return row;
  }

  void add_multiples(const AlgebraPresentation& pres, const Polynomial& g, int d) {
    if (g.is_zero()) return;
    auto gd = g.degree();
    if (!gd) throw StructuralError("ideal generator " + render_polynomial(g) +
                                   " is not homogeneous");
    if (*gd > d) return;
    for (const auto& m : degree_basis(pres, d - *gd)) {
      Polynomial prod = Polynomial::monomial(pres.algebra(), m) * g;
      if (!prod.is_zero()) reducer.insert(to_row(prod));
    }
  }
};

}  // namespace

std::size_t quotient_dimension(const AlgebraPresentation& pres, int d) {
  if (d < 0) return 0;
  DegreePiece piece(pres, d);
  for (const auto& r : pres.relations()) piece.add_multiples(pres, r, d);
  return piece.basis.size() - piece.reducer.rank();
}

bool ideal_member(std::span<const Polynomial> gens, const Polynomial& elt,
                  const AlgebraPresentation& pres) {
  require_same_algebra(pres.algebra(), elt.algebra());
  if (elt.is_zero()) return true;
  auto d = elt.degree();
  if (!d) throw StructuralError("ideal_member needs a homogeneous element, got " +
                                render_polynomial(elt));
  DegreePiece piece(pres, *d);
  for (const auto& g : gens) {
    require_same_algebra(pres.algebra(), g.algebra());
    piece.add_multiples(pres, g, *d);
  }
  for (const auto& r : pres.relations()) piece.add_multiples(pres, r, *d);
  return piece.reducer.contains(piece.to_row(elt));
}

// Text format --------------------------------------------------------------

std::string render_monomial(const FreeAlgebra& algebra, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (m.exponents[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += algebra.generators()[i].name;
    if (m.exponents[i] > 1) out += '^' + std::to_string(m.exponents[i]);
  }
  return out.empty() ? "1" : out;
}

std::string render_polynomial(const Polynomial& x) {
  if (x.is_zero()) return "0";
  const auto& alg = *x.algebra();
  std::vector<std::pair<Monomial, std::uint32_t>> terms(x.terms().begin(), x.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    const int da = alg.degree(a.first), db = alg.degree(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [m, c] : terms) {
    if (!out.empty()) out += " + ";
    const std::int64_t k = signed_residue(c, x.modulus());
    const bool unit = m.is_one();
    if (k == 1 && !unit) {
      out += render_monomial(alg, m);
    } else if (k == -1 && !unit) {
      out += "-" + render_monomial(alg, m);
    } else {
      out += std::to_string(k);
      if (!unit) out += "*" + render_monomial(alg, m);
    }
  }
  return out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char ch) {
    if (peek() == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  // '*' or UTF-8 middle dot
  bool accept_times() {
    skip_ws();
    if (accept('*')) return true;
    if (s_.substr(pos_, 2) == "\xC2\xB7") {
      pos_ += 2;
      return true;
    }
    return false;
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  bool at_name() {
    const char ch = peek();
    return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_';
  }
  std::int64_t integer() {
    skip_ws();
    std::int64_t v = 0;
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > (std::int64_t{1} << 40)) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }
  std::string name() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) fail("expected a generator name");
    return std::string(s_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

// factor ('*' factor)* where factor := name ['^' int] | int
std::pair<std::int64_t, Monomial> parse_product(Cursor& cur, const FreeAlgebra& alg) {
  std::int64_t coeff = 1;
  Monomial m = alg.one();
  bool any = false;
  do {
    if (cur.at_digit()) {
      coeff *= cur.integer();
      coeff %= static_cast<std::int64_t>(alg.modulus());
    } else if (cur.at_name()) {
      const std::string nm = cur.name();
      auto idx = alg.index_of(nm);
      if (!idx) cur.fail("unknown generator '" + nm + "'");
      int e = 1;
      if (cur.accept('^')) e = static_cast<int>(cur.integer());
      m.exponents[*idx] += e;
    } else {
      cur.fail("expected a coefficient or generator");
    }
    any = true;
  } while (cur.accept_times());
  if (!any) cur.fail("empty term");
  return {coeff, m};
}

}  // namespace

Monomial parse_monomial(std::string_view text, const FreeAlgebra& algebra) {
  Cursor cur(text);
  auto [c, m] = parse_product(cur, algebra);
  if (!cur.done() || c != 1) cur.fail("expected a bare monomial");
  return m;
}

Polynomial parse_polynomial(std::string_view text, const AlgebraPtr& algebra) {
  Cursor cur(text);
  Polynomial out(algebra);
  if (cur.done()) cur.fail("empty polynomial");
  bool first = true;
  while (!cur.done()) {
    int sign = 1;
    if (!first) {
      if (cur.accept('+')) {
      } else if (cur.accept('-')) {
        sign = -sign;
      } else {
        cur.fail("expected '+' or '-'");
      }
    }
    while (true) {
      if (cur.accept('-')) sign = -sign;
      else if (!cur.accept('+')) break;
    }
    auto [c, m] = parse_product(cur, *algebra);
    out = out + Polynomial::monomial(algebra, m, sign * c);
    first = false;
  }
  return out;
}

std::string render_presentation(const AlgebraPresentation& pres) {
  std::ostringstream os;
  os << "# graded-commutative presentation over F_" << pres.modulus() << '\n';
  for (const auto& g : pres.algebra()->generators())
    os << "gen " << g.name << ' ' << g.degree << ' '
       << (g.parity == Parity::Odd ? "odd" : "even") << '\n';
  for (const auto& r : pres.relations()) os << "rel " << render_polynomial(r) << '\n';
  return os.str();
}

AlgebraPresentation parse_presentation(std::string_view text, std::uint32_t modulus) {
  std::vector<GeneratorSpec> gens;
  std::vector<std::string> rel_lines;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string keyword;
    if (!(ls >> keyword) || keyword[0] == '#') continue;
    if (keyword == "gen") {
      if (!rel_lines.empty())
        throw ParseError("line " + std::to_string(lineno) + ": gen after rel");
      GeneratorSpec g;
      std::string parity;
      if (!(ls >> g.name >> g.degree >> parity))
        throw ParseError("line " + std::to_string(lineno) + ": expected 'gen <name> <degree> <parity>'");
      if (parity == "even") g.parity = Parity::Even;
      else if (parity == "odd") g.parity = Parity::Odd;
      else throw ParseError("line " + std::to_string(lineno) + ": parity must be even or odd");
      gens.push_back(std::move(g));
    } else if (keyword == "rel") {
      std::string rest;
      std::getline(ls, rest);
      rel_lines.push_back(rest);
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown keyword '" + keyword + "'");
    }
  }
  auto alg = make_algebra(modulus, std::move(gens));
  std::vector<Polynomial> rels;
  for (const auto& r : rel_lines) rels.push_back(parse_polynomial(r, alg));
  return AlgebraPresentation(alg, std::move(rels));
}

}  // namespace cpindex::galgebra
