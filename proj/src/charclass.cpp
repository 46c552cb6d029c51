#include "cpindex/charclass.hpp"

#include "cpindex/errors.hpp"

namespace cpindex::charclass {

using galgebra::GeneratorSpec;
using galgebra::Parity;

std::string describe(const GroupFamily& g) {
  switch (g.tag) {
    case Family::U: return "U(" + std::to_string(g.rank) + ")";
    case Family::SO: return "SO(" + std::to_string(g.rank) + ")";
    case Family::Cp: return "C_p";
  }
  return "?";
}

namespace {

void require_rank(const GroupFamily& g) {
  if (g.tag != Family::Cp && g.rank < 1)
    throw DomainError("rank must be positive, got " + std::to_string(g.rank));
}

std::vector<GeneratorSpec> classifying_generators(const GroupFamily& g) {
  std::vector<GeneratorSpec> gens;
  switch (g.tag) {
    case Family::U:
      for (int i = 1; i <= g.rank; ++i) gens.push_back({"c" + std::to_string(i), 2 * i, Parity::Even});
      break;
    case Family::SO:
      for (int i = 1; 2 * i < g.rank; ++i) gens.push_back({"p" + std::to_string(i), 4 * i, Parity::Even});
      if (g.rank % 2 == 0) gens.push_back({"e" + std::to_string(g.rank), g.rank, Parity::Even});
      break;
    case Family::Cp:
      gens.push_back({"u", 1, Parity::Odd});
      gens.push_back({"v", 2, Parity::Even});
      break;
  }
  return gens;
}

}  // namespace

AlgebraPresentation classifying_presentation(const GroupFamily& g, std::uint32_t p) {
  require_rank(g);
  return AlgebraPresentation(galgebra::make_algebra(p, classifying_generators(g)));
}

Polynomial total_class(const GroupFamily& g, const AlgebraPtr& algebra) {
  require_rank(g);
  Polynomial t = Polynomial::constant(algebra, 1);
  switch (g.tag) {
    case Family::U:
      for (int i = 1; i <= g.rank; ++i)
        t = t + Polynomial::generator(algebra, "c" + std::to_string(i));
      break;
    case Family::SO:
      for (int i = 1; 2 * i < g.rank; ++i)
        t = t + Polynomial::generator(algebra, "p" + std::to_string(i));
      if (g.rank % 2 == 0) t = t + euler_class(g, algebra).pow(2);
      break;
    case Family::Cp:
      throw DomainError("C_p carries no universal bundle");
  }
  return t;
}

Polynomial total_class(const GroupFamily& g, std::uint32_t p) {
  return total_class(g, classifying_presentation(g, p).algebra());
}

Polynomial euler_class(const GroupFamily& g, const AlgebraPtr& algebra) {
  if (g.tag != Family::SO || g.rank % 2 != 0 || g.rank < 2)
    throw DomainError("Euler class needs SO(n) with n even, got " + describe(g));
  return Polynomial::generator(algebra, "e" + std::to_string(g.rank));
}

Polynomial euler_class(const GroupFamily& g, std::uint32_t p) {
  if (g.tag != Family::SO || g.rank % 2 != 0 || g.rank < 2)
    throw DomainError("Euler class needs SO(n) with n even, got " + describe(g));
  return euler_class(g, classifying_presentation(g, p).algebra());
}

Polynomial inverse_total_class(const Polynomial& t, int max_degree) {
  if (t.homogeneous_part(0) != Polynomial::constant(t.algebra(), 1))
    throw DomainError("total class must have constant term 1");
  const auto parts = t.homogeneous_parts();
  std::map<int, Polynomial> s;
  s.emplace(0, Polynomial::constant(t.algebra(), 1));
  Polynomial out = s.at(0);
  for (int d = 1; d <= max_degree; ++d) {
    Polynomial acc(t.algebra());
    for (const auto& [e, te] : parts) {
      if (e == 0 || e > d) continue;
      auto it = s.find(d - e);
      if (it != s.end()) acc = acc + te * it->second;
    }
    if (!acc.is_zero()) {
      s.emplace(d, -acc);
      out = out + s.at(d);
    }
  }
  return out;
}

AlgebraPresentation grassmann_presentation(int n, int k, std::uint32_t p) {
  if (k < 1 || k >= n)
    throw DomainError("Grassmannian needs 1 <= k < n, got n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
  auto pres = classifying_presentation(GroupFamily::unitary(k), p);
  const Polynomial inv = inverse_total_class(total_class(GroupFamily::unitary(k), pres.algebra()), 2 * n);
  std::vector<Polynomial> rels;
  for (int i = n - k + 1; i <= n; ++i) rels.push_back(inv.homogeneous_part(2 * i));
  return AlgebraPresentation(pres.algebra(), std::move(rels));
}

namespace {

// H_{n,k} with all degrees doubled: generators p1..pk in degree 4i. Allows k = n
// (the point) and k = 0 (no generators).
std::vector<GeneratorSpec> doubled_generators(int k) {
  std::vector<GeneratorSpec> gens;
  for (int i = 1; i <= k; ++i) gens.push_back({"p" + std::to_string(i), 4 * i, Parity::Even});
  return gens;
}

// Relations of the doubled H_{n,k} and its inverse series (whose degree-4i part
// is the primed class p'_i), both written in `target` after sending p_i to
// images[i-1].
std::pair<std::vector<Polynomial>, Polynomial> doubled_relations(int n, int k, std::uint32_t p,
                                                                 const AlgebraPtr& target,
                                                                 const std::vector<Polynomial>& images) {
  auto src = galgebra::make_algebra(p, doubled_generators(k));
  Polynomial t = Polynomial::constant(src, 1);
  for (int i = 1; i <= k; ++i) t = t + Polynomial::generator(src, static_cast<std::size_t>(i - 1));
  const Polynomial inv = inverse_total_class(t, 4 * n);
  std::vector<Polynomial> rels;
  for (int i = n - k + 1; i <= n; ++i) rels.push_back(inv.homogeneous_part(4 * i).substitute(target, images));
  return {rels, inv.substitute(target, images)};
}

std::vector<Polynomial> generator_images(const AlgebraPtr& target, int k, const Polynomial* top) {
  std::vector<Polynomial> images;
  for (int i = 1; i <= k; ++i) {
    if (top && i == k) images.push_back(*top);
    else images.push_back(Polynomial::generator(target, "p" + std::to_string(i)));
  }
  return images;
}

}  // namespace

AlgebraPresentation oriented_grassmann_presentation(int n, int j, std::uint32_t p) {
  if (j <= 1 || j >= n)
    throw DomainError("oriented Grassmannian needs 1 < j < n, got n=" + std::to_string(n) +
                      " j=" + std::to_string(j));
  require_odd_prime(p);
  const bool n_odd = n % 2 != 0, j_odd = j % 2 != 0;
  const std::string ej = "e" + std::to_string(j);
  const std::string eperp = "e" + std::to_string(n - j) + "_perp";

  if (n_odd && j_odd) {
    const int N = (n - 1) / 2, K = (j - 1) / 2;
    auto gens = doubled_generators(K);
    gens.push_back({eperp, n - j, Parity::Even});
    auto alg = galgebra::make_algebra(p, gens);
    auto [rels, inv] = doubled_relations(N, K, p, alg, generator_images(alg, K, nullptr));
    rels.push_back(Polynomial::generator(alg, eperp).pow(2) - inv.homogeneous_part(2 * (n - j)));
    return AlgebraPresentation(alg, std::move(rels));
  }
  if (n_odd && !j_odd) {
    // p_{j/2} is the alias e_j^2, so the relation e_j^2 = p_{j/2} is built in.
    const int N = (n - 1) / 2, K = j / 2;
    auto gens = doubled_generators(K - 1);
    gens.push_back({ej, j, Parity::Even});
    auto alg = galgebra::make_algebra(p, gens);
    const Polynomial top = Polynomial::generator(alg, ej).pow(2);
    auto [rels, inv] = doubled_relations(N, K, p, alg, generator_images(alg, K, &top));
    return AlgebraPresentation(alg, std::move(rels));
  }
  if (!n_odd && !j_odd) {
    const int N = n / 2, K = j / 2;
    auto gens = doubled_generators(K - 1);
    gens.push_back({ej, j, Parity::Even});
    gens.push_back({eperp, n - j, Parity::Even});
    auto alg = galgebra::make_algebra(p, gens);
    const Polynomial e = Polynomial::generator(alg, ej);
    const Polynomial f = Polynomial::generator(alg, eperp);
    const Polynomial top = e.pow(2);
    auto [rels, inv] = doubled_relations(N, K, p, alg, generator_images(alg, K, &top));
    rels.push_back(f.pow(2) - inv.homogeneous_part(2 * (n - j)));
    rels.push_back(e * f);
    return AlgebraPresentation(alg, std::move(rels));
  }
  // n even, j odd: the doubled Grassmannian H'_{n/2-1,(j-1)/2} with an exterior
  // class in degree n-1.
  const int N = n / 2 - 1, K = (j - 1) / 2;
  auto gens = doubled_generators(K);
  gens.push_back({"sigma" + std::to_string(n - 1), n - 1, Parity::Odd});
  auto alg = galgebra::make_algebra(p, gens);
  auto [rels, inv] = doubled_relations(N, K, p, alg, generator_images(alg, K, nullptr));
  return AlgebraPresentation(alg, std::move(rels));
}

}  // namespace cpindex::charclass
