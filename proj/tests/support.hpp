#pragma once
// Shared helpers for the test binaries: ring construction, random generators
// and a dense linear-algebra oracle that is independent of the library's own
// elimination code.

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "powerhom/groebner.hpp"
#include "powerhom/module.hpp"
#include "powerhom/parse.hpp"
#include "powerhom/polynomial.hpp"

namespace testing {

using namespace powerhom;

inline RingPtr qring(std::vector<std::string> names, MonomialOrder order = MonomialOrder::degrevlex()) {
  return make_ring(Field::rationals(), std::move(names), order);
}

inline Polynomial P(const RingPtr& R, const std::string& text) { return parse_polynomial(R, text); }

inline std::vector<Polynomial> Ps(const RingPtr& R, const std::vector<std::string>& texts) {
  return parse_polynomials(R, texts);
}

inline ModuleElement V(const FreeModulePtr& F, const std::vector<std::string>& coords) {
  std::vector<Polynomial> c;
  for (const auto& t : coords) c.push_back(parse_polynomial(F->ring(), t));
  return ModuleElement::from_coordinates(F, c);
}

inline BasisSet ideal(const RingPtr& R, const std::vector<std::string>& gens) {
  return ideal_basis(R, Ps(R, gens));
}

/// Deterministic generator of small random objects.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  Monomial monomial(int nvars, int max_degree) {
    Monomial m(nvars);
    int budget = uniform(0, max_degree);
    for (int i = 0; i < nvars && budget > 0; ++i) {
      int e = uniform(0, budget);
      m.set(i, e);
      budget -= e;
    }
    return m;
  }

  Scalar scalar(Field f, int bound = 5) {
    long num = uniform(-bound, bound);
    long den = f.is_rational() ? uniform(1, 3) : 1;
    return Scalar(f, mpq_class(num, den));
  }

  Polynomial polynomial(const RingPtr& R, int terms, int max_degree) {
    std::vector<PolyTerm> t;
    for (int i = 0; i < terms; ++i) t.push_back({scalar(R->field()), monomial(R->nvars(), max_degree)});
    return Polynomial::from_terms(R, std::move(t));
  }

  /// Random form of the given degree (possibly zero).
  Polynomial form(const RingPtr& R, int degree, int terms) {
    std::vector<PolyTerm> t;
    auto monos = monomials_of_degree(R->nvars(), degree);
    for (int i = 0; i < terms; ++i)
      t.push_back({scalar(R->field()), monos[uniform(0, static_cast<int>(monos.size()) - 1)]});
    return Polynomial::from_terms(R, std::move(t));
  }
};

/// Rank of a list of sparse rows over a field, by plain Gaussian elimination.
template <class Key>
std::size_t rank_of(const std::vector<std::map<Key, Scalar>>& rows) {
  std::map<Key, std::size_t> column;
  for (const auto& r : rows)
    for (const auto& [k, v] : r) column.emplace(k, 0);
  std::size_t ncols = 0;
  for (auto& [k, idx] : column) idx = ncols++;
  if (rows.empty()) return 0;
  Field f = rows.front().empty() ? Field::rationals() : rows.front().begin()->second.field();
  for (const auto& r : rows)
    if (!r.empty()) f = r.begin()->second.field();
  std::vector<std::vector<Scalar>> m;
  for (const auto& r : rows) {
    std::vector<Scalar> dense(ncols, Scalar::zero(f));
    for (const auto& [k, v] : r) dense[column[k]] = v;
    m.push_back(std::move(dense));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    Scalar inv = m[rank][c].inverse();
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      Scalar factor = m[r][c] * inv;
      for (std::size_t k = c; k < ncols; ++k) m[r][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

using TermKey = std::pair<std::vector<int>, std::uint32_t>;

inline TermKey key_of(const Monomial& m, std::uint32_t comp) {
  std::vector<int> e(m.nvars());
  for (int i = 0; i < m.nvars(); ++i) e[i] = m[i];
  return {e, comp};
}

inline std::map<TermKey, Scalar> row_of(const ModuleElement& v) {
  std::map<TermKey, Scalar> r;
  for (const auto& t : v.terms()) r.emplace(key_of(t.mono, t.comp), t.coef);
  return r;
}

/// Dimension of the degree-e part of the submodule generated by homogeneous
/// elements, by spanning all monomial multiples.
inline std::size_t graded_dimension(const std::vector<ModuleElement>& gens, int e) {
  std::vector<std::map<TermKey, Scalar>> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int d = g.max_degree();
    if (d > e) continue;
    const Field K = g.space()->ring()->field();
    for (const auto& m : monomials_of_degree(g.space()->ring()->nvars(), e - d))
      rows.push_back(row_of(g.times_term(Scalar::one(K), m)));
  }
  return rank_of(rows);
}

/// Dimension of the degree-e part of the kernel of the map
/// ⊕ R(-deg c_k) -> F given by the homogeneous columns.
inline std::size_t kernel_dimension(const std::vector<ModuleElement>& columns, int e) {
  std::size_t domain = 0;
  std::vector<ModuleElement> images;
  for (const auto& c : columns) {
    int d = c.max_degree();
    if (d > e) continue;
    const Field K = c.space()->ring()->field();
    for (const auto& m : monomials_of_degree(c.space()->ring()->nvars(), e - d)) {
      images.push_back(c.times_term(Scalar::one(K), m));
      ++domain;
    }
  }
  return domain - graded_dimension(images, e);
}

}  // namespace testing
