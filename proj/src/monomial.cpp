#include "powerhom/monomial.hpp"

#include <algorithm>
#include <vector>

#include "powerhom/scalar.hpp"

namespace powerhom {

Monomial::Monomial(int nvars) : n_(nvars) {
  if (nvars < 0 || nvars > kMaxVars)
    throw Error("at most " + std::to_string(kMaxVars) + " variables are supported");
}

Monomial::Monomial(std::initializer_list<int> exps)
    : Monomial(std::span<const int>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::span<const int> exps) : Monomial(static_cast<int>(exps.size())) {
  for (int i = 0; i < n_; ++i) set(i, exps[i]);
}

void Monomial::set(int i, int e) {
  if (e < 0 || e > 0xffff) throw Error("exponent out of range");
  deg_ += e - e_[i];
  e_[i] = static_cast<std::uint16_t>(e);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (int i = 0; i < a.n_; ++i) r.e_[i] = static_cast<std::uint16_t>(a.e_[i] + b.e_[i]);
  r.deg_ = a.deg_ + b.deg_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (int i = 0; i < a.n_; ++i) r.e_[i] = static_cast<std::uint16_t>(a.e_[i] - b.e_[i]);
  r.deg_ = a.deg_ - b.deg_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  int d = 0;
  for (int i = 0; i < a.n_; ++i) {
    r.e_[i] = std::max(a.e_[i], b.e_[i]);
    d += r.e_[i];
  }
  r.deg_ = d;
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (int i = 0; i < n_; ++i) h = (h ^ e_[i]) * 1099511628211ull;
  return h;
}

std::strong_ordering degrevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (int i = a.nvars() - 1; i >= 0; --i)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case Kind::DegRevLex:
      return degrevlex_compare(a, b);
    case Kind::Lex:
      for (int i = 0; i < a.nvars(); ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
    case Kind::Elimination: {
      int da = 0, db = 0;
      for (int i = 0; i < block; ++i) {
        da += a[i];
        db += b[i];
      }
      if (da != db) return da <=> db;
      return degrevlex_compare(a, b);
    }
  }
  return std::strong_ordering::equal;
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  Monomial m(nvars);
  // Enumerate compositions recursively over the first nvars-1 slots.
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == nvars - 1) {
      m.set(i, left);
      out.push_back(m);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.set(i, e);
      self(self, i + 1, left - e);
    }
    m.set(i, 0);
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return degrevlex_compare(a, b) > 0; });
  return out;
}

}  // namespace powerhom
