#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace powerhom {

inline constexpr int kMaxVars = 16;

/// Dense exponent vector with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars);
  Monomial(std::initializer_list<int> exps);
  explicit Monomial(std::span<const int> exps);

  static Monomial variable(int nvars, int i) {
    Monomial m(nvars);
    m.set(i, 1);
    return m;
  }

  int nvars() const { return n_; }
  int degree() const { return deg_; }
  int operator[](int i) const { return e_[i]; }
  void set(int i, int e);
  bool is_one() const { return deg_ == 0; }

  bool divides(const Monomial& o) const {
    for (int i = 0; i < n_; ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& o) const {
    for (int i = 0; i < n_; ++i)
      if (e_[i] && o.e_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::int32_t deg_ = 0;
  std::int32_t n_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Total monomial orders on a polynomial ring. Elimination(k) compares the
/// degree in the first k variables first and breaks ties by degrevlex, so
/// those variables are eliminated.
struct MonomialOrder {
  enum class Kind { DegRevLex, Lex, Elimination };
  Kind kind = Kind::DegRevLex;
  int block = 0;

  static MonomialOrder degrevlex() { return {}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder elimination(int k) { return {Kind::Elimination, k}; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

std::strong_ordering degrevlex_compare(const Monomial& a, const Monomial& b);

/// All monomials of the given total degree in nvars variables, in
/// descending degrevlex order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

}  // namespace powerhom
