#pragma once

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "powerhom/monomial.hpp"
#include "powerhom/scalar.hpp"

namespace powerhom {

/// Polynomial ring K[x_1..x_n] with standard grading and a fixed monomial order.
class Ring {
 public:
  Ring(Field field, std::vector<std::string> names, MonomialOrder order = MonomialOrder::degrevlex());

  Field field() const { return field_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const MonomialOrder& order() const { return order_; }
  /// Index of the named variable, or -1.
  int index_of(std::string_view name) const;

  std::shared_ptr<const Ring> with_order(MonomialOrder order) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.field_ == b.field_ && a.names_ == b.names_ && a.order_ == b.order_;
  }

 private:
  Field field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(Field field, std::vector<std::string> names,
                  MonomialOrder order = MonomialOrder::degrevlex());

bool same_ring(const RingPtr& a, const RingPtr& b);

struct PolyTerm {
  Scalar coef;
  Monomial mono;
};

/// Exact polynomial; terms are kept strictly descending under the ring order,
/// with no zero coefficients and no repeated monomials.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial constant(RingPtr ring, long c);
  static Polynomial term(RingPtr ring, const Scalar& c, const Monomial& m);
  static Polynomial variable(RingPtr ring, int i);
  /// Sorts, merges duplicates and drops zero terms.
  static Polynomial from_terms(RingPtr ring, std::vector<PolyTerm> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<PolyTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const PolyTerm& lead() const { return terms_.front(); }
  /// Maximal / minimal total degree of a term; the zero polynomial throws.
  int degree() const;
  int low_degree() const;
  bool is_homogeneous() const;
  /// Sum of the terms of total degree d.
  Polynomial homogeneous_part(int d) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Scalar& c, const Monomial& m) const;
  Polynomial monic() const;
  Polynomial pow(int e) const;

  /// Same polynomial re-sorted for another ring over the same variables.
  Polynomial in_ring(RingPtr ring) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<PolyTerm> terms_;
};

/// Image of f under the ring map x_i -> images[i] (all images in one ring).
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images);

std::string monomial_to_string(const Ring& ring, const Monomial& m);

}  // namespace powerhom
