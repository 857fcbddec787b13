#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "powerhom/polynomial.hpp"

namespace powerhom {

class FreeModule;
using FreeModulePtr = std::shared_ptr<const FreeModule>;

/// Order on module monomials m*e_j. Components with a smaller priority rank
/// (by default: smaller index) are larger.
///
/// - TermOverPosition: ring order on m first, then component.
/// - PositionOverTerm: component first.
/// - Schreyer: m*e_j is compared through m*lead(g_j) in a parent module, ties
///   broken by component.
/// - Filtration: smaller total degree of m is LARGER (the lowest coefficient
///   degree leads), ties by the ring order and then component. Only a
///   well-order within a fixed internal degree, so it is used exclusively on
///   homogeneous input.
class ModuleOrder {
 public:
  enum class Kind { TermOverPosition, PositionOverTerm, Schreyer, Filtration };

  static ModuleOrder term_over_position(std::vector<int> priority = {});
  static ModuleOrder position_over_term(std::vector<int> priority = {});
  static ModuleOrder filtration();
  static ModuleOrder schreyer(FreeModulePtr parent, std::vector<Monomial> lead_monos,
                              std::vector<std::uint32_t> lead_comps);

  Kind kind() const { return kind_; }
  bool is_global() const { return kind_ != Kind::Filtration; }

  std::strong_ordering compare(const MonomialOrder& mono, const Monomial& a, std::uint32_t ca,
                               const Monomial& b, std::uint32_t cb) const;

 private:
  std::strong_ordering compare_components(std::uint32_t ca, std::uint32_t cb) const;

  Kind kind_ = Kind::TermOverPosition;
  std::vector<int> priority_;
  FreeModulePtr parent_;
  std::vector<Monomial> lead_monos_;
  std::vector<std::uint32_t> lead_comps_;
};

/// Graded free module F = ⊕ R e_j with deg e_j = degrees[j]; that is,
/// F = ⊕ R(-degrees[j]).
class FreeModule {
 public:
  FreeModule(RingPtr ring, std::vector<int> degrees,
             ModuleOrder order = ModuleOrder::term_over_position());

  const RingPtr& ring() const { return ring_; }
  int rank() const { return static_cast<int>(degrees_.size()); }
  const std::vector<int>& degrees() const { return degrees_; }
  int degree(std::uint32_t j) const { return degrees_[j]; }
  const ModuleOrder& order() const { return order_; }

  std::strong_ordering compare(const Monomial& a, std::uint32_t ca, const Monomial& b,
                               std::uint32_t cb) const {
    return order_.compare(ring_->order(), a, ca, b, cb);
  }

  FreeModulePtr with_order(ModuleOrder order) const;
  FreeModulePtr with_ring(RingPtr ring) const;

  /// Same ring variables, field and degrees (orders may differ).
  bool compatible(const FreeModule& o) const;

 private:
  RingPtr ring_;
  std::vector<int> degrees_;
  ModuleOrder order_;
};

FreeModulePtr make_free_module(RingPtr ring, std::vector<int> degrees,
                               ModuleOrder order = ModuleOrder::term_over_position());

struct ModuleTerm {
  Scalar coef;
  Monomial mono;
  std::uint32_t comp = 0;
};

/// Element of a graded free module, stored as a sparse list of terms sorted
/// strictly descending under the module order.
class ModuleElement {
 public:
  ModuleElement() = default;
  explicit ModuleElement(FreeModulePtr space) : space_(std::move(space)) {}

  static ModuleElement from_terms(FreeModulePtr space, std::vector<ModuleTerm> terms);
  static ModuleElement from_coordinates(FreeModulePtr space, const std::vector<Polynomial>& coords);
  static ModuleElement basis(FreeModulePtr space, std::uint32_t j);

  const FreeModulePtr& space() const { return space_; }
  const std::vector<ModuleTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const ModuleTerm& lead() const { return terms_.front(); }

  Polynomial coordinate(std::uint32_t j) const;
  std::vector<Polynomial> coordinates() const;

  ModuleElement operator-() const;
  ModuleElement& operator+=(const ModuleElement& o);
  ModuleElement& operator-=(const ModuleElement& o);
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
  ModuleElement scaled(const Scalar& c) const;
  ModuleElement times_term(const Scalar& c, const Monomial& m) const;
  ModuleElement times(const Polynomial& f) const;
  /// this + c*m*other, in a single merge.
  ModuleElement& add_multiple(const Scalar& c, const Monomial& m, const ModuleElement& other);
  /// Same, but only the terms from index pos on take part in the merge; every
  /// term of c*m*other must be smaller than the terms before pos.
  ModuleElement& add_multiple_from(std::size_t pos, const Scalar& c, const Monomial& m,
                                   const ModuleElement& other);
  /// Drops the terms from index pos on.
  void truncate(std::size_t pos) { if (pos < terms_.size()) terms_.resize(pos); }
  ModuleElement monic() const;

  /// Re-sorted into a compatible module (typically the same module under another order).
  ModuleElement in_space(FreeModulePtr space) const;

  /// Internal degree of a term: deg(m) + deg(e_comp).
  int term_degree(const ModuleTerm& t) const { return t.mono.degree() + space_->degree(t.comp); }
  /// Maximal internal degree over the terms (the sugar of a homogeneous element).
  int max_degree() const;
  bool is_homogeneous() const;

  friend bool operator==(const ModuleElement& a, const ModuleElement& b);

  std::string to_string() const;

 private:
  FreeModulePtr space_;
  std::vector<ModuleTerm> terms_;
};

/// Homogeneity report for a nonzero element.
struct Homogeneity {
  bool homogeneous = false;
  std::optional<int> internal_degree;
  /// Minimal total degree of a term: the k with v ∈ m^k F \ m^{k+1} F.
  int filtration_order = 0;
};

Homogeneity homogeneity(const ModuleElement& v);

/// Converts between a polynomial and an element of the rank-one module R(-shift).
ModuleElement as_vector(const Polynomial& f, const FreeModulePtr& rank_one);
Polynomial as_polynomial(const ModuleElement& v);

}  // namespace powerhom
