#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "powerhom/groebner.hpp"
#include "powerhom/linalg.hpp"

namespace powerhom {

/// A = R/I for a homogeneous ideal I, with normal forms modulo the reduced
/// degrevlex Gröbner basis and the standard monomials of each degree as a
/// field basis of A_e.
class QuotientRing {
 public:
  /// The generators are moved to a degrevlex copy of their ring.
  explicit QuotientRing(const BasisSet& ideal, const Limits* limits = nullptr);
  QuotientRing(const RingPtr& ring, const std::vector<Polynomial>& gens, const Limits* limits = nullptr);

  const RingPtr& ring() const { return ring_; }
  const BasisSet& basis() const { return gb_; }
  bool is_homogeneous() const { return homogeneous_; }
  /// Krull dimension zero (A is finite dimensional).
  bool is_artinian() const { return artinian_; }
  /// Largest degree with A_e != 0, for Artinian A.
  std::optional<int> top_degree() const { return top_; }

  Polynomial normal_form(const Polynomial& f) const;
  /// Coordinatewise normal form of a module element over R.
  ModuleElement normal_form(const ModuleElement& v) const;
  /// Cached normal form of a monomial.
  const Polynomial& monomial_normal_form(const Monomial& m) const;
  bool is_standard(const Monomial& m) const;

  /// Standard monomials of degree e in descending degrevlex order.
  const std::vector<Monomial>& standard_monomials(int e) const;
  /// Position of a standard monomial in standard_monomials(deg m), or -1.
  int standard_index(const Monomial& m) const;
  std::size_t dimension(int e) const { return standard_monomials(e).size(); }

  /// Coordinates of a normal form of degree e in the standard monomial basis.
  SparseVec coordinates(const Polynomial& normal_form) const;

 private:
  struct DegreeData {
    std::vector<Monomial> monomials;
    std::unordered_map<Monomial, int, MonomialHash> index;
  };
  const DegreeData& degree_data(int e) const;

  RingPtr ring_;
  BasisSet gb_;
  std::unique_ptr<GbEngine> engine_;
  std::vector<Monomial> leads_;
  bool homogeneous_ = true;
  bool artinian_ = false;
  std::optional<int> top_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<int, std::unique_ptr<DegreeData>> cache_;
  mutable std::unordered_map<Monomial, std::unique_ptr<Polynomial>, MonomialHash> nf_cache_;
};

using QuotientRingPtr = std::shared_ptr<const QuotientRing>;

}  // namespace powerhom
