#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "powerhom/linalg.hpp"
#include "powerhom/powers_rees.hpp"
#include "powerhom/quotient.hpp"
#include "powerhom/series.hpp"

namespace powerhom {

/// Element Σ e_S ⊗ a_S of the Koszul complex on the variables, keyed by the
/// bitmask of S. Coefficients are kept in normal form.
using KoszulChain = std::map<std::uint32_t, Polynomial>;

/// Wedge product of chains (coefficients are not reduced).
KoszulChain wedge(const KoszulChain& a, const KoszulChain& b);
std::string chain_to_string(const KoszulChain& c);

struct KoszulClass {
  int i = 0;
  int e = 0;  ///< internal degree: |S| + deg a_S
  KoszulChain rep;
};

/// Koszul homology H_i(A) of A = R/I for i <= i_max, computed one internal
/// degree at a time by exact linear algebra over Λ^i K^n ⊗ A_{e-i}.
class KoszulHomology {
 public:
  /// The default degree bound is the largest shift in the minimal resolution
  /// of A over R; homology vanishes above it.
  KoszulHomology(QuotientRingPtr A, int i_max, std::optional<int> degree_bound = std::nullopt,
                 const Limits* limits = nullptr);

  const QuotientRing& ring() const { return *A_; }
  const QuotientRingPtr& ring_ptr() const { return A_; }
  int i_max() const { return i_max_; }
  int degree_bound() const { return bound_; }
  int nvars() const { return n_; }

  std::size_t dimension(int i, int e) const;
  std::size_t total(int i) const;
  /// Homology basis representatives in homological index i, by degree.
  std::vector<KoszulClass> classes(int i) const;

  KoszulChain differential(const KoszulChain& c) const;
  KoszulChain normal_form(const KoszulChain& c) const;
  bool is_cycle(const KoszulChain& c) const { return differential(c).empty(); }
  /// c must be a homogeneous cycle of index i and degree e, in normal form.
  bool is_boundary(const KoszulChain& c, int i, int e) const;
  /// Dimension of the span of the given cycles modulo boundaries.
  std::size_t homology_rank(const std::vector<KoszulChain>& cycles, int i, int e) const;

  SparseVec coordinates(const KoszulChain& c, int i, int e) const;
  KoszulChain chain(const SparseVec& v, int i, int e) const;

 private:
  struct Component {
    std::vector<std::uint32_t> subsets;
    std::map<std::uint32_t, int> subset_index;
    int block = 0;
    bool boundaries_ready = false;
    Echelon boundaries;
    bool homology_ready = false;
    std::vector<SparseVec> homology;
  };
  Component& component(int i, int e) const;
  const Component& with_boundaries(int i, int e) const;
  const Component& with_homology(int i, int e) const;

  QuotientRingPtr A_;
  int i_max_ = 0;
  int bound_ = 0;
  int n_ = 0;
  const Limits* limits_ = nullptr;
  mutable std::map<std::pair<int, int>, Component> comps_;
};

struct ProductWitness {
  KoszulClass left;
  KoszulClass right;
  KoszulChain product;
};

struct TorProductReport {
  bool trivial = true;
  std::vector<ProductWitness> witnesses;
};

/// Multiplies all pairs of basis classes of positive index with i + i' <= i_max
/// and tests the products for being boundaries.
TorProductReport tor_product_check(const KoszulHomology& H, std::size_t max_witnesses = 4);

/// I^k, R/I^k and H(R/I^k) for one ideal, built on demand.
class PowerFamily {
 public:
  PowerFamily(const BasisSet& I, int i_max, const Limits* limits = nullptr);

  const RingPtr& ring() const { return ring_; }
  /// Minimal generators of I^k; k = 0 gives the unit ideal.
  const BasisSet& power(int k);
  /// Gröbner basis of I^k.
  const BasisSet& power_basis(int k);
  const QuotientRingPtr& quotient(int k);
  const KoszulHomology& homology(int k);

 private:
  RingPtr ring_;
  BasisSet ideal_;
  int i_max_;
  const Limits* limits_;
  std::map<int, BasisSet> powers_, bases_;
  std::map<int, QuotientRingPtr> quotients_;
  std::map<int, std::unique_ptr<KoszulHomology>> homology_;
};

/// a * v = a u + I^{s+j} K(R) for a ∈ I^j and a cycle v of K(R/I^s).
KoszulChain star_multiply(PowerFamily& family, const Polynomial& a, int j, const KoszulChain& v, int s);

struct StarRow {
  int i = 0;
  std::size_t image_dimension = 0;
  std::size_t target_dimension = 0;
  bool surjective = false;
};

/// Compares the span of I^j * H_i(R/I^s) with H_i(R/I^{s+j}) for 1 <= i <= i_max.
std::vector<StarRow> star_surjectivity_check(PowerFamily& family, int s, int j, int i_max);

/// (1+z)^d / (1 - Σ_i β_i z^{i+1}) through order t.
TruncatedSeries golod_series(int d, const std::vector<long>& betti, int t);

/// Σ β_i^A(K) z^i through order t from a minimal resolution of K over A.
TruncatedSeries poincare_actual(const QuotientRingPtr& A, int t, const Limits* limits = nullptr);

struct GolodVerdict {
  int order = 0;
  TruncatedSeries actual;
  TruncatedSeries bound;
  bool series_equal = false;
  std::optional<int> first_discrepancy;
  bool products_trivial = false;
  std::vector<ProductWitness> witnesses;
  /// Every checked necessary condition holds through the truncation order.
  bool golod() const { return series_equal && products_trivial; }
};

/// Golod test for R/I^k with R the polynomial ring of I (d = number of variables).
GolodVerdict golod_test(const BasisSet& I, int k, int t, const Limits* limits = nullptr);

/// ε_0, ε_1, ... with P = Π_i (1 + (-1)^i z^{i+1})^{(-1)^i ε_i}.
struct DeviationSequence {
  std::vector<long> eps;
  int order = 0;
  friend bool operator==(const DeviationSequence&, const DeviationSequence&) = default;
};

/// Peels the factors off log P order by order; ε_0..ε_{t-1} for a series of
/// order t. Throws when a deviation comes out non-integral.
DeviationSequence deviations_from_series(const TruncatedSeries& P);
/// Solves the coefficient equations for the Golod bound directly from d and β.
DeviationSequence deviations_via_recursion(int d, const std::vector<long>& betti, int t);
/// The product expansion, through order t.
TruncatedSeries series_from_deviations(const DeviationSequence& eps, int t);

struct DeviationScanRow {
  int k = 0;
  std::vector<long> betti;  ///< β_1..β_d of R/I^k over R
  TruncatedSeries poincare;
  DeviationSequence deviations;
  bool series_equal = false;
  /// P_i = C(d,i) + Σ_j β_j P_{i-j-1} through order t (checked on rows whose
  /// series matches the Golod bound).
  std::optional<bool> recursion_holds;
};

struct DegreeCheck {
  int i = 0;
  FitResult fit;
  int predicted = 0;
  bool matches = false;
};

struct DeviationScan {
  int spread = 0;
  std::vector<DeviationScanRow> rows;
  std::vector<DegreeCheck> betti_fits;      ///< β_i^{R/I^k}(K), i = 0..i_max
  std::vector<DegreeCheck> deviation_fits;  ///< ε_i(R/I^k), i = 0..min(i_max, t-1)
};

DeviationScan deviation_degree_scan(const BasisSet& I, int k_first, int k_last, int i_max, int t,
                                    const Limits* limits = nullptr);

}  // namespace powerhom
