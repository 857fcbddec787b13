#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "powerhom/groebner.hpp"
#include "powerhom/resolution.hpp"

namespace powerhom {

/// Minimal generators of I^k (k >= 1), from all products of k generators.
BasisSet ideal_power(const BasisSet& I, int k, const Limits* limits = nullptr);

/// The Rees ideal J with R(I) = R[y_1..y_m]/J, for the minimal generators of I.
struct ReesPresentation {
  std::vector<Polynomial> generators;  ///< the f_i the y_i map to
  BasisSet kernel;                     ///< reduced Gröbner basis of J in R[y]
};
ReesPresentation rees_presentation(const BasisSet& I, const Limits* limits = nullptr);

/// Image of g ∈ R[y] under y_i -> f_i t, in the ring R with t in front.
Polynomial rees_substitute(const Polynomial& g, const std::vector<Polynomial>& f);

/// Krull dimension of the fiber cone R(I)/mR(I).
int analytic_spread(const BasisSet& I, const Limits* limits = nullptr);

/// Metrics a power scan can compute.
enum Metric : unsigned {
  MetricGenerators = 1u << 0,
  MetricBetti = 1u << 1,     ///< Betti diagrams of I^k and R/I^k
  MetricReg = 1u << 2,       ///< regularity profile of I^k
  MetricRho = 1u << 3,       ///< Artin-Rees profile of I^k
  MetricSpread = 1u << 4,
  MetricPoincare = 1u << 5,  ///< Betti numbers of K over R/I^k
  MetricAll = (1u << 6) - 1,
};

struct ScanRow {
  int k = 0;
  std::size_t generators = 0;
  std::optional<BettiDiagram> betti_ideal;
  std::optional<BettiDiagram> betti_quotient;
  std::optional<RegularityProfile> regularity;
  std::optional<std::vector<int>> rho;
  std::optional<std::vector<std::size_t>> poincare;
  /// Set when a resource limit stopped this row.
  std::optional<std::string> error;
};

struct ScanTable {
  BasisSet ideal;
  int k_first = 1;
  int k_last = 0;
  unsigned metrics = 0;
  std::optional<int> analytic_spread;
  std::vector<ScanRow> rows;

  const ScanRow& row(int k) const { return rows.at(static_cast<std::size_t>(k - k_first)); }
  bool complete() const;
};

struct ScanOptions {
  unsigned metrics = MetricGenerators | MetricBetti | MetricReg | MetricRho;
  int poincare_order = 4;
  /// Limits are rebuilt for every row, so a timeout applies per k.
  std::optional<double> timeout_secs;
  std::optional<int> max_degree;
};

ScanTable power_scan(const BasisSet& I, int k_first, int k_last, const ScanOptions& options = {});

/// Polynomial fit of exact data on a tail window.
struct FitResult {
  /// False when no degree leaves enough tail points to confirm the fit.
  bool conclusive = false;
  int degree = -1;
  /// c_0 + c_1 k + ... in exact rationals.
  std::vector<mpq_class> coefficients;
  int k_first = 0;
  int k_last = 0;
  bool exact = false;

  mpq_class operator()(const mpq_class& k) const;
  std::string to_string() const;
};

/// The least degree D for which some suffix of at least D + 2 points lies on
/// one polynomial of degree D; the window is the longest such suffix.
FitResult fit_polynomial(const std::vector<std::pair<int, mpq_class>>& points);

struct Stabilization {
  bool conclusive = false;
  int onset = 0;
  long value = 0;
  std::size_t tail_length = 0;
};

/// Longest constant suffix; inconclusive when the last two values differ.
Stabilization stabilization_detect(const std::vector<std::pair<int, long>>& series);

}  // namespace powerhom
