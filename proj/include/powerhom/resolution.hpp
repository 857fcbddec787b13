#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "powerhom/groebner.hpp"
#include "powerhom/quotient.hpp"

namespace powerhom {

/// Graded free resolution ... -> F_2 -> F_1 -> F_0 (-> M).
///
/// spaces[j] is F_j. For j >= 1, maps[j] lists the images of the basis of F_j
/// as elements of F_{j-1}; over a quotient ring their coordinates are normal
/// forms. maps[0] is the augmentation: the generators of M inside its ambient
/// free module when M is a submodule, and empty when M is a cokernel (F_0 is
/// then the ambient module itself).
struct FreeResolution {
  std::vector<FreeModulePtr> spaces;
  std::vector<std::vector<ModuleElement>> maps;
  bool minimal = false;
  /// Set for resolutions cut off after a fixed number of steps.
  std::optional<int> truncation;
  /// Set for resolutions over R/I rather than over R.
  QuotientRingPtr quotient;

  int length() const { return static_cast<int>(spaces.size()) - 1; }
  std::size_t rank(int j) const { return spaces[j]->degrees().size(); }
};

/// Graded Betti numbers β_{j,k}: step j, internal degree k.
class BettiDiagram {
 public:
  void add(int j, int k, std::size_t count = 1);
  std::size_t at(int j, int k) const;
  std::size_t total(int j) const;
  /// Largest step with a nonzero entry (-1 for the empty diagram).
  int length() const;
  const std::map<std::pair<int, int>, std::size_t>& entries() const { return entries_; }
  std::vector<std::size_t> totals() const;
  friend bool operator==(const BettiDiagram& a, const BettiDiagram& b) { return a.entries_ == b.entries_; }
  /// Conventional table: rows are k - j, columns are j.
  std::string to_string() const;

 private:
  std::map<std::pair<int, int>, std::size_t> entries_;
};

enum class ResolutionTarget {
  /// Resolve the submodule generated by the input.
  Submodule,
  /// Resolve the cokernel F / <input>.
  Cokernel,
};

/// Minimal graded free resolution over the polynomial ring. Each step takes
/// the syzygies of the previous differential and keeps a minimal generating
/// subset (graded Nakayama), so every differential has entries in the
/// maximal ideal. length_cap bounds the number of differentials computed.
FreeResolution minimal_free_resolution(const BasisSet& gens,
                                       ResolutionTarget target = ResolutionTarget::Submodule,
                                       std::optional<int> length_cap = std::nullopt,
                                       const Limits* limits = nullptr);

/// A finitely generated graded module over A = R/I: either the residue field
/// K or a cokernel A^r / <relations> (relations over R, read modulo I).
struct QuotientModule {
  bool residue_field = true;
  FreeModulePtr ambient;
  std::vector<ModuleElement> relations;

  static QuotientModule field() { return {}; }
  static QuotientModule cokernel(FreeModulePtr ambient, std::vector<ModuleElement> relations) {
    return {false, std::move(ambient), std::move(relations)};
  }
};

enum class QuotientRoute {
  /// Linear algebra for Artinian A, lifting otherwise.
  Automatic,
  /// Degree-by-degree kernels over the standard monomial bases (Artinian A only).
  LinearAlgebra,
  /// Lift columns to R, add I times the basis vectors, take R-syzygies.
  Lifting,
};

/// First `steps` differentials of a minimal graded free resolution over A.
FreeResolution resolution_over_quotient(const QuotientRingPtr& A, const QuotientModule& module, int steps,
                                        QuotientRoute route = QuotientRoute::Automatic,
                                        const Limits* limits = nullptr);

/// Reads the graded Betti numbers off a minimal resolution.
BettiDiagram betti_diagram(const FreeResolution& res);

/// reg_j = max{k - j : β_{jk} != 0} for the steps with nonzero Betti numbers.
struct RegularityProfile {
  std::vector<std::optional<int>> reg_j;
  std::optional<int> reg;
};
RegularityProfile regularity_profile(const BettiDiagram& b);

/// Composition of consecutive differentials vanishes (modulo I over A).
bool is_complex(const FreeResolution& res);
/// No differential entry has a nonzero constant term.
bool has_minimal_entries(const FreeResolution& res);

}  // namespace powerhom
