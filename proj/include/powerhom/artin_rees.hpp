#pragma once

#include <optional>
#include <vector>

#include "powerhom/groebner.hpp"
#include "powerhom/resolution.hpp"

namespace powerhom {

/// The terms of minimal coefficient degree of a nonzero homogeneous element.
ModuleElement leading_form(const ModuleElement& x);

/// Minimal generators of the leading-form module N* of N ⊆ F, each
/// homogeneous in both the internal and the coefficient (filtration) degree.
struct LeadingFormModule {
  FreeModulePtr ambient;
  std::vector<ModuleElement> generators;
  std::vector<int> filtration_degrees;
  /// Standard-basis elements whose leading forms are the generators.
  std::vector<ModuleElement> preimages;
};

LeadingFormModule leading_form_module(const std::vector<ModuleElement>& gens, const FreeModulePtr& F,
                                      const Limits* limits = nullptr);

struct ArtinReesResult {
  int rho = 0;
  /// Filtration degrees of the minimal generators of N*, ascending.
  std::vector<int> degrees;
  /// A minimal generator of N* of filtration degree rho (absent for N = 0).
  std::optional<ModuleElement> witness;
  /// The preimages of the minimal N* generators generate N.
  bool preimages_generate = true;
};

/// ρ(N, F) = max{k : (N*/m N*)_k != 0}; the zero submodule has ρ = 0.
ArtinReesResult artin_rees_number(const std::vector<ModuleElement>& gens, const FreeModulePtr& F,
                                  const Limits* limits = nullptr);

struct ArtinReesOracle {
  int rho = 0;
  /// For rho > 0: an element of N ∩ m^rho F outside m (N ∩ m^{rho-1} F).
  std::optional<ModuleElement> failure_witness;
};

/// Definitional search: the least r with N ∩ m^i F = m^{i-r}(N ∩ m^r F) for
/// every i in (r, r + margin], using submodule intersections.
ArtinReesOracle artin_rees_oracle(const std::vector<ModuleElement>& gens, const FreeModulePtr& F, int margin = 3,
                                  const Limits* limits = nullptr);

/// ρ_0 = reg_0 (largest generator degree) and ρ_j = ρ(N_j, F_{j-1}) for the
/// syzygy modules N_j = image of the j-th differential.
std::vector<int> rho_profile(const FreeResolution& res, const Limits* limits = nullptr);
std::vector<int> rho_profile(const BasisSet& module, ResolutionTarget target = ResolutionTarget::Submodule,
                             const Limits* limits = nullptr);

/// Both sides of reg_j <= Σ_{k<=j} ρ_k - j.
struct ComparisonRow {
  int j;
  int reg_j;
  int bound;
  bool satisfied;
};
std::vector<ComparisonRow> comparison_check(const FreeResolution& res, const Limits* limits = nullptr);
std::vector<ComparisonRow> comparison_check(const std::vector<int>& rho, const RegularityProfile& reg);

/// m^d F: every monomial of degree d times every basis vector.
std::vector<ModuleElement> maximal_ideal_power_times(const FreeModulePtr& F, int d);

}  // namespace powerhom
