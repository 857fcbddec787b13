#include "powerhom/artin_rees.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace powerhom {

ModuleElement leading_form(const ModuleElement& x) {
  if (x.is_zero()) throw Error("the zero element has no leading form");
  int low = x.lead().mono.degree();
  for (const auto& t : x.terms()) low = std::min(low, t.mono.degree());
  std::vector<ModuleTerm> kept;
  for (const auto& t : x.terms())
    if (t.mono.degree() == low) kept.push_back(t);
  return ModuleElement::from_terms(x.space(), std::move(kept));
}

std::vector<ModuleElement> maximal_ideal_power_times(const FreeModulePtr& F, int d) {
  std::vector<ModuleElement> out;
  if (d < 0) d = 0;
  const auto monos = monomials_of_degree(F->ring()->nvars(), d);
  const Scalar one = Scalar::one(F->ring()->field());
  for (int j = 0; j < F->rank(); ++j)
    for (const auto& m : monos)
      out.push_back(ModuleElement::from_terms(F, {ModuleTerm{one, m, static_cast<std::uint32_t>(j)}}));
  return out;
}

namespace {

std::vector<ModuleElement> nonzero_in(const std::vector<ModuleElement>& gens, const FreeModulePtr& F) {
  std::vector<ModuleElement> out;
  for (const auto& g : gens) {
    if (!g.space()->compatible(*F)) throw Error("generators live in a different free module");
    if (!g.is_zero()) out.push_back(g.in_space(F));
  }
  return out;
}

}  // namespace

LeadingFormModule leading_form_module(const std::vector<ModuleElement>& gens, const FreeModulePtr& F,
                                      const Limits* limits) {
  LeadingFormModule out;
  out.ambient = F;
  auto nz = nonzero_in(gens, F);
  if (nz.empty()) return out;
  BasisSet sb = standard_basis({F, nz}, limits);
  std::vector<ModuleElement> forms;
  for (const auto& s : sb.elements) forms.push_back(leading_form(s));
  auto mins = minimal_generators(forms, sb.space, Grading::Filtration, {}, limits);
  for (const auto& g : mins) {
    auto it = std::find(forms.begin(), forms.end(), g);
    out.generators.push_back(g.in_space(F));
    out.filtration_degrees.push_back(g.lead().mono.degree());
    out.preimages.push_back(sb.elements[it - forms.begin()].in_space(F));
  }
  return out;
}

ArtinReesResult artin_rees_number(const std::vector<ModuleElement>& gens, const FreeModulePtr& F,
                                  const Limits* limits) {
  ArtinReesResult r;
  auto lf = leading_form_module(gens, F, limits);
  if (lf.generators.empty()) return r;
  r.degrees = lf.filtration_degrees;
  std::sort(r.degrees.begin(), r.degrees.end());
  r.rho = r.degrees.back();
  for (std::size_t i = 0; i < lf.generators.size(); ++i)
    if (lf.filtration_degrees[i] == r.rho) {
      r.witness = lf.generators[i];
      break;
    }
  BasisSet pre = buchberger({F, lf.preimages}, limits);
  for (const auto& g : nonzero_in(gens, F))
    if (!contains(pre, g)) {
      r.preimages_generate = false;
      break;
    }
  return r;
}

ArtinReesOracle artin_rees_oracle(const std::vector<ModuleElement>& gens, const FreeModulePtr& F, int margin,
                                  const Limits* limits) {
  if (margin < 1) throw Error("the oracle margin must be positive");
  ArtinReesOracle out;
  const BasisSet N{F, nonzero_in(gens, F)};
  if (N.elements.empty()) return out;

  std::map<int, BasisSet> cut;  // N ∩ m^i F
  auto section = [&](int i) -> const BasisSet& {
    auto it = cut.find(i);
    if (it != cut.end()) return it->second;
    check_limits(limits, i);
    BasisSet s = i == 0 ? buchberger(N, limits)
                        : module_intersection(N, {F, maximal_ideal_power_times(F, i)}, limits);
    return cut.emplace(i, std::move(s)).first->second;
  };
  auto shifted = [&](int r, int d) {
    BasisSet prod{F, {}};
    const auto powers = maximal_ideal_power_times(rank_one(F->ring()), d);
    for (const auto& g : section(r).elements)
      for (const auto& p : powers) prod.elements.push_back(g.times_term(p.lead().coef, p.lead().mono));
    return prod;
  };

  for (int r = 0;; ++r) {
    bool holds = true;
    for (int i = r + 1; i <= r + margin && holds; ++i)
      holds = same_submodule(section(i), shifted(r, i - r), limits);
    if (!holds) continue;
    out.rho = r;
    if (r > 0) {
      BasisSet lower = buchberger(shifted(r - 1, 1), limits);
      for (const auto& g : section(r).elements)
        if (!contains(lower, g)) {
          out.failure_witness = g;
          break;
        }
    }
    return out;
  }
}

std::vector<int> rho_profile(const FreeResolution& res, const Limits* limits) {
  if (res.quotient) throw Error("Artin-Rees numbers are defined here over the polynomial ring only");
  if (res.spaces.empty()) throw Error("empty resolution");
  std::vector<int> rho;
  const auto& d0 = res.spaces[0]->degrees();
  rho.push_back(d0.empty() ? 0 : *std::max_element(d0.begin(), d0.end()));
  for (int j = 1; j <= res.length(); ++j)
    rho.push_back(artin_rees_number(res.maps[j], res.spaces[j - 1], limits).rho);
  return rho;
}

std::vector<int> rho_profile(const BasisSet& module, ResolutionTarget target, const Limits* limits) {
  return rho_profile(minimal_free_resolution(module, target, std::nullopt, limits), limits);
}

std::vector<ComparisonRow> comparison_check(const std::vector<int>& rho, const RegularityProfile& reg) {
  std::vector<ComparisonRow> rows;
  int sum = 0;
  for (std::size_t j = 0; j < rho.size(); ++j) {
    sum += rho[j];
    if (j >= reg.reg_j.size() || !reg.reg_j[j]) continue;
    int bound = sum - static_cast<int>(j);
    rows.push_back({static_cast<int>(j), *reg.reg_j[j], bound, *reg.reg_j[j] <= bound});
  }
  return rows;
}

std::vector<ComparisonRow> comparison_check(const FreeResolution& res, const Limits* limits) {
  return comparison_check(rho_profile(res, limits), regularity_profile(betti_diagram(res)));
}

}  // namespace powerhom
