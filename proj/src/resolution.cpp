#include "powerhom/resolution.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace powerhom {

// ---------------------------------------------------------------------------
// Betti diagrams

void BettiDiagram::add(int j, int k, std::size_t count) {
  if (count) entries_[{j, k}] += count;
}

std::size_t BettiDiagram::at(int j, int k) const {
  auto it = entries_.find({j, k});
  return it == entries_.end() ? 0 : it->second;
}

std::size_t BettiDiagram::total(int j) const {
  std::size_t t = 0;
  for (const auto& [jk, c] : entries_)
    if (jk.first == j) t += c;
  return t;
}

int BettiDiagram::length() const {
  int l = -1;
  for (const auto& [jk, c] : entries_) l = std::max(l, jk.first);
  return l;
}

std::vector<std::size_t> BettiDiagram::totals() const {
  std::vector<std::size_t> t(length() + 1, 0);
  for (const auto& [jk, c] : entries_) t[jk.first] += c;
  return t;
}

std::string BettiDiagram::to_string() const {
  if (entries_.empty()) return "(zero)\n";
  int lo = 1 << 30, hi = -(1 << 30);
  for (const auto& [jk, c] : entries_) {
    lo = std::min(lo, jk.second - jk.first);
    hi = std::max(hi, jk.second - jk.first);
  }
  const int len = length();
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{""}, totals_row{"total:"};
  for (int j = 0; j <= len; ++j) {
    header.push_back(std::to_string(j));
    totals_row.push_back(std::to_string(total(j)));
  }
  rows.push_back(header);
  rows.push_back(totals_row);
  for (int r = lo; r <= hi; ++r) {
    std::vector<std::string> row{std::to_string(r) + ":"};
    for (int j = 0; j <= len; ++j) {
      std::size_t c = at(j, j + r);
      row.push_back(c ? std::to_string(c) : ".");
    }
    rows.push_back(row);
  }
  std::vector<std::size_t> width(len + 2, 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ' ';
      os << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    os << '\n';
  }
  return os.str();
}

BettiDiagram betti_diagram(const FreeResolution& res) {
  if (!res.minimal) throw Error("Betti numbers need a minimal resolution");
  BettiDiagram b;
  for (int j = 0; j <= res.length(); ++j)
    for (int d : res.spaces[j]->degrees()) b.add(j, d);
  return b;
}

RegularityProfile regularity_profile(const BettiDiagram& b) {
  RegularityProfile p;
  p.reg_j.assign(b.length() + 1, std::nullopt);
  for (const auto& [jk, c] : b.entries()) {
    auto& r = p.reg_j[jk.first];
    int v = jk.second - jk.first;
    r = r ? std::max(*r, v) : v;
  }
  for (const auto& r : p.reg_j)
    if (r) p.reg = p.reg ? std::max(*p.reg, *r) : *r;
  return p;
}

// ---------------------------------------------------------------------------
// Resolutions over R

namespace {

std::vector<int> degrees_of(const std::vector<ModuleElement>& elems) {
  std::vector<int> d;
  for (const auto& e : elems) d.push_back(e.max_degree());
  return d;
}

void require_homogeneous(const std::vector<ModuleElement>& elems) {
  for (const auto& e : elems)
    if (!e.is_zero() && !e.is_homogeneous()) throw Error("resolutions need homogeneous input");
}

}  // namespace

FreeResolution minimal_free_resolution(const BasisSet& gens, ResolutionTarget target,
                                       std::optional<int> length_cap, const Limits* limits) {
  require_homogeneous(gens.elements);
  const RingPtr& R = gens.space->ring();
  FreeResolution res;
  res.minimal = true;
  auto mins = minimal_generators(gens.elements, gens.space, Grading::Internal, {}, limits);
  if (target == ResolutionTarget::Submodule) {
    res.spaces.push_back(make_free_module(R, degrees_of(mins)));
    res.maps.push_back(mins);
  } else {
    FreeModulePtr F0 = make_free_module(R, gens.space->degrees());
    res.spaces.push_back(F0);
    res.maps.push_back({});
    if (mins.empty()) return res;
    std::vector<ModuleElement> cols;
    for (const auto& m : mins) cols.push_back(m.in_space(F0));
    res.spaces.push_back(make_free_module(R, degrees_of(mins)));
    res.maps.push_back(std::move(cols));
  }
  while (!res.maps.back().empty() && (!length_cap || res.length() < *length_cap)) {
    const int j = res.length();
    const auto& cols = res.maps[j];
    const FreeModulePtr& target_space = j == 0 ? gens.space : res.spaces[j - 1];
    auto syz = syzygy_basis(cols, target_space, limits);
    std::vector<ModuleElement> in_fj;
    for (const auto& s : syz) in_fj.push_back(s.in_space(res.spaces[j]));
    auto next = minimal_generators(in_fj, res.spaces[j], Grading::Internal, {}, limits);
    if (next.empty()) break;
    res.spaces.push_back(make_free_module(R, degrees_of(next)));
    res.maps.push_back(std::move(next));
  }
  if (length_cap && res.length() >= *length_cap) res.truncation = *length_cap;
  return res;
}

// ---------------------------------------------------------------------------
// Resolutions over A = R/I

namespace {

// Coordinates of (F)_e for a graded free A-module F with the given shifts:
// blocks (generator j) x (standard monomials of degree e - shift_j).
class GradedCoords {
 public:
  GradedCoords(const QuotientRing& A, std::vector<int> shifts) : A_(A), shifts_(std::move(shifts)) {}

  const std::vector<int>& offsets(int e) const {
    auto it = offsets_.find(e);
    if (it != offsets_.end()) return it->second;
    std::vector<int> off;
    int total = 0;
    for (int s : shifts_) {
      off.push_back(total);
      total += e - s >= 0 ? static_cast<int>(A_.dimension(e - s)) : 0;
    }
    off.push_back(total);
    return offsets_.emplace(e, std::move(off)).first->second;
  }
  int dimension(int e) const { return offsets(e).back(); }

  // (generator, monomial) for a coordinate index.
  std::pair<int, const Monomial*> locate(int e, int index) const {
    const auto& off = offsets(e);
    int j = static_cast<int>(std::upper_bound(off.begin(), off.end() - 1, index) - off.begin()) - 1;
    return {j, &A_.standard_monomials(e - shifts_[j])[index - off[j]]};
  }

  // Coordinates of m * v where v is homogeneous of degree e - deg m with
  // normal-form coordinates; accumulates c * (m * v) into out.
  void add_product(int e, const Scalar& c, const Monomial& m, const ModuleElement& v,
                   std::vector<std::pair<int, Scalar>>& out) const {
    const auto& off = offsets(e);
    for (const auto& t : v.terms()) {
      const Polynomial& nf = A_.monomial_normal_form(t.mono * m);
      for (const auto& u : nf.terms())
        out.emplace_back(off[t.comp] + A_.standard_index(u.mono), c * t.coef * u.coef);
    }
  }

  ModuleElement element(int e, const SparseVec& v, const FreeModulePtr& space) const {
    std::vector<ModuleTerm> terms;
    for (const auto& [idx, c] : v) {
      auto [j, mono] = locate(e, idx);
      terms.push_back({c, *mono, static_cast<std::uint32_t>(j)});
    }
    return ModuleElement::from_terms(space, std::move(terms));
  }

 private:
  const QuotientRing& A_;
  std::vector<int> shifts_;
  mutable std::map<int, std::vector<int>> offsets_;
};

// Minimal generators of a graded submodule Z of F given degree-wise by
// spanning sets: new generators in degree e complement the variables times
// Z_{e-1}.
std::vector<ModuleElement> minimal_from_pieces(const QuotientRing& A, const GradedCoords& coords,
                                               const FreeModulePtr& space, int lo, int hi,
                                               const std::function<std::vector<SparseVec>(int)>& piece,
                                               const Limits* limits) {
  const RingPtr& R = A.ring();
  const Scalar one = Scalar::one(R->field());
  std::vector<ModuleElement> gens;
  std::vector<SparseVec> previous;
  for (int e = lo; e <= hi; ++e) {
    check_limits(limits, e);
    Echelon span;
    for (const auto& z : previous) {
      ModuleElement ze = coords.element(e - 1, z, space);
      for (int v = 0; v < R->nvars(); ++v) {
        std::vector<std::pair<int, Scalar>> out;
        coords.add_product(e, one, Monomial::variable(R->nvars(), v), ze, out);
        span.insert(sparse_from(std::move(out)));
      }
    }
    std::vector<SparseVec> current = piece(e);
    for (const auto& z : current)
      if (span.insert(z)) gens.push_back(coords.element(e, z, space));
    previous = std::move(current);
  }
  return gens;
}

FreeResolution quotient_by_linear_algebra(const QuotientRingPtr& Ap, const QuotientModule& module, int steps,
                                          const Limits* limits) {
  const QuotientRing& A = *Ap;
  if (!A.is_artinian() || !A.is_homogeneous() || !A.top_degree())
    throw Error("the linear-algebra route needs a homogeneous Artinian quotient");
  const int top = *A.top_degree();
  const RingPtr& R = A.ring();
  const Field K = R->field();
  FreeResolution res;
  res.quotient = Ap;
  res.minimal = true;
  res.truncation = steps;

  std::vector<int> shifts0 = module.residue_field ? std::vector<int>{0} : module.ambient->degrees();
  res.spaces.push_back(make_free_module(R, shifts0));
  res.maps.push_back({});
  if (steps <= 0) return res;

  auto coords = std::make_unique<GradedCoords>(A, shifts0);
  std::vector<ModuleElement> next;
  {
    const FreeModulePtr& F0 = res.spaces[0];
    int lo, hi;
    std::function<std::vector<SparseVec>(int)> piece;
    std::vector<ModuleElement> rels;
    if (module.residue_field) {
      lo = 1;
      hi = top;
      piece = [&](int e) {
        std::vector<SparseVec> all;
        for (int i = 0; i < coords->dimension(e); ++i) all.push_back({{i, Scalar::one(K)}});
        return all;
      };
    } else {
      for (const auto& r : module.relations) {
        if (r.is_zero()) continue;
        if (!r.is_homogeneous()) throw Error("relations must be homogeneous");
        rels.push_back(A.normal_form(r.in_space(F0)));
      }
      lo = 1 << 30;
      hi = -(1 << 30);
      for (const auto& r : rels)
        if (!r.is_zero()) lo = std::min(lo, r.max_degree());
      for (int s : shifts0) hi = std::max(hi, s + top);
      piece = [&](int e) {
        std::vector<SparseVec> span;
        for (const auto& r : rels) {
          if (r.is_zero() || r.max_degree() > e) continue;
          for (const auto& m : A.standard_monomials(e - r.max_degree())) {
            std::vector<std::pair<int, Scalar>> out;
            coords->add_product(e, Scalar::one(K), m, r, out);
            auto v = sparse_from(std::move(out));
            if (!v.empty()) span.push_back(std::move(v));
          }
        }
        return span;
      };
    }
    next = minimal_from_pieces(A, *coords, F0, lo, hi, piece, limits);
  }

  for (int i = 1; i <= steps && !next.empty(); ++i) {
    std::vector<int> shifts = degrees_of(next);
    res.spaces.push_back(make_free_module(R, shifts));
    res.maps.push_back(next);
    if (i == steps) break;
    // Kernel of d_i : F_i -> F_{i-1}, degree by degree.
    const FreeModulePtr& Fi = res.spaces[i];
    auto target_coords = std::move(coords);
    coords = std::make_unique<GradedCoords>(A, shifts);
    const auto& cols = res.maps[i];
    int lo = *std::min_element(shifts.begin(), shifts.end());
    int hi = *std::max_element(shifts.begin(), shifts.end()) + top;
    auto piece = [&](int e) {
      std::vector<SparseVec> images;
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (e < shifts[j]) continue;
        for (const auto& m : A.standard_monomials(e - shifts[j])) {
          std::vector<std::pair<int, Scalar>> out;
          target_coords->add_product(e, Scalar::one(K), m, cols[j], out);
          images.push_back(sparse_from(std::move(out)));
        }
      }
      return kernel_basis(images, K);
    };
    next = minimal_from_pieces(A, *coords, Fi, lo, hi, piece, limits);
  }
  return res;
}

FreeResolution quotient_by_lifting(const QuotientRingPtr& Ap, const QuotientModule& module, int steps,
                                   const Limits* limits) {
  const QuotientRing& A = *Ap;
  if (!A.is_homogeneous()) throw Error("resolutions over a quotient need a homogeneous ideal");
  const RingPtr& R = A.ring();
  const auto ideal_gens = A.basis().polynomials();
  FreeResolution res;
  res.quotient = Ap;
  res.minimal = true;
  res.truncation = steps;

  std::vector<int> shifts0 = module.residue_field ? std::vector<int>{0} : module.ambient->degrees();
  res.spaces.push_back(make_free_module(R, shifts0));
  res.maps.push_back({});
  if (steps <= 0) return res;

  // I * F as a list of vectors.
  auto ideal_times_basis = [&](const FreeModulePtr& F) {
    std::vector<ModuleElement> out;
    for (int u = 0; u < F->rank(); ++u)
      for (const auto& g : ideal_gens)
        out.push_back(ModuleElement::basis(F, u).times(g));
    return out;
  };

  std::vector<ModuleElement> cols;
  const FreeModulePtr& F0 = res.spaces[0];
  if (module.residue_field) {
    for (int v = 0; v < R->nvars(); ++v)
      cols.push_back(A.normal_form(as_vector(Polynomial::variable(R, v), F0)));
  } else {
    for (const auto& r : module.relations) {
      if (r.is_zero()) continue;
      if (!r.is_homogeneous()) throw Error("relations must be homogeneous");
      cols.push_back(A.normal_form(r.in_space(F0)));
    }
  }
  auto next = minimal_generators(cols, F0, Grading::Internal, ideal_times_basis(F0), limits);

  for (int i = 1; i <= steps && !next.empty(); ++i) {
    res.spaces.push_back(make_free_module(R, degrees_of(next)));
    res.maps.push_back(next);
    if (i == steps) break;
    const FreeModulePtr& Fi = res.spaces[i];
    const FreeModulePtr& Fprev = res.spaces[i - 1];
    std::vector<ModuleElement> augmented = res.maps[i];
    const std::size_t r = augmented.size();
    for (auto& extra : ideal_times_basis(Fprev)) augmented.push_back(std::move(extra));
    auto syz = syzygy_basis(augmented, Fprev, limits);
    std::vector<ModuleElement> projected;
    for (const auto& s : syz) {
      std::vector<ModuleTerm> terms;
      for (const auto& t : s.terms())
        if (t.comp < r) terms.push_back(t);
      auto p = A.normal_form(ModuleElement::from_terms(Fi, std::move(terms)));
      if (!p.is_zero()) projected.push_back(std::move(p));
    }
    next = minimal_generators(projected, Fi, Grading::Internal, ideal_times_basis(Fi), limits);
  }
  return res;
}

}  // namespace

FreeResolution resolution_over_quotient(const QuotientRingPtr& A, const QuotientModule& module, int steps,
                                        QuotientRoute route, const Limits* limits) {
  if (steps < 0) throw Error("the number of steps must be non-negative");
  if (!module.residue_field && (!module.ambient || !same_ring(module.ambient->ring(), A->ring())))
    throw Error("the module must be presented over the quotient's ring");
  if (route == QuotientRoute::Automatic)
    route = A->is_artinian() && A->is_homogeneous() ? QuotientRoute::LinearAlgebra : QuotientRoute::Lifting;
  return route == QuotientRoute::LinearAlgebra ? quotient_by_linear_algebra(A, module, steps, limits)
                                               : quotient_by_lifting(A, module, steps, limits);
}

// ---------------------------------------------------------------------------
// Checks

bool is_complex(const FreeResolution& res) {
  for (int j = 1; j <= res.length(); ++j) {
    const auto& prev = res.maps[j - 1];
    if (prev.empty()) continue;
    for (const auto& c : res.maps[j]) {
      ModuleElement image(prev.front().space());
      for (std::size_t k = 0; k < prev.size(); ++k) {
        Polynomial coef = c.coordinate(static_cast<std::uint32_t>(k));
        if (!coef.is_zero()) image += prev[k].times(coef);
      }
      if (res.quotient) image = res.quotient->normal_form(image);
      if (!image.is_zero()) return false;
    }
  }
  return true;
}

bool has_minimal_entries(const FreeResolution& res) {
  for (int j = 1; j <= res.length(); ++j)
    for (const auto& c : res.maps[j])
      for (const auto& t : c.terms())
        if (t.mono.is_one()) return false;
  return true;
}

}  // namespace powerhom
