#include "powerhom/quotient.hpp"

namespace powerhom {

QuotientRing::QuotientRing(const RingPtr& ring, const std::vector<Polynomial>& gens, const Limits* limits)
    : QuotientRing(ideal_basis(ring, gens), limits) {}

QuotientRing::QuotientRing(const BasisSet& ideal, const Limits* limits) {
  if (ideal.space->rank() != 1) throw Error("a quotient ring needs an ideal");
  const RingPtr& src = ideal.space->ring();
  ring_ = src->order() == MonomialOrder::degrevlex() ? src : src->with_order(MonomialOrder::degrevlex());
  std::vector<Polynomial> gens;
  for (const auto& p : ideal.polynomials()) {
    gens.push_back(p.in_ring(ring_));
    homogeneous_ = homogeneous_ && p.is_homogeneous();
  }
  gb_ = buchberger(ideal_basis(ring_, gens), limits);
  engine_ = std::make_unique<GbEngine>(GbEngine::from_basis(gb_));
  for (const auto& g : gb_.elements) leads_.push_back(g.lead().mono);
  artinian_ = krull_dimension(gb_, limits) <= 0;
  if (artinian_ && homogeneous_) {
    int e = 0;
    while (!standard_monomials(e).empty()) ++e;
    top_ = e - 1;
  }
}

Polynomial QuotientRing::normal_form(const Polynomial& f) const {
  if (f.is_zero()) return f.ring() == ring_ ? f : Polynomial(ring_);
  const Polynomial g = f.ring() == ring_ ? f : f.in_ring(ring_);
  return as_polynomial(engine_->reduce(as_vector(g, gb_.space)));
}

ModuleElement QuotientRing::normal_form(const ModuleElement& v) const {
  if (gb_.elements.empty() || v.is_zero()) return v;
  auto coords = v.coordinates();
  for (auto& c : coords) c = normal_form(c);
  return ModuleElement::from_coordinates(v.space(), coords);
}

const Polynomial& QuotientRing::monomial_normal_form(const Monomial& m) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = nf_cache_.find(m);
    if (it != nf_cache_.end()) return *it->second;
  }
  auto nf = std::make_unique<Polynomial>(normal_form(Polynomial::term(ring_, Scalar::one(ring_->field()), m)));
  std::lock_guard<std::mutex> lock(mutex_);
  return *nf_cache_.try_emplace(m, std::move(nf)).first->second;
}

bool QuotientRing::is_standard(const Monomial& m) const {
  for (const auto& l : leads_)
    if (l.divides(m)) return false;
  return true;
}

const QuotientRing::DegreeData& QuotientRing::degree_data(int e) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(e);
  if (it != cache_.end()) return *it->second;
  auto data = std::make_unique<DegreeData>();
  for (const auto& m : monomials_of_degree(ring_->nvars(), e))
    if (is_standard(m)) {
      data->index.emplace(m, static_cast<int>(data->monomials.size()));
      data->monomials.push_back(m);
    }
  return *cache_.emplace(e, std::move(data)).first->second;
}

const std::vector<Monomial>& QuotientRing::standard_monomials(int e) const { return degree_data(e).monomials; }

int QuotientRing::standard_index(const Monomial& m) const {
  const auto& d = degree_data(m.degree());
  auto it = d.index.find(m);
  return it == d.index.end() ? -1 : it->second;
}

SparseVec QuotientRing::coordinates(const Polynomial& nf) const {
  std::vector<std::pair<int, Scalar>> entries;
  for (const auto& t : nf.terms()) {
    int idx = standard_index(t.mono);
    if (idx < 0) throw Error("coordinates requested for a polynomial that is not in normal form");
    entries.emplace_back(idx, t.coef);
  }
  return sparse_from(std::move(entries));
}

}  // namespace powerhom
