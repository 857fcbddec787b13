#include "powerhom/module.hpp"

#include <algorithm>
#include <sstream>

namespace powerhom {

ModuleOrder ModuleOrder::term_over_position(std::vector<int> priority) {
  ModuleOrder o;
  o.kind_ = Kind::TermOverPosition;
  o.priority_ = std::move(priority);
  return o;
}

ModuleOrder ModuleOrder::position_over_term(std::vector<int> priority) {
  ModuleOrder o;
  o.kind_ = Kind::PositionOverTerm;
  o.priority_ = std::move(priority);
  return o;
}

ModuleOrder ModuleOrder::filtration() {
  ModuleOrder o;
  o.kind_ = Kind::Filtration;
  return o;
}

ModuleOrder ModuleOrder::schreyer(FreeModulePtr parent, std::vector<Monomial> lead_monos,
                                  std::vector<std::uint32_t> lead_comps) {
  if (lead_monos.size() != lead_comps.size()) throw Error("Schreyer frame size mismatch");
  ModuleOrder o;
  o.kind_ = Kind::Schreyer;
  o.parent_ = std::move(parent);
  o.lead_monos_ = std::move(lead_monos);
  o.lead_comps_ = std::move(lead_comps);
  return o;
}

std::strong_ordering ModuleOrder::compare_components(std::uint32_t ca, std::uint32_t cb) const {
  if (ca == cb) return std::strong_ordering::equal;
  if (!priority_.empty()) return priority_[cb] <=> priority_[ca];
  return cb <=> ca;
}

std::strong_ordering ModuleOrder::compare(const MonomialOrder& mono, const Monomial& a,
                                          std::uint32_t ca, const Monomial& b,
                                          std::uint32_t cb) const {
  switch (kind_) {
    case Kind::TermOverPosition: {
      auto c = mono.compare(a, b);
      return c != 0 ? c : compare_components(ca, cb);
    }
    case Kind::PositionOverTerm: {
      auto c = compare_components(ca, cb);
      return c != 0 ? c : mono.compare(a, b);
    }
    case Kind::Filtration: {
      if (a.degree() != b.degree()) return b.degree() <=> a.degree();
      auto c = mono.compare(a, b);
      return c != 0 ? c : compare_components(ca, cb);
    }
    case Kind::Schreyer: {
      auto c = parent_->compare(a * lead_monos_[ca], lead_comps_[ca], b * lead_monos_[cb],
                                lead_comps_[cb]);
      return c != 0 ? c : compare_components(ca, cb);
    }
  }
  return std::strong_ordering::equal;
}

FreeModule::FreeModule(RingPtr ring, std::vector<int> degrees, ModuleOrder order)
    : ring_(std::move(ring)), degrees_(std::move(degrees)), order_(std::move(order)) {}

FreeModulePtr FreeModule::with_order(ModuleOrder order) const {
  return std::make_shared<const FreeModule>(ring_, degrees_, std::move(order));
}

FreeModulePtr FreeModule::with_ring(RingPtr ring) const {
  return std::make_shared<const FreeModule>(std::move(ring), degrees_, order_);
}

bool FreeModule::compatible(const FreeModule& o) const {
  return ring_->names() == o.ring_->names() && ring_->field() == o.ring_->field() &&
         degrees_ == o.degrees_;
}

FreeModulePtr make_free_module(RingPtr ring, std::vector<int> degrees, ModuleOrder order) {
  return std::make_shared<const FreeModule>(std::move(ring), std::move(degrees), std::move(order));
}

namespace {

void require_same(const ModuleElement& a, const ModuleElement& b) {
  if (a.space() != b.space() && !(a.space() && b.space() && a.space()->compatible(*b.space()) &&
                                  same_ring(a.space()->ring(), b.space()->ring())))
    throw Error("module elements belong to different free modules");
}

}  // namespace

ModuleElement ModuleElement::from_terms(FreeModulePtr space, std::vector<ModuleTerm> terms) {
  ModuleElement v(std::move(space));
  const FreeModule& F = *v.space_;
  for (const auto& t : terms) {
    if (t.comp >= static_cast<std::uint32_t>(F.rank())) throw Error("component index out of range");
    if (t.mono.nvars() != F.ring()->nvars()) throw Error("monomial has the wrong number of variables");
  }
  std::sort(terms.begin(), terms.end(), [&](const ModuleTerm& a, const ModuleTerm& b) {
    return F.compare(a.mono, a.comp, b.mono, b.comp) > 0;
  });
  for (auto& t : terms) {
    if (!v.terms_.empty() && v.terms_.back().comp == t.comp && v.terms_.back().mono == t.mono) {
      v.terms_.back().coef += t.coef;
      if (v.terms_.back().coef.is_zero()) v.terms_.pop_back();
    } else if (!t.coef.is_zero()) {
      v.terms_.push_back(std::move(t));
    }
  }
  return v;
}

ModuleElement ModuleElement::from_coordinates(FreeModulePtr space,
                                              const std::vector<Polynomial>& coords) {
  if (static_cast<int>(coords.size()) != space->rank()) throw Error("coordinate count differs from rank");
  std::vector<ModuleTerm> terms;
  for (std::uint32_t j = 0; j < coords.size(); ++j) {
    if (!coords[j].is_zero() && !(coords[j].ring()->names() == space->ring()->names()))
      throw Error("coordinate polynomial from another ring");
    for (const auto& t : coords[j].terms()) terms.push_back({t.coef, t.mono, j});
  }
  return from_terms(std::move(space), std::move(terms));
}

ModuleElement ModuleElement::basis(FreeModulePtr space, std::uint32_t j) {
  const RingPtr& R = space->ring();
  return from_terms(space, {{Scalar::one(R->field()), Monomial(R->nvars()), j}});
}

Polynomial ModuleElement::coordinate(std::uint32_t j) const {
  std::vector<PolyTerm> terms;
  for (const auto& t : terms_)
    if (t.comp == j) terms.push_back({t.coef, t.mono});
  return Polynomial::from_terms(space_->ring(), std::move(terms));
}

std::vector<Polynomial> ModuleElement::coordinates() const {
  std::vector<std::vector<PolyTerm>> parts(space_->rank());
  for (const auto& t : terms_) parts[t.comp].push_back({t.coef, t.mono});
  std::vector<Polynomial> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(Polynomial::from_terms(space_->ring(), std::move(p)));
  return out;
}

ModuleElement ModuleElement::operator-() const {
  ModuleElement r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

ModuleElement& ModuleElement::add_multiple(const Scalar& c, const Monomial& m,
                                           const ModuleElement& other) {
  return add_multiple_from(0, c, m, other);
}

ModuleElement& ModuleElement::add_multiple_from(std::size_t pos, const Scalar& c, const Monomial& m,
                                                const ModuleElement& other) {
  if (other.is_zero() || c.is_zero()) return *this;
  if (!space_) space_ = other.space_;
  require_same(*this, other);
  const FreeModule& F = *space_;
  const bool unit_mono = m.is_one();
  std::vector<ModuleTerm> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = std::min(pos, terms_.size()), j = 0;
  for (std::size_t k = 0; k < i; ++k) out.push_back(std::move(terms_[k]));
  const auto& a = terms_;
  const auto& b = other.terms_;
  Monomial bm;
  while (i < a.size() || j < b.size()) {
    if (j < b.size()) bm = unit_mono ? b[j].mono : b[j].mono * m;
    std::strong_ordering cmp = i == a.size()   ? std::strong_ordering::less
                               : j == b.size() ? std::strong_ordering::greater
                                               : F.compare(a[i].mono, a[i].comp, bm, b[j].comp);
    if (cmp > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (cmp < 0) {
      out.push_back({b[j].coef * c, bm, b[j].comp});
      ++j;
    } else {
      Scalar v = b[j].coef * c;
      v += a[i].coef;
      if (!v.is_zero()) out.push_back({std::move(v), bm, b[j].comp});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
  if (o.is_zero()) return *this;
  if (!space_) space_ = o.space_;
  const RingPtr& R = space_->ring();
  return add_multiple(Scalar::one(R->field()), Monomial(R->nvars()), o);
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o) {
  if (o.is_zero()) return *this;
  if (!space_) space_ = o.space_;
  const RingPtr& R = space_->ring();
  return add_multiple(Scalar(R->field(), -1L), Monomial(R->nvars()), o);
}

ModuleElement ModuleElement::scaled(const Scalar& c) const {
  if (c.is_zero()) return ModuleElement(space_);
  ModuleElement r = *this;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

ModuleElement ModuleElement::times_term(const Scalar& c, const Monomial& m) const {
  if (c.is_zero()) return ModuleElement(space_);
  ModuleElement r = *this;
  for (auto& t : r.terms_) {
    t.coef *= c;
    t.mono = t.mono * m;
  }
  return r;
}

ModuleElement ModuleElement::times(const Polynomial& f) const {
  ModuleElement r(space_);
  for (const auto& t : f.terms()) r.add_multiple(t.coef, t.mono, *this);
  return r;
}

ModuleElement ModuleElement::monic() const {
  if (is_zero()) return *this;
  return scaled(lead().coef.inverse());
}

ModuleElement ModuleElement::in_space(FreeModulePtr space) const {
  if (space_ && !space->compatible(*space_)) throw Error("incompatible free modules");
  return from_terms(std::move(space), terms_);
}

int ModuleElement::max_degree() const {
  if (is_zero()) throw Error("degree of the zero vector");
  int d = term_degree(terms_.front());
  for (const auto& t : terms_) d = std::max(d, term_degree(t));
  return d;
}

bool ModuleElement::is_homogeneous() const {
  for (const auto& t : terms_)
    if (term_degree(t) != term_degree(terms_.front())) return false;
  return true;
}

bool operator==(const ModuleElement& a, const ModuleElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.terms_.empty()) return true;
  // Elements sorted under different orders are compared after re-sorting.
  const std::vector<ModuleTerm>* at = &a.terms_;
  ModuleElement moved;
  if (a.space_ != b.space_) {
    moved = a.in_space(b.space_);
    at = &moved.terms_;
  }
  for (std::size_t i = 0; i < at->size(); ++i) {
    const auto& s = (*at)[i];
    const auto& t = b.terms_[i];
    if (s.comp != t.comp || !(s.mono == t.mono) || !(s.coef == t.coef)) return false;
  }
  return true;
}

std::string ModuleElement::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  auto coords = coordinates();
  os << '(';
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (j) os << ", ";
    os << coords[j].to_string();
  }
  os << ')';
  return os.str();
}

Homogeneity homogeneity(const ModuleElement& v) {
  if (v.is_zero()) throw Error("homogeneity of the zero element");
  Homogeneity h;
  h.homogeneous = v.is_homogeneous();
  if (h.homogeneous) h.internal_degree = v.term_degree(v.lead());
  h.filtration_order = v.lead().mono.degree();
  for (const auto& t : v.terms()) h.filtration_order = std::min(h.filtration_order, t.mono.degree());
  return h;
}

ModuleElement as_vector(const Polynomial& f, const FreeModulePtr& rank_one) {
  if (rank_one->rank() != 1) throw Error("expected a rank-one free module");
  return ModuleElement::from_coordinates(rank_one, {f});
}

Polynomial as_polynomial(const ModuleElement& v) {
  if (v.space()->rank() != 1) throw Error("expected a rank-one free module");
  return v.coordinate(0);
}

}  // namespace powerhom
