#include "powerhom/groebner.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace powerhom {

std::vector<Polynomial> BasisSet::polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(as_polynomial(e));
  return out;
}

FreeModulePtr rank_one(const RingPtr& ring) { return make_free_module(ring, {0}); }

BasisSet ideal_basis(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  BasisSet b;
  b.space = rank_one(ring);
  for (const auto& g : gens)
    if (!g.is_zero()) b.elements.push_back(as_vector(g.in_ring(ring), b.space));
  return b;
}

// ---------------------------------------------------------------------------
// GbEngine

GbEngine::GbEngine(FreeModulePtr space, Options options)
    : space_(std::move(space)), options_(std::move(options)) {
  ideal_case_ = space_->rank() == 1;
  leads_by_comp_.resize(space_->rank());
}

GbEngine GbEngine::from_basis(const BasisSet& gb) {
  GbEngine e(gb.space);
  for (const auto& g : gb.elements) {
    if (g.is_zero()) continue;
    ModuleElement f = g.space() == gb.space ? g.monic() : g.in_space(gb.space).monic();
    int idx = static_cast<int>(e.entries_.size());
    e.leads_by_comp_[f.lead().comp].push_back({f.lead().mono, idx});
    e.entries_.push_back({std::move(f), ModuleElement(), 0, true});
  }
  return e;
}

void GbEngine::add(const ModuleElement& g) {
  ModuleElement rep = options_.track_space
                          ? ModuleElement::basis(options_.track_space, generators_added_)
                          : ModuleElement();
  add(g, rep);
}

void GbEngine::add(const ModuleElement& g, const ModuleElement& rep) {
  ++generators_added_;
  if (g.is_zero()) return;
  ModuleElement h = g.space() == space_ ? g : g.in_space(space_);
  require_reducible(h);
  int sugar = h.max_degree();
  queue_.emplace(sugar, Work{-1, std::move(h), rep});
}

bool GbEngine::has_pending(std::optional<int> cap) const {
  for (const auto& [sugar, w] : queue_) {
    if (cap && sugar > *cap) return false;
    if (w.pair < 0 || pairs_[w.pair].alive) return true;
  }
  return false;
}

void GbEngine::require_reducible(const ModuleElement& v) const {
  if (!space_->order().is_global() && !v.is_homogeneous())
    throw Error("reduction under a local order needs homogeneous input");
}

int GbEngine::find_reducer(const Monomial& m, std::uint32_t comp) const {
  for (const auto& [lead, idx] : leads_by_comp_[comp])
    if (lead.divides(m)) return idx;
  return -1;
}

ModuleElement GbEngine::reduce_impl(ModuleElement p, ModuleElement* rep,
                                    std::vector<Quotient>* steps) const {
  std::size_t pos = 0;
  while (pos < p.size()) {
    const ModuleTerm& t = p.terms()[pos];
    int r = find_reducer(t.mono, t.comp);
    if (r < 0) {
      ++pos;
      continue;
    }
    const ModuleElement& g = entries_[r].f;
    Scalar c = -(t.coef / g.lead().coef);
    Monomial m = t.mono / g.lead().mono;
    if (rep && !entries_[r].rep.is_zero()) rep->add_multiple(c, m, entries_[r].rep);
    if (steps) steps->push_back({r, -c, m});
    p.add_multiple_from(pos, c, m, g);
  }
  return p;
}

ModuleElement GbEngine::reduce(const ModuleElement& v) const {
  if (v.is_zero()) return v;
  ModuleElement p = v.space() == space_ ? v : v.in_space(space_);
  require_reducible(p);
  return reduce_impl(std::move(p), nullptr, nullptr);
}

ModuleElement GbEngine::reduce(const ModuleElement& v, std::vector<Quotient>& steps) const {
  steps.clear();
  if (v.is_zero()) return v;
  ModuleElement p = v.space() == space_ ? v : v.in_space(space_);
  require_reducible(p);
  return reduce_impl(std::move(p), nullptr, &steps);
}

void GbEngine::complete(std::optional<int> cap) {
  const Field K = space_->ring()->field();
  const Scalar one = Scalar::one(K), minus_one(K, -1L);
  while (!queue_.empty()) {
    auto it = queue_.begin();
    if (cap && it->first > *cap) break;
    int sugar = it->first;
    Work w = std::move(it->second);
    queue_.erase(it);
    ModuleElement h, rep;
    if (w.pair < 0) {
      h = std::move(w.gen);
      rep = std::move(w.rep);
    } else {
      Pair& p = pairs_[w.pair];
      if (!p.alive) continue;
      p.alive = false;
      const Entry& a = entries_[p.i];
      const Entry& b = entries_[p.j];
      Monomial ma = p.lcm / a.f.lead().mono, mb = p.lcm / b.f.lead().mono;
      h = a.f.times_term(one, ma);
      h.add_multiple(minus_one, mb, b.f);
      if (options_.track_space) {
        rep = a.rep.times_term(one, ma);
        rep.add_multiple(minus_one, mb, b.rep);
      }
    }
    check_limits(options_.limits, sugar);
    h = reduce_impl(std::move(h), options_.track_space ? &rep : nullptr, nullptr);
    if (!h.is_zero()) insert(std::move(h), std::move(rep), sugar);
  }
}

void GbEngine::insert(ModuleElement h, ModuleElement rep, int sugar) {
  Scalar c = h.lead().coef.inverse();
  h = h.scaled(c);
  if (!rep.is_zero()) rep = rep.scaled(c);
  const int t = static_cast<int>(entries_.size());
  const Monomial lm = h.lead().mono;
  const std::uint32_t comp = h.lead().comp;
  const int lm_deg = lm.degree();

  // Gebauer-Möller update.
  const auto& cands = leads_by_comp_[comp];
  const std::size_t n = cands.size();
  std::vector<Monomial> lcms(n);
  std::vector<char> coprime(n), in_c(n, 1), in_d(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    lcms[k] = lcm(cands[k].first, lm);
    coprime[k] = ideal_case_ && cands[k].first.coprime(lm);
  }
  for (std::size_t k = 0; k < n; ++k) {
    in_c[k] = 0;
    bool keep = coprime[k];
    if (!keep) {
      keep = true;
      for (std::size_t l = 0; l < n; ++l)
        if ((in_c[l] || in_d[l]) && lcms[l].divides(lcms[k])) {
          keep = false;
          break;
        }
    }
    in_d[k] = keep;
  }
  for (auto& [s, w] : queue_) {
    if (w.pair < 0) continue;
    Pair& p = pairs_[w.pair];
    if (!p.alive || entries_[p.i].f.lead().comp != comp || !lm.divides(p.lcm)) continue;
    if (!(lcm(entries_[p.i].f.lead().mono, lm) == p.lcm) &&
        !(lcm(entries_[p.j].f.lead().mono, lm) == p.lcm))
      p.alive = false;
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!in_d[k] || coprime[k]) continue;
    const int g = cands[k].second;
    const Entry& eg = entries_[g];
    int deg_l = lcms[k].degree();
    int s = std::max(eg.sugar + deg_l - eg.f.lead().mono.degree(), sugar + deg_l - lm_deg);
    pairs_.push_back({g, t, lcms[k], true});
    queue_.emplace(s, Work{static_cast<int>(pairs_.size()) - 1, {}, {}});
  }

  auto& leads = leads_by_comp_[comp];
  for (auto it = leads.begin(); it != leads.end();) {
    if (lm.divides(it->first)) {
      entries_[it->second].active = false;
      it = leads.erase(it);
    } else {
      ++it;
    }
  }
  leads.push_back({lm, t});
  entries_.push_back({std::move(h), std::move(rep), sugar, true});
}

std::vector<int> GbEngine::active() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(entries_.size()); ++i)
    if (entries_[i].active) out.push_back(i);
  return out;
}

std::vector<ModuleElement> GbEngine::basis() const {
  std::vector<ModuleElement> out;
  for (int i : active()) out.push_back(entries_[i].f);
  return out;
}

BasisSet GbEngine::reduced_basis() const {
  BasisSet b;
  b.space = space_;
  for (int i : active()) {
    // Leading terms of a minimal basis are pairwise non-divisible, so this
    // only rewrites the tail.
    const ModuleElement& g = entries_[i].f;
    ModuleElement tail = g;
    ModuleElement head = ModuleElement::from_terms(space_, {g.lead()});
    tail -= head;
    tail = reduce_impl(std::move(tail), nullptr, nullptr);
    b.elements.push_back(head + tail);
  }
  std::sort(b.elements.begin(), b.elements.end(), [&](const ModuleElement& x, const ModuleElement& y) {
    return space_->compare(x.lead().mono, x.lead().comp, y.lead().mono, y.lead().comp) < 0;
  });
  b.groebner = space_->order().is_global();
  b.standard = !b.groebner;
  b.reduced = true;
  return b;
}

std::vector<ModuleElement> GbEngine::basis_syzygies(const FreeModulePtr& syz_space) const {
  if (has_pending()) throw Error("syzygies requested from an incomplete Gröbner basis");
  const std::vector<int> act = active();
  if (syz_space->rank() != static_cast<int>(act.size())) throw Error("syzygy space has the wrong rank");
  std::vector<int> pos(entries_.size(), -1);
  for (std::size_t k = 0; k < act.size(); ++k) pos[act[k]] = static_cast<int>(k);
  const Field K = space_->ring()->field();
  const Scalar one = Scalar::one(K), minus_one(K, -1L);
  std::vector<ModuleElement> out;
  std::vector<Quotient> steps;
  for (std::size_t a = 0; a < act.size(); ++a) {
    const ModuleElement& fa = entries_[act[a]].f;
    for (std::size_t b = a + 1; b < act.size(); ++b) {
      const ModuleElement& fb = entries_[act[b]].f;
      if (fa.lead().comp != fb.lead().comp) continue;
      Monomial l = lcm(fa.lead().mono, fb.lead().mono);
      Monomial ma = l / fa.lead().mono, mb = l / fb.lead().mono;
      ModuleElement s = fa.times_term(one, ma);
      s.add_multiple(minus_one, mb, fb);
      steps.clear();
      ModuleElement rem = reduce_impl(std::move(s), nullptr, &steps);
      if (!rem.is_zero()) throw Error("internal: S-vector of a Gröbner basis does not reduce to zero");
      std::vector<ModuleTerm> terms;
      terms.push_back({one, ma, static_cast<std::uint32_t>(a)});
      terms.push_back({minus_one, mb, static_cast<std::uint32_t>(b)});
      for (const auto& q : steps) terms.push_back({-q.coef, q.mono, static_cast<std::uint32_t>(pos[q.index])});
      ModuleElement syz = ModuleElement::from_terms(syz_space, std::move(terms));
      if (!syz.is_zero()) out.push_back(std::move(syz));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Basic operations

namespace {

ModuleElement into(const ModuleElement& v, const FreeModulePtr& space) {
  return v.space() == space ? v : v.in_space(space);
}

}  // namespace

ModuleElement reduce(const ModuleElement& v, const BasisSet& gb) {
  return GbEngine::from_basis(gb).reduce(into(v, gb.space));
}

Polynomial reduce(const Polynomial& f, const BasisSet& gb) {
  if (f.is_zero()) return f;
  return as_polynomial(reduce(as_vector(f.in_ring(gb.space->ring()), gb.space), gb));
}

Division reduce_with_quotients(const ModuleElement& v, const BasisSet& gb) {
  GbEngine e = GbEngine::from_basis(gb);
  std::vector<GbEngine::Quotient> steps;
  Division d;
  d.remainder = e.reduce(into(v, gb.space), steps);
  // from_basis skips zero elements; map engine indices back.
  std::vector<std::size_t> origin;
  for (std::size_t i = 0; i < gb.elements.size(); ++i)
    if (!gb.elements[i].is_zero()) origin.push_back(i);
  const RingPtr& R = gb.space->ring();
  std::vector<std::vector<PolyTerm>> q(gb.elements.size());
  for (const auto& s : steps) {
    std::size_t i = origin[s.index];
    // The engine divides by monic copies.
    q[i].push_back({s.coef / gb.elements[i].lead().coef, s.mono});
  }
  for (auto& terms : q) d.quotients.push_back(Polynomial::from_terms(R, std::move(terms)));
  return d;
}

BasisSet buchberger(const BasisSet& gens, const Limits* limits) {
  GbEngine e(gens.space, {limits, nullptr});
  for (const auto& g : gens.elements) e.add(g);
  e.complete();
  return e.reduced_basis();
}

BasisSet buchberger_truncated(const BasisSet& gens, int cap, const Limits* limits) {
  GbEngine e(gens.space, {limits, nullptr});
  for (const auto& g : gens.elements) e.add(g);
  e.complete(cap);
  BasisSet b = e.reduced_basis();
  b.groebner = b.groebner && !e.has_pending();
  return b;
}

BasisSet standard_basis(const BasisSet& gens, const Limits* limits) {
  for (const auto& g : gens.elements)
    if (!g.is_homogeneous())
      throw Error("standard bases are only supported for homogeneous generators");
  FreeModulePtr local = gens.space->with_order(ModuleOrder::filtration());
  GbEngine e(local, {limits, nullptr});
  for (const auto& g : gens.elements) e.add(g);
  e.complete();
  return e.reduced_basis();
}

bool contains(const BasisSet& gb, const ModuleElement& v) { return reduce(v, gb).is_zero(); }

bool same_submodule(const BasisSet& a, const BasisSet& b, const Limits* limits) {
  BasisSet ga = buchberger(a, limits);
  BasisSet gb = buchberger({a.space, b.elements}, limits);
  for (const auto& v : b.elements)
    if (!contains(ga, v)) return false;
  for (const auto& v : a.elements)
    if (!contains(gb, v)) return false;
  return true;
}

std::vector<ModuleElement> syzygy_basis(const std::vector<ModuleElement>& columns,
                                        const FreeModulePtr& column_space, const Limits* limits) {
  const RingPtr& R = column_space->ring();
  std::vector<int> degrees;
  for (const auto& c : columns)
    degrees.push_back(c.is_zero() ? 0 : c.max_degree());
  FreeModulePtr T = make_free_module(R, degrees);
  FreeModulePtr F = column_space->order().is_global()
                        ? column_space
                        : column_space->with_order(ModuleOrder::term_over_position());
  GbEngine e(F, {limits, T});
  for (const auto& c : columns) e.add(c.is_zero() ? c : into(c, F));
  e.complete();

  std::vector<ModuleElement> out;
  const std::vector<int> act = e.active();
  std::vector<int> gdeg;
  for (int i : act) gdeg.push_back(e.element(i).max_degree());
  FreeModulePtr G = make_free_module(R, gdeg);
  for (const auto& sigma : e.basis_syzygies(G)) {
    ModuleElement s(T);
    for (const auto& t : sigma.terms()) s.add_multiple(t.coef, t.mono, e.representation(act[t.comp]));
    if (!s.is_zero()) out.push_back(std::move(s));
  }
  std::vector<GbEngine::Quotient> steps;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    ModuleElement s = ModuleElement::basis(T, static_cast<std::uint32_t>(i));
    if (!columns[i].is_zero()) {
      ModuleElement rem = e.reduce(into(columns[i], F), steps);
      if (!rem.is_zero()) throw Error("internal: generator does not reduce to zero");
      for (const auto& q : steps)
        s.add_multiple(-q.coef, q.mono, e.representation(q.index));
    }
    if (!s.is_zero()) out.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ring changes

RingPtr extend_ring_front(const RingPtr& ring, const std::vector<std::string>& extra,
                          MonomialOrder order) {
  std::vector<std::string> names = extra;
  for (const auto& n : ring->names()) {
    if (std::find(extra.begin(), extra.end(), n) != extra.end())
      throw Error("variable name '" + n + "' is already in use");
    names.push_back(n);
  }
  return make_ring(ring->field(), std::move(names), order);
}

namespace {

std::vector<int> name_map(const Ring& from, const Ring& to) {
  std::vector<int> map(from.nvars());
  for (int i = 0; i < from.nvars(); ++i) map[i] = to.index_of(from.names()[i]);
  return map;
}

Monomial remap(const Monomial& m, const std::vector<int>& map, int nvars) {
  Monomial out(nvars);
  for (int i = 0; i < m.nvars(); ++i) {
    if (!m[i]) continue;
    if (map[i] < 0) throw Error("polynomial involves a variable missing from the target ring");
    out.set(map[i], m[i]);
  }
  return out;
}

}  // namespace

Polynomial embed_by_name(const Polynomial& f, const RingPtr& target) {
  auto map = name_map(*f.ring(), *target);
  std::vector<PolyTerm> terms;
  for (const auto& t : f.terms()) terms.push_back({t.coef, remap(t.mono, map, target->nvars())});
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial restrict_by_name(const Polynomial& f, const RingPtr& target) { return embed_by_name(f, target); }

ModuleElement embed_by_name(const ModuleElement& v, const FreeModulePtr& target) {
  auto map = name_map(*v.space()->ring(), *target->ring());
  std::vector<ModuleTerm> terms;
  for (const auto& t : v.terms())
    terms.push_back({t.coef, remap(t.mono, map, target->ring()->nvars()), t.comp});
  return ModuleElement::from_terms(target, std::move(terms));
}

ModuleElement restrict_by_name(const ModuleElement& v, const FreeModulePtr& target) {
  return embed_by_name(v, target);
}

namespace {

bool free_of(const ModuleElement& v, int first, int count) {
  for (const auto& t : v.terms())
    for (int i = first; i < first + count; ++i)
      if (t.mono[i]) return false;
  return true;
}

std::string fresh_name(const Ring& ring, const std::string& base) {
  std::string n = base;
  while (ring.index_of(n) >= 0) n = "_" + n;
  return n;
}

}  // namespace

BasisSet module_intersection(const BasisSet& a, const BasisSet& b, const Limits* limits) {
  const RingPtr& R = a.space->ring();
  if (!b.space->compatible(*a.space)) throw Error("intersection of submodules of different free modules");
  RingPtr Rt = extend_ring_front(R, {fresh_name(*R, "t")}, MonomialOrder::elimination(1));
  FreeModulePtr Ft = make_free_module(Rt, a.space->degrees());
  Polynomial t = Polynomial::variable(Rt, 0);
  Polynomial one_minus_t = Polynomial::constant(Rt, 1L) - t;
  BasisSet gens{Ft, {}};
  for (const auto& g : a.elements) gens.elements.push_back(embed_by_name(g, Ft).times(t));
  for (const auto& h : b.elements) gens.elements.push_back(embed_by_name(h, Ft).times(one_minus_t));
  BasisSet gb = buchberger(gens, limits);
  BasisSet out{a.space, {}};
  for (const auto& g : gb.elements)
    if (free_of(g, 0, 1)) out.elements.push_back(restrict_by_name(g, a.space));
  return buchberger(out, limits);
}

BasisSet eliminate(const BasisSet& ideal, const std::vector<int>& drop_vars, const Limits* limits) {
  const RingPtr& R = ideal.space->ring();
  if (ideal.space->rank() != 1) throw Error("elimination expects an ideal");
  std::vector<std::string> dropped, kept;
  for (int i = 0; i < R->nvars(); ++i) {
    bool drop = std::find(drop_vars.begin(), drop_vars.end(), i) != drop_vars.end();
    (drop ? dropped : kept).push_back(R->names()[i]);
  }
  std::vector<std::string> all = dropped;
  all.insert(all.end(), kept.begin(), kept.end());
  RingPtr Re = make_ring(R->field(), all, MonomialOrder::elimination(static_cast<int>(dropped.size())));
  RingPtr Rk = make_ring(R->field(), kept);
  std::vector<Polynomial> gens;
  for (const auto& f : ideal.polynomials()) gens.push_back(embed_by_name(f, Re));
  BasisSet gb = buchberger(ideal_basis(Re, gens), limits);
  std::vector<Polynomial> keep;
  for (const auto& g : gb.elements)
    if (free_of(g, 0, static_cast<int>(dropped.size()))) keep.push_back(restrict_by_name(as_polynomial(g), Rk));
  return buchberger(ideal_basis(Rk, keep), limits);
}

BasisSet kernel_of_ring_map(const std::vector<Polynomial>& targets, RingMapMode mode,
                            std::vector<std::string> new_names, const Limits* limits) {
  if (targets.empty()) throw Error("ring map with no targets");
  const RingPtr& R = targets.front().ring();
  const int m = static_cast<int>(targets.size());
  const int n = R->nvars();
  if (new_names.empty()) {
    static const char* letters[] = {"u", "v", "w"};
    bool ok = m <= 3;
    for (int i = 0; ok && i < m; ++i) ok = R->index_of(letters[i]) < 0;
    for (int i = 0; i < m; ++i)
      new_names.push_back(ok ? letters[i] : fresh_name(*R, "y" + std::to_string(i + 1)));
  }
  if (static_cast<int>(new_names.size()) != m) throw Error("one new variable name per target is needed");
  for (const auto& nm : new_names)
    if (R->index_of(nm) >= 0) throw Error("variable name '" + nm + "' is already in use");

  std::vector<std::string> xy = R->names();
  xy.insert(xy.end(), new_names.begin(), new_names.end());
  if (mode == RingMapMode::Rees) {
    std::string tn = fresh_name(Ring(R->field(), xy), "t");
    std::vector<std::string> names{tn};
    names.insert(names.end(), xy.begin(), xy.end());
    RingPtr S = make_ring(R->field(), names, MonomialOrder::elimination(1));
    RingPtr Rxy = make_ring(R->field(), xy);
    Polynomial t = Polynomial::variable(S, 0);
    std::vector<Polynomial> gens;
    for (int i = 0; i < m; ++i)
      gens.push_back(Polynomial::variable(S, 1 + n + i) - embed_by_name(targets[i], S) * t);
    BasisSet gb = buchberger(ideal_basis(S, gens), limits);
    std::vector<Polynomial> keep;
    for (const auto& g : gb.elements)
      if (free_of(g, 0, 1)) keep.push_back(restrict_by_name(as_polynomial(g), Rxy));
    return buchberger(ideal_basis(Rxy, keep), limits);
  }
  RingPtr S = make_ring(R->field(), xy, MonomialOrder::elimination(n));
  RingPtr Ry = make_ring(R->field(), new_names);
  std::vector<Polynomial> gens;
  for (int i = 0; i < m; ++i)
    gens.push_back(Polynomial::variable(S, n + i) - embed_by_name(targets[i], S));
  BasisSet gb = buchberger(ideal_basis(S, gens), limits);
  std::vector<Polynomial> keep;
  for (const auto& g : gb.elements)
    if (free_of(g, 0, n)) keep.push_back(restrict_by_name(as_polynomial(g), Ry));
  return buchberger(ideal_basis(Ry, keep), limits);
}

std::vector<ModuleElement> minimal_generators(const std::vector<ModuleElement>& gens,
                                              const FreeModulePtr& space, Grading grading,
                                              const std::vector<ModuleElement>& base,
                                              const Limits* limits) {
  struct Cand {
    int key1, key2;
    std::size_t index;
  };
  auto check = [&](const ModuleElement& g) {
    if (!g.is_homogeneous()) throw Error("minimal generators need homogeneous elements");
    if (grading == Grading::Filtration)
      for (const auto& t : g.terms())
        if (t.mono.degree() != g.lead().mono.degree())
          throw Error("minimal generators by filtration degree need leading forms");
  };
  std::vector<Cand> cands;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) continue;
    check(gens[i]);
    int internal = gens[i].max_degree();
    int filt = gens[i].lead().mono.degree();
    if (grading == Grading::Internal)
      cands.push_back({internal, 0, i});
    else
      cands.push_back({filt, internal, i});
  }
  std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    return std::tie(a.key1, a.key2) < std::tie(b.key1, b.key2);
  });
  FreeModulePtr F = space->order().is_global() ? space : space->with_order(ModuleOrder::term_over_position());
  GbEngine e(F, {limits, nullptr});
  for (const auto& b : base) {
    if (b.is_zero()) continue;
    if (!b.is_homogeneous()) throw Error("minimal generators need a homogeneous base");
    e.add(into(b, F));
  }
  std::vector<ModuleElement> kept;
  for (const auto& c : cands) {
    ModuleElement g = into(gens[c.index], F);
    e.complete(g.max_degree());
    if (!e.reduce(g).is_zero()) {
      kept.push_back(gens[c.index]);
      e.add(g);
    }
  }
  return kept;
}

int krull_dimension(const BasisSet& ideal, const Limits* limits) {
  if (ideal.space->rank() != 1) throw Error("Krull dimension expects an ideal");
  const int n = ideal.space->ring()->nvars();
  BasisSet gb = ideal.groebner && ideal.space->order().is_global() ? ideal : buchberger(ideal, limits);
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb.elements) {
    const Monomial& lm = g.lead().mono;
    if (lm.is_one()) return -1;
    std::uint32_t s = 0;
    for (int i = 0; i < n; ++i)
      if (lm[i]) s |= 1u << i;
    supports.push_back(s);
  }
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int size = std::popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (auto s : supports)
      if ((s & ~mask) == 0) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

}  // namespace powerhom
