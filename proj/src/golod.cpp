#include "powerhom/golod.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace powerhom {

namespace {

// Sign of e_S ∧ e_T: (-1)^{#{(s, t) : s in S, t in T, s > t}}.
int wedge_sign(std::uint32_t S, std::uint32_t T) {
  int inversions = 0;
  for (std::uint32_t t = T; t; t &= t - 1) {
    int bit = std::countr_zero(t);
    inversions += std::popcount(S >> (bit + 1));
  }
  return inversions % 2 ? -1 : 1;
}

void add_to(KoszulChain& c, std::uint32_t S, const Polynomial& p) {
  if (p.is_zero()) return;
  auto [it, fresh] = c.try_emplace(S, p);
  if (!fresh) {
    it->second += p;
    if (it->second.is_zero()) c.erase(it);
  }
}

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

KoszulChain wedge(const KoszulChain& a, const KoszulChain& b) {
  KoszulChain out;
  for (const auto& [S, p] : a)
    for (const auto& [T, q] : b) {
      if (S & T) continue;
      Polynomial r = p * q;
      if (wedge_sign(S, T) < 0) r = -r;
      add_to(out, S | T, r);
    }
  return out;
}

std::string chain_to_string(const KoszulChain& c) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [S, p] : c) {
    if (!first) os << " + ";
    first = false;
    os << "(" << p.to_string() << ")";
    if (S) {
      os << " ";
      bool f = true;
      for (std::uint32_t t = S; t; t &= t - 1) {
        os << (f ? "" : "^") << "e" << std::countr_zero(t) + 1;
        f = false;
      }
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

KoszulHomology::KoszulHomology(QuotientRingPtr A, int i_max, std::optional<int> degree_bound, const Limits* limits)
    : A_(std::move(A)), i_max_(i_max), limits_(limits) {
  if (!A_->is_homogeneous()) throw Error("Koszul homology needs a graded quotient");
  n_ = A_->ring()->nvars();
  if (n_ > 30) throw Error("too many variables for the Koszul complex");
  if (degree_bound) {
    bound_ = *degree_bound;
  } else {
    auto res = minimal_free_resolution(A_->basis(), ResolutionTarget::Cokernel, std::nullopt, limits);
    const BettiDiagram b = betti_diagram(res);
    for (const auto& [jk, c] : b.entries()) bound_ = std::max(bound_, jk.second);
  }
  for (int i = 0; i <= std::min(i_max_, n_); ++i)
    for (int e = i; e <= bound_; ++e) with_homology(i, e);
}

KoszulHomology::Component& KoszulHomology::component(int i, int e) const {
  auto key = std::make_pair(i, e);
  auto it = comps_.find(key);
  if (it != comps_.end()) return it->second;
  Component c;
  if (i >= 0 && i <= n_ && e - i >= 0) {
    for (std::uint32_t S = 0; S < (1u << n_); ++S)
      if (std::popcount(S) == i) {
        c.subset_index.emplace(S, static_cast<int>(c.subsets.size()));
        c.subsets.push_back(S);
      }
    c.block = static_cast<int>(A_->dimension(e - i));
  }
  return comps_.emplace(key, std::move(c)).first->second;
}

SparseVec KoszulHomology::coordinates(const KoszulChain& chain, int i, int e) const {
  const Component& c = component(i, e);
  std::vector<std::pair<int, Scalar>> entries;
  for (const auto& [S, p] : chain) {
    auto it = c.subset_index.find(S);
    if (it == c.subset_index.end()) throw Error("chain has the wrong homological index");
    for (const auto& t : p.terms()) {
      if (t.mono.degree() != e - i) throw Error("chain is not homogeneous of the requested degree");
      int idx = A_->standard_index(t.mono);
      if (idx < 0) throw Error("chain coefficients are not in normal form");
      entries.emplace_back(it->second * c.block + idx, t.coef);
    }
  }
  return sparse_from(std::move(entries));
}

KoszulChain KoszulHomology::chain(const SparseVec& v, int i, int e) const {
  const Component& c = component(i, e);
  const auto& monos = A_->standard_monomials(e - i);
  KoszulChain out;
  for (const auto& [idx, coef] : v)
    add_to(out, c.subsets[idx / c.block], Polynomial::term(A_->ring(), coef, monos[idx % c.block]));
  return out;
}

KoszulChain KoszulHomology::normal_form(const KoszulChain& c) const {
  KoszulChain out;
  for (const auto& [S, p] : c) add_to(out, S, A_->normal_form(p));
  return out;
}

KoszulChain KoszulHomology::differential(const KoszulChain& c) const {
  KoszulChain out;
  for (const auto& [S, p] : c) {
    int pos = 0;
    for (std::uint32_t t = S; t; t &= t - 1, ++pos) {
      int j = std::countr_zero(t);
      Polynomial q = p * Polynomial::variable(A_->ring(), j);
      add_to(out, S & ~(1u << j), pos % 2 ? -q : q);
    }
  }
  return normal_form(out);
}

const KoszulHomology::Component& KoszulHomology::with_boundaries(int i, int e) const {
  Component& c = component(i, e);
  if (c.boundaries_ready) return c;
  check_limits(limits_, e);
  const Component& up = component(i + 1, e);
  const auto& monos = up.block ? A_->standard_monomials(e - i - 1) : std::vector<Monomial>{};
  for (std::uint32_t S : up.subsets)
    for (const auto& m : monos) {
      KoszulChain basis{{S, Polynomial::term(A_->ring(), Scalar::one(A_->ring()->field()), m)}};
      c.boundaries.insert(coordinates(differential(basis), i, e));
    }
  c.boundaries_ready = true;
  return c;
}

const KoszulHomology::Component& KoszulHomology::with_homology(int i, int e) const {
  with_boundaries(i, e);
  Component& c = component(i, e);
  if (c.homology_ready) return c;
  const auto& monos = c.block ? A_->standard_monomials(e - i) : std::vector<Monomial>{};
  std::vector<SparseVec> images;
  for (std::uint32_t S : c.subsets)
    for (const auto& m : monos) {
      KoszulChain basis{{S, Polynomial::term(A_->ring(), Scalar::one(A_->ring()->field()), m)}};
      images.push_back(i == 0 ? SparseVec{} : coordinates(differential(basis), i - 1, e));
    }
  Echelon span = c.boundaries;
  for (const auto& z : kernel_basis(images, A_->ring()->field()))
    if (span.insert(z)) c.homology.push_back(z);
  c.homology_ready = true;
  return c;
}

std::size_t KoszulHomology::dimension(int i, int e) const {
  if (i < 0 || i > n_ || e < i || e > bound_) return 0;
  return with_homology(i, e).homology.size();
}

std::size_t KoszulHomology::total(int i) const {
  std::size_t t = 0;
  for (int e = i; e <= bound_; ++e) t += dimension(i, e);
  return t;
}

std::vector<KoszulClass> KoszulHomology::classes(int i) const {
  std::vector<KoszulClass> out;
  if (i < 0 || i > n_) return out;
  for (int e = i; e <= bound_; ++e)
    for (const auto& v : with_homology(i, e).homology) out.push_back({i, e, chain(v, i, e)});
  return out;
}

bool KoszulHomology::is_boundary(const KoszulChain& c, int i, int e) const {
  if (c.empty()) return true;
  return with_boundaries(i, e).boundaries.contains(coordinates(c, i, e));
}

std::size_t KoszulHomology::homology_rank(const std::vector<KoszulChain>& cycles, int i, int e) const {
  Echelon span = with_boundaries(i, e).boundaries;
  std::size_t r = 0;
  for (const auto& z : cycles)
    if (!z.empty() && span.insert(coordinates(z, i, e))) ++r;
  return r;
}

// ---------------------------------------------------------------------------

TorProductReport tor_product_check(const KoszulHomology& H, std::size_t max_witnesses) {
  TorProductReport report;
  const int top = std::min(H.i_max(), H.nvars());
  std::vector<std::vector<KoszulClass>> classes(top + 1);
  for (int i = 1; i <= top; ++i) classes[i] = H.classes(i);
  for (int i1 = 1; i1 <= top; ++i1)
    for (int i2 = i1; i1 + i2 <= top; ++i2)
      for (std::size_t a = 0; a < classes[i1].size(); ++a)
        for (std::size_t b = i1 == i2 ? a : 0; b < classes[i2].size(); ++b) {
          const auto& x = classes[i1][a];
          const auto& y = classes[i2][b];
          KoszulChain p = H.normal_form(wedge(x.rep, y.rep));
          if (H.is_boundary(p, i1 + i2, x.e + y.e)) continue;
          report.trivial = false;
          if (report.witnesses.size() < max_witnesses) report.witnesses.push_back({x, y, p});
          else return report;
        }
  return report;
}

// ---------------------------------------------------------------------------

PowerFamily::PowerFamily(const BasisSet& I, int i_max, const Limits* limits) : i_max_(i_max), limits_(limits) {
  const RingPtr& src = I.space->ring();
  ring_ = src->order() == MonomialOrder::degrevlex() ? src : src->with_order(MonomialOrder::degrevlex());
  std::vector<Polynomial> gens;
  for (const auto& p : I.polynomials()) gens.push_back(p.in_ring(ring_));
  ideal_ = ideal_basis(ring_, gens);
}

const BasisSet& PowerFamily::power(int k) {
  if (k < 0) throw Error("negative ideal power");
  auto it = powers_.find(k);
  if (it != powers_.end()) return it->second;
  BasisSet p = k == 0 ? ideal_basis(ring_, {Polynomial::constant(ring_, 1)}) : ideal_power(ideal_, k, limits_);
  return powers_.emplace(k, std::move(p)).first->second;
}

const BasisSet& PowerFamily::power_basis(int k) {
  auto it = bases_.find(k);
  if (it != bases_.end()) return it->second;
  return bases_.emplace(k, buchberger(power(k), limits_)).first->second;
}

const QuotientRingPtr& PowerFamily::quotient(int k) {
  if (k < 1) throw Error("R/I^k needs k >= 1");
  auto it = quotients_.find(k);
  if (it != quotients_.end()) return it->second;
  return quotients_.emplace(k, std::make_shared<const QuotientRing>(power(k), limits_)).first->second;
}

const KoszulHomology& PowerFamily::homology(int k) {
  auto it = homology_.find(k);
  if (it != homology_.end()) return *it->second;
  auto h = std::make_unique<KoszulHomology>(quotient(k), i_max_, std::nullopt, limits_);
  return *homology_.emplace(k, std::move(h)).first->second;
}

KoszulChain star_multiply(PowerFamily& family, const Polynomial& a, int j, const KoszulChain& v, int s) {
  if (s < 1 || j < 0) throw Error("star products need s >= 1 and j >= 0");
  const Polynomial aa = a.in_ring(family.ring());
  const BasisSet& gb = family.power_basis(j);
  if (!contains(gb, as_vector(aa, gb.space))) throw Error("the multiplier is not in I^" + std::to_string(j));
  const QuotientRing& target = *family.quotient(s + j);
  KoszulChain out;
  for (const auto& [S, p] : v) add_to(out, S, target.normal_form(aa * p.in_ring(family.ring())));
  return out;
}

std::vector<StarRow> star_surjectivity_check(PowerFamily& family, int s, int j, int i_max) {
  std::vector<StarRow> rows;
  const KoszulHomology& source = family.homology(s);
  const KoszulHomology& target = family.homology(s + j);
  const auto gens = family.power(j).polynomials();
  for (int i = 1; i <= i_max; ++i) {
    std::map<int, std::vector<KoszulChain>> images;
    for (const auto& z : source.classes(i))
      for (const auto& a : gens) {
        int e = z.e + a.degree();
        if (e > target.degree_bound()) continue;
        images[e].push_back(star_multiply(family, a, j, z.rep, s));
      }
    StarRow row;
    row.i = i;
    for (const auto& [e, list] : images) row.image_dimension += target.homology_rank(list, i, e);
    row.target_dimension = target.total(i);
    row.surjective = row.image_dimension == row.target_dimension;
    rows.push_back(row);
  }
  return rows;
}

// ---------------------------------------------------------------------------

TruncatedSeries golod_series(int d, const std::vector<long>& betti, int t) {
  TruncatedSeries den = TruncatedSeries::constant(1, t);
  std::vector<mpq_class> b(t + 1, 0);
  for (std::size_t i = 0; i < betti.size(); ++i)
    if (static_cast<int>(i) + 2 <= t) b[i + 2] = betti[i];
  den = den - TruncatedSeries(b, t);
  return TruncatedSeries::binomial(1, 1, d, t) * den.reciprocal();
}

TruncatedSeries poincare_actual(const QuotientRingPtr& A, int t, const Limits* limits) {
  auto res = resolution_over_quotient(A, QuotientModule::field(), t, QuotientRoute::Automatic, limits);
  std::vector<long> c(t + 1, 0);
  for (int j = 0; j <= res.length() && j <= t; ++j) c[j] = static_cast<long>(res.rank(j));
  return TruncatedSeries::from_integers(c, t);
}

namespace {

std::vector<long> quotient_betti(const BasisSet& Ik, const Limits* limits) {
  auto res = minimal_free_resolution(Ik, ResolutionTarget::Cokernel, std::nullopt, limits);
  auto totals = betti_diagram(res).totals();
  std::vector<long> b;
  for (std::size_t i = 1; i < totals.size(); ++i) b.push_back(static_cast<long>(totals[i]));
  return b;
}

}  // namespace

GolodVerdict golod_test(const BasisSet& I, int k, int t, const Limits* limits) {
  PowerFamily family(I, I.space->ring()->nvars(), limits);
  const int d = family.ring()->nvars();
  GolodVerdict v;
  v.order = t;
  v.actual = poincare_actual(family.quotient(k), t, limits);
  v.bound = golod_series(d, quotient_betti(family.power(k), limits), t);
  v.series_equal = v.actual == v.bound;
  for (int i = 0; i <= t && !v.series_equal; ++i)
    if (v.actual[i] != v.bound[i]) {
      v.first_discrepancy = i;
      break;
    }
  auto products = tor_product_check(family.homology(k));
  v.products_trivial = products.trivial;
  v.witnesses = std::move(products.witnesses);
  return v;
}

// ---------------------------------------------------------------------------

namespace {

// Given the coefficients r_1..r_t of log P, solves
//   r_m = Σ_{(i+1) n = m} (-1)^i ε_i (-1)^{n-1} (-1)^{n i} / n
// for ε_{m-1}, m = 1..t.
DeviationSequence solve_deviations(const std::vector<mpq_class>& r, int t) {
  DeviationSequence out;
  out.order = t;
  for (int m = 1; m <= t; ++m) {
    mpq_class v = r[m];
    for (int i = 0; i + 1 < m; ++i) {
      if (m % (i + 1)) continue;
      int n = m / (i + 1);
      int sign = ((i + n - 1 + n * i) % 2) ? -1 : 1;
      v -= mpq_class(sign * out.eps[i], n);
    }
    v.canonicalize();
    if (v.get_den() != 1 || !v.get_num().fits_slong_p())
      throw Error("deviation " + std::to_string(m - 1) + " is not an integer (" + v.get_str() +
                  "): not a Poincaré series");
    out.eps.push_back(v.get_num().get_si());
  }
  return out;
}

}  // namespace

DeviationSequence deviations_from_series(const TruncatedSeries& P) {
  if (P[0] != 1) throw Error("a Poincaré series has constant term 1");
  auto L = P.log();
  return solve_deviations(L.coefficients(), P.order());
}

DeviationSequence deviations_via_recursion(int d, const std::vector<long>& betti, int t) {
  // Right side: d log(1+z) - log(1 - Σ β_j z^{j+1}); the second term expands
  // as Σ_n (1/n) Σ_{j_1+...+j_n+n=m} β_{j_1}...β_{j_n}.
  auto beta = [&](int j) -> long { return j >= 1 && j <= static_cast<int>(betti.size()) ? betti[j - 1] : 0; };
  std::vector<mpq_class> r(t + 1, 0);
  for (int m = 1; m <= t; ++m) r[m] = mpq_class(m % 2 ? d : -d, m);
  // comp[m] = Σ over compositions into n parts, for the current n.
  std::vector<mpz_class> comp(t + 1, 0);
  for (int m = 2; m <= t; ++m) comp[m] = beta(m - 1);
  for (int n = 1; 2 * n <= t; ++n) {
    for (int m = 2 * n; m <= t; ++m) r[m] += mpq_class(comp[m], n);
    std::vector<mpz_class> next(t + 1, 0);
    for (int m = 2 * (n + 1); m <= t; ++m)
      for (int j = 1; j + 1 <= m - 2 * n; ++j) next[m] += beta(j) * comp[m - j - 1];
    comp = std::move(next);
  }
  for (auto& x : r) x.canonicalize();
  return solve_deviations(r, t);
}

TruncatedSeries series_from_deviations(const DeviationSequence& eps, int t) {
  TruncatedSeries P = TruncatedSeries::constant(1, t);
  for (std::size_t i = 0; i < eps.eps.size(); ++i) {
    if (eps.eps[i] == 0) continue;
    const long sign = i % 2 ? -1 : 1;
    P = P * TruncatedSeries::binomial(sign, static_cast<int>(i) + 1, sign * eps.eps[i], t);
  }
  return P;
}

// ---------------------------------------------------------------------------

DeviationScan deviation_degree_scan(const BasisSet& I, int k_first, int k_last, int i_max, int t,
                                    const Limits* limits) {
  if (k_first < 1 || k_last < k_first) throw Error("invalid power range");
  if (i_max > t) throw Error("i_max cannot exceed the truncation order");
  DeviationScan scan;
  scan.spread = analytic_spread(I, limits);
  PowerFamily family(I, 0, limits);
  const int d = family.ring()->nvars();
  for (int k = k_first; k <= k_last; ++k) {
    DeviationScanRow row;
    row.k = k;
    row.betti = quotient_betti(family.power(k), limits);
    row.poincare = poincare_actual(family.quotient(k), t, limits);
    row.deviations = deviations_from_series(row.poincare);
    row.series_equal = row.poincare == golod_series(d, row.betti, t);
    if (row.series_equal) {
      bool ok = true;
      for (int i = 0; i <= t; ++i) {
        mpq_class rhs = binomial(d, i);
        for (int j = 1; j <= static_cast<int>(row.betti.size()) && i - j - 1 >= 0; ++j)
          rhs += row.betti[j - 1] * row.poincare[i - j - 1];
        ok = ok && rhs == row.poincare[i];
      }
      row.recursion_holds = ok;
    }
    scan.rows.push_back(std::move(row));
  }
  auto fit_for = [&](auto value, int i, int predicted) {
    std::vector<std::pair<int, mpq_class>> pts;
    for (const auto& row : scan.rows) pts.emplace_back(row.k, value(row));
    DegreeCheck c;
    c.i = i;
    c.predicted = predicted;
    if (pts.size() >= 2) c.fit = fit_polynomial(pts);
    c.matches = c.fit.conclusive && c.fit.degree == predicted;
    return c;
  };
  for (int i = 0; i <= i_max; ++i)
    scan.betti_fits.push_back(
        fit_for([i](const DeviationScanRow& r) { return r.poincare[i]; }, i, (scan.spread - 1) * (i / 2)));
  for (int i = 0; i <= std::min(i_max, t - 1); ++i)
    scan.deviation_fits.push_back(fit_for([i](const DeviationScanRow& r) { return mpq_class(r.deviations.eps[i]); },
                                          i, (scan.spread - 1) * ((i + 1) / 2)));
  return scan;
}

}  // namespace powerhom
