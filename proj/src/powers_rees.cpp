#include "powerhom/powers_rees.hpp"

#include <algorithm>
#include <sstream>

#include "powerhom/artin_rees.hpp"

namespace powerhom {

namespace {

std::vector<Polynomial> minimal_polys(const BasisSet& I, const Limits* limits) {
  if (I.space->rank() != 1) throw Error("expected an ideal");
  auto F = rank_one(I.space->ring());
  std::vector<ModuleElement> gens;
  for (const auto& g : I.elements)
    if (!g.is_zero()) gens.push_back(g.in_space(F));
  std::vector<Polynomial> out;
  for (const auto& g : minimal_generators(gens, F, Grading::Internal, {}, limits)) out.push_back(as_polynomial(g));
  return out;
}

Limits row_limits(const ScanOptions& o) {
  Limits l = o.timeout_secs ? Limits::with_timeout(*o.timeout_secs) : Limits::none();
  l.max_degree = o.max_degree;
  return l;
}

}  // namespace

BasisSet ideal_power(const BasisSet& I, int k, const Limits* limits) {
  if (k < 1) throw Error("ideal powers need k >= 1");
  const RingPtr& R = I.space->ring();
  const auto base = minimal_polys(I, limits);
  auto current = base;
  for (int j = 2; j <= k; ++j) {
    BasisSet products = ideal_basis(R, {});
    for (const auto& a : current)
      for (const auto& b : base) products.elements.push_back(as_vector((a * b).monic(), products.space));
    // Distinct monic products only; minimalization handles the rest.
    std::sort(products.elements.begin(), products.elements.end(), [](const ModuleElement& a, const ModuleElement& b) {
      return a.to_string() < b.to_string();
    });
    products.elements.erase(std::unique(products.elements.begin(), products.elements.end()), products.elements.end());
    current = minimal_polys(products, limits);
  }
  return ideal_basis(R, current);
}

ReesPresentation rees_presentation(const BasisSet& I, const Limits* limits) {
  ReesPresentation p;
  p.generators = minimal_polys(I, limits);
  if (p.generators.empty()) throw Error("the Rees algebra of the zero ideal is not presented here");
  p.kernel = kernel_of_ring_map(p.generators, RingMapMode::Rees, {}, limits);
  return p;
}

Polynomial rees_substitute(const Polynomial& g, const std::vector<Polynomial>& f) {
  if (f.empty()) throw Error("no Rees generators");
  const RingPtr& R = f.front().ring();
  const RingPtr& S = g.ring();
  const int n = R->nvars();
  if (S->nvars() != n + static_cast<int>(f.size())) throw Error("ring mismatch in the Rees substitution");
  std::string tn = "t";
  while (R->index_of(tn) >= 0) tn = "_" + tn;
  RingPtr T = extend_ring_front(R, {tn}, MonomialOrder::degrevlex());
  std::vector<Polynomial> images;
  for (int i = 0; i < n; ++i) images.push_back(Polynomial::variable(T, i + 1));
  for (const auto& fi : f) images.push_back(embed_by_name(fi, T) * Polynomial::variable(T, 0));
  Polynomial out(T);
  for (const auto& term : g.terms()) {
    Polynomial p = Polynomial::constant(T, term.coef);
    for (int v = 0; v < S->nvars(); ++v)
      if (term.mono[v]) p = p * images[v].pow(term.mono[v]);
    out += p;
  }
  return out;
}

int analytic_spread(const BasisSet& I, const Limits* limits) {
  auto f = minimal_polys(I, limits);
  if (f.empty()) throw Error("analytic spread of the zero ideal");
  bool equigenerated = std::all_of(f.begin(), f.end(), [&](const Polynomial& p) { return p.degree() == f[0].degree(); });
  if (equigenerated) return krull_dimension(kernel_of_ring_map(f, RingMapMode::Fiber, {}, limits), limits);
  // The fiber cone is R[y]/(J + m R[y]) in general.
  BasisSet J = kernel_of_ring_map(f, RingMapMode::Rees, {}, limits);
  const RingPtr& S = J.space->ring();
  auto gens = J.polynomials();
  for (int i = 0; i < f.front().ring()->nvars(); ++i) gens.push_back(Polynomial::variable(S, i));
  return krull_dimension(ideal_basis(S, gens), limits);
}

bool ScanTable::complete() const {
  return std::none_of(rows.begin(), rows.end(), [](const ScanRow& r) { return r.error.has_value(); });
}

ScanTable power_scan(const BasisSet& I, int k_first, int k_last, const ScanOptions& options) {
  if (k_first < 1 || k_last < k_first) throw Error("invalid power range");
  ScanTable table;
  table.ideal = I;
  table.k_first = k_first;
  table.k_last = k_last;
  table.metrics = options.metrics;
  if (options.metrics & MetricSpread) {
    Limits lim = row_limits(options);
    table.analytic_spread = analytic_spread(I, &lim);
  }
  const unsigned needs_resolution = MetricBetti | MetricReg | MetricRho;
  for (int k = k_first; k <= k_last; ++k) {
    ScanRow row;
    row.k = k;
    Limits lim = row_limits(options);
    try {
      BasisSet Ik = ideal_power(I, k, &lim);
      row.generators = Ik.size();
      if (options.metrics & needs_resolution) {
        auto res = minimal_free_resolution(Ik, ResolutionTarget::Submodule, std::nullopt, &lim);
        BettiDiagram b = betti_diagram(res);
        if (options.metrics & MetricBetti) {
          BettiDiagram q;
          q.add(0, 0);
          for (const auto& [jk, c] : b.entries()) q.add(jk.first + 1, jk.second, c);
          row.betti_ideal = b;
          row.betti_quotient = q;
        }
        if (options.metrics & MetricReg) row.regularity = regularity_profile(b);
        if (options.metrics & MetricRho) row.rho = rho_profile(res, &lim);
      }
      if (options.metrics & MetricPoincare) {
        auto A = std::make_shared<const QuotientRing>(Ik, &lim);
        auto res = resolution_over_quotient(A, QuotientModule::field(), options.poincare_order,
                                            QuotientRoute::Automatic, &lim);
        std::vector<std::size_t> p(options.poincare_order + 1, 0);
        for (int j = 0; j <= res.length() && j <= options.poincare_order; ++j) p[j] = res.rank(j);
        row.poincare = p;
      }
    } catch (const ResourceLimit& e) {
      row.error = e.what();
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

mpq_class FitResult::operator()(const mpq_class& k) const {
  mpq_class v = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) v = v * k + *it;
  return v;
}

std::string FitResult::to_string() const {
  if (!conclusive) return "inconclusive";
  std::ostringstream os;
  bool first = true;
  for (int d = degree; d >= 0; --d) {
    const mpq_class& c = coefficients[d];
    if (c == 0 && !(d == 0 && first)) continue;
    mpq_class a = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    bool unit = a == 1 && d > 0;
    if (!unit) os << a.get_str();
    if (d > 0) os << (unit ? "" : "*") << "k" << (d > 1 ? "^" + std::to_string(d) : "");
    first = false;
  }
  return os.str();
}

namespace {

/// Power-basis coefficients of the interpolant through the given points.
std::vector<mpq_class> interpolate(const std::vector<std::pair<int, mpq_class>>& pts) {
  const std::size_t n = pts.size();
  std::vector<mpq_class> dd;
  for (const auto& p : pts) dd.push_back(p.second);
  std::vector<mpq_class> newton{dd[0]};
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / mpq_class(pts[i].first - pts[i - level].first);
    newton.push_back(dd[level]);
  }
  // Horner in Newton form.
  std::vector<mpq_class> poly{newton[n - 1]};
  for (std::size_t j = n - 1; j-- > 0;) {
    std::vector<mpq_class> next(poly.size() + 1, 0);
    const mpq_class node = pts[j].first;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= node * poly[i];
    }
    next[0] += newton[j];
    poly = std::move(next);
  }
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  return poly;
}

}  // namespace

FitResult fit_polynomial(const std::vector<std::pair<int, mpq_class>>& input) {
  if (input.size() < 2) throw Error("a polynomial fit needs at least two points");
  auto pts = input;
  for (auto& p : pts) p.second.canonicalize();
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i].first == pts[i - 1].first) throw Error("duplicate abscissa in a polynomial fit");
  FitResult out;
  const std::size_t n = pts.size();
  for (std::size_t D = 0; D + 2 <= n; ++D) {
    std::vector<std::pair<int, mpq_class>> tail(pts.end() - static_cast<long>(D + 1), pts.end());
    FitResult cand;
    cand.coefficients = interpolate(tail);
    cand.coefficients.resize(D + 1, 0);
    std::size_t start = n - D - 1;
    while (start > 0 && cand(pts[start - 1].first) == pts[start - 1].second) --start;
    if (n - start < D + 2) continue;
    out = cand;
    out.conclusive = true;
    out.exact = true;
    out.degree = static_cast<int>(D);
    out.k_first = pts[start].first;
    out.k_last = pts.back().first;
    return out;
  }
  out.k_first = pts.front().first;
  out.k_last = pts.back().first;
  return out;
}

Stabilization stabilization_detect(const std::vector<std::pair<int, long>>& input) {
  if (input.size() < 3) throw Error("stabilization detection needs at least three points");
  auto s = input;
  std::sort(s.begin(), s.end());
  Stabilization out;
  const std::size_t n = s.size();
  if (s[n - 1].second != s[n - 2].second) return out;
  std::size_t start = n - 1;
  while (start > 0 && s[start - 1].second == s[n - 1].second) --start;
  out.conclusive = true;
  out.onset = s[start].first;
  out.value = s[n - 1].second;
  out.tail_length = n - start;
  return out;
}

}  // namespace powerhom
