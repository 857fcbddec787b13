#include "powerhom/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace powerhom {

Ring::Ring(Field field, std::vector<std::string> names, MonomialOrder order)
    : field_(field), names_(std::move(names)), order_(order) {
  if (nvars() > kMaxVars) throw Error("at most " + std::to_string(kMaxVars) + " variables are supported");
  if (order_.kind == MonomialOrder::Kind::Elimination && (order_.block < 0 || order_.block > nvars()))
    throw Error("elimination block exceeds the number of variables");
}

int Ring::index_of(std::string_view name) const {
  for (int i = 0; i < nvars(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

std::shared_ptr<const Ring> Ring::with_order(MonomialOrder order) const {
  return std::make_shared<const Ring>(field_, names_, order);
}

RingPtr make_ring(Field field, std::vector<std::string> names, MonomialOrder order) {
  return std::make_shared<const Ring>(field, std::move(names), order);
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

namespace {

void require_same(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring())) throw Error("polynomials belong to different rings");
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  return term(std::move(ring), c, Monomial(0));
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
  Field f = ring->field();
  return constant(std::move(ring), Scalar(f, c));
}

Polynomial Polynomial::term(RingPtr ring, const Scalar& c, const Monomial& m) {
  Polynomial p(std::move(ring));
  if (m.nvars() != 0 && m.nvars() != p.ring_->nvars()) throw Error("monomial has the wrong number of variables");
  Monomial mm = m.nvars() == p.ring_->nvars() ? m : Monomial(p.ring_->nvars());
  if (!c.is_zero()) p.terms_.push_back({c, mm});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, int i) {
  int n = ring->nvars();
  Field f = ring->field();
  return term(std::move(ring), Scalar::one(f), Monomial::variable(n, i));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<PolyTerm> terms) {
  Polynomial p(std::move(ring));
  const MonomialOrder& ord = p.ring_->order();
  std::sort(terms.begin(), terms.end(),
            [&](const PolyTerm& a, const PolyTerm& b) { return ord.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef.is_zero()) p.terms_.pop_back();
    } else if (!t.coef.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

int Polynomial::degree() const {
  if (is_zero()) throw Error("degree of the zero polynomial");
  int d = terms_.front().mono.degree();
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

int Polynomial::low_degree() const {
  if (is_zero()) throw Error("degree of the zero polynomial");
  int d = terms_.front().mono.degree();
  for (const auto& t : terms_) d = std::min(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial r(ring_);
  for (const auto& t : terms_)
    if (t.mono.degree() == d) r.terms_.push_back(t);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

namespace {

// out = a + s*b, merging two descending term lists.
std::vector<PolyTerm> merge_axpy(const MonomialOrder& ord, const std::vector<PolyTerm>& a,
                                 const Scalar* s, const std::vector<PolyTerm>& b) {
  std::vector<PolyTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    std::strong_ordering c = i == a.size()   ? std::strong_ordering::less
                             : j == b.size() ? std::strong_ordering::greater
                                             : ord.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j]);
      if (s) out.back().coef *= *s;
      ++j;
    } else {
      Scalar v = b[j].coef;
      if (s) v *= *s;
      v += a[i].coef;
      if (!v.is_zero()) out.push_back({std::move(v), a[i].mono});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  if (!ring_) ring_ = o.ring_;
  require_same(*this, o);
  terms_ = merge_axpy(ring_->order(), terms_, nullptr, o.terms_);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  if (!ring_) ring_ = o.ring_;
  require_same(*this, o);
  Scalar m1(ring_->field(), -1L);
  terms_ = merge_axpy(ring_->order(), terms_, &m1, o.terms_);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_ ? a.ring_ : b.ring_);
  require_same(a, b);
  std::vector<PolyTerm> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.coef * t.coef, s.mono * t.mono});
  return Polynomial::from_terms(a.ring_, std::move(prod));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Polynomial Polynomial::times_term(const Scalar& c, const Monomial& m) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) {
    t.coef *= c;
    t.mono = t.mono * m;
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(lead().coef.inverse());
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw Error("negative exponent");
  Polynomial r = constant(ring_, 1L);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::in_ring(RingPtr ring) const {
  if (ring->nvars() != ring_->nvars() || !(ring->field() == ring_->field()))
    throw Error("cannot move a polynomial between rings with different variables");
  return from_terms(std::move(ring), terms_);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coef == b.terms_[i].coef)) return false;
  return true;
}

std::string monomial_to_string(const Ring& ring, const Monomial& m) {
  std::string s;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.names()[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.coef.to_string();
    bool neg = t.coef.is_rational() && sgn(t.coef.rational()) < 0;
    if (neg) c.erase(0, 1);
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (t.mono.is_one()) {
      os << c;
    } else {
      if (c != "1") os << c << '*';
      os << monomial_to_string(*ring_, t.mono);
    }
  }
  return os.str();
}

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images) {
  if (static_cast<int>(images.size()) != f.ring()->nvars())
    throw Error("substitution needs one image per variable");
  if (images.empty()) throw Error("substitution into an empty variable list");
  RingPtr target = images.front().ring();
  Polynomial result(target);
  for (const auto& t : f.terms()) {
    Polynomial p = Polynomial::constant(target, Scalar(t.coef));
    for (int i = 0; i < t.mono.nvars(); ++i)
      if (t.mono[i]) p = p * images[i].pow(t.mono[i]);
    result += p;
  }
  return result;
}

}  // namespace powerhom
