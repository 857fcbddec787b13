#include "powerhom/series.hpp"

#include <algorithm>
#include <sstream>

#include "powerhom/scalar.hpp"

namespace powerhom {

TruncatedSeries::TruncatedSeries(int order) : order_(order), c_(order + 1, 0) {
  if (order < 0) throw Error("negative truncation order");
}

TruncatedSeries::TruncatedSeries(std::vector<mpq_class> coefficients, int order) : TruncatedSeries(order) {
  for (std::size_t i = 0; i < coefficients.size() && i <= static_cast<std::size_t>(order); ++i) {
    c_[i] = coefficients[i];
    c_[i].canonicalize();
  }
}

TruncatedSeries TruncatedSeries::constant(const mpq_class& c, int order) {
  return TruncatedSeries(std::vector<mpq_class>{c}, order);
}

TruncatedSeries TruncatedSeries::binomial(const mpq_class& a, int m, long e, int order) {
  if (m < 1) throw Error("binomial factor needs a positive power of z");
  // Generalized binomial coefficients C(e, n) a^n.
  TruncatedSeries s(order);
  mpq_class coef = 1;
  for (int n = 0; static_cast<long>(n) * m <= order; ++n) {
    s.c_[n * m] = coef;
    coef = coef * mpq_class(e - n) / mpq_class(n + 1) * a;
  }
  return s;
}

std::vector<long> TruncatedSeries::integers() const {
  std::vector<long> out;
  for (const auto& c : c_) {
    if (c.get_den() != 1 || !c.get_num().fits_slong_p()) throw Error("series coefficient " + c.get_str() + " is not a machine integer");
    out.push_back(c.get_num().get_si());
  }
  return out;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  TruncatedSeries r(std::min(order_, o.order_));
  for (int i = 0; i <= r.order_; ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const { return *this + o.scaled(-1); }

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  TruncatedSeries r(std::min(order_, o.order_));
  for (int i = 0; i <= r.order_; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; i + j <= r.order_; ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  return r;
}

TruncatedSeries TruncatedSeries::scaled(const mpq_class& a) const {
  TruncatedSeries r = *this;
  for (auto& c : r.c_) c *= a;
  return r;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  if (c_[0] == 0) throw Error("reciprocal of a series with zero constant term");
  TruncatedSeries r(order_);
  r.c_[0] = 1 / c_[0];
  for (int n = 1; n <= order_; ++n) {
    mpq_class s = 0;
    for (int i = 1; i <= n; ++i) s += c_[i] * r.c_[n - i];
    r.c_[n] = -s / c_[0];
  }
  return r;
}

TruncatedSeries TruncatedSeries::log() const {
  if (c_[0] != 1) throw Error("log needs constant term 1");
  // g = log f satisfies n g_n = n f_n - Σ_{k<n} k g_k f_{n-k}.
  TruncatedSeries g(order_);
  for (int n = 1; n <= order_; ++n) {
    mpq_class s = mpq_class(n) * c_[n];
    for (int k = 1; k < n; ++k) s -= mpq_class(k) * g.c_[k] * c_[n - k];
    g.c_[n] = s / n;
  }
  return g;
}

TruncatedSeries TruncatedSeries::exp() const {
  if (c_[0] != 0) throw Error("exp needs constant term 0");
  // f = exp g satisfies n f_n = Σ_{k=1}^n k g_k f_{n-k}.
  TruncatedSeries f(order_);
  f.c_[0] = 1;
  for (int n = 1; n <= order_; ++n) {
    mpq_class s = 0;
    for (int k = 1; k <= n; ++k) s += mpq_class(k) * c_[k] * f.c_[n - k];
    f.c_[n] = s / n;
  }
  return f;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order > order_) throw Error("cannot raise the truncation order");
  return TruncatedSeries(c_, order);
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.order_ == b.order_ && a.c_ == b.c_;
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream os;
  for (int i = 0; i <= order_; ++i) os << (i ? "," : "") << c_[i].get_str();
  return os.str();
}

}  // namespace powerhom
