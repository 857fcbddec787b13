#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace powerhom {

/// Power series c_0 + c_1 z + ... + c_t z^t known exactly through order t.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  /// Zero series of the given order.
  explicit TruncatedSeries(int order);
  /// Coefficients beyond order are dropped; missing ones are zero.
  TruncatedSeries(std::vector<mpq_class> coefficients, int order);

  static TruncatedSeries constant(const mpq_class& c, int order);
  /// (1 + a z^m)^e for an integer exponent e.
  static TruncatedSeries binomial(const mpq_class& a, int m, long e, int order);
  template <class Int>
  static TruncatedSeries from_integers(const std::vector<Int>& values, int order) {
    std::vector<mpq_class> c;
    for (const auto& v : values) c.emplace_back(static_cast<long>(v));
    return TruncatedSeries(std::move(c), order);
  }

  int order() const { return order_; }
  const mpq_class& operator[](int i) const { return c_[i]; }
  const std::vector<mpq_class>& coefficients() const { return c_; }
  /// Coefficients as integers; throws when one is not integral.
  std::vector<long> integers() const;

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries scaled(const mpq_class& a) const;
  /// 1/f for c_0 != 0.
  TruncatedSeries reciprocal() const;
  /// log f for c_0 = 1.
  TruncatedSeries log() const;
  /// exp f for c_0 = 0.
  TruncatedSeries exp() const;
  /// Same series cut to a lower order.
  TruncatedSeries truncated(int order) const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);
  std::string to_string() const;

 private:
  int order_ = 0;
  std::vector<mpq_class> c_{0};
};

}  // namespace powerhom
