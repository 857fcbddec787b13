#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace powerhom {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coefficient field: the rationals or a prime field F_p with p an odd prime below 2^31.
class Field {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string describe() const;

  friend bool operator==(Field a, Field b) { return a.p_ == b.p_; }

 private:
  friend class Scalar;
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator (GMP canonical form); prime-field values live in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(Field f, long value);
  Scalar(Field f, const mpq_class& value);

  static Scalar zero(Field f) { return Scalar(f, 0L); }
  static Scalar one(Field f) { return Scalar(f, 1L); }
  /// Parses "3", "-7", "3/2". Rational input over F_p is mapped through the
  /// canonical ring map; a denominator divisible by p is rejected.
  static Scalar parse(Field f, std::string_view text);

  Field field() const { return Field(p_); }
  bool is_rational() const { return p_ == 0; }
  bool is_zero() const { return p_ == 0 ? sgn(q_) == 0 : v_ == 0; }
  bool is_one() const { return p_ == 0 ? q_ == 1 : v_ == 1; }
  bool is_integer() const { return p_ != 0 || q_.get_den() == 1; }

  const mpq_class& rational() const { return q_; }
  std::uint32_t residue() const { return v_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.p_ == b.p_ && (a.p_ == 0 ? a.q_ == b.q_ : a.v_ == b.v_);
  }

  /// "3", "-3/2"; prime-field elements print their representative in [0, p).
  std::string to_string() const;

 private:
  mpq_class q_;
  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace powerhom
