#include "powerhom/scalar.hpp"

#include <ostream>

namespace powerhom {

namespace {

bool is_odd_prime(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t mod_reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_odd_prime(p))
    throw Error("field characteristic must be an odd prime below 2^31, got " + std::to_string(p));
  return Field(p);
}

std::string Field::describe() const {
  return p_ == 0 ? std::string("Q") : "GF " + std::to_string(p_);
}

Scalar::Scalar(Field f, long value) : p_(f.characteristic()) {
  if (p_ == 0) {
    q_ = value;
  } else {
    long r = value % static_cast<long>(p_);
    if (r < 0) r += p_;
    v_ = static_cast<std::uint32_t>(r);
  }
}

Scalar::Scalar(Field f, const mpq_class& value) : p_(f.characteristic()) {
  if (p_ == 0) {
    q_ = value;
    q_.canonicalize();
    return;
  }
  std::uint32_t den = mod_reduce(value.get_den(), p_);
  if (den == 0) throw Error("denominator vanishes in " + f.describe());
  std::uint64_t num = mod_reduce(value.get_num(), p_);
  v_ = static_cast<std::uint32_t>(num * mod_pow(den, p_ - 2, p_) % p_);
}

Scalar Scalar::parse(Field f, std::string_view text) {
  mpq_class q;
  std::string s(text);
  if (s.empty() || q.set_str(s, 10) != 0) throw Error("malformed coefficient '" + s + "'");
  if (q.get_den() == 0) throw Error("zero denominator in '" + s + "'");
  q.canonicalize();
  return Scalar(f, q);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (p_ == 0)
    r.q_ = -q_;
  else if (v_ != 0)
    r.v_ = p_ - v_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (p_ == 0) {
    q_ += o.q_;
  } else {
    std::uint64_t s = std::uint64_t(v_) + o.v_;
    v_ = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (p_ == 0) {
    q_ -= o.q_;
  } else {
    v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(std::uint64_t(v_) + p_ - o.v_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (p_ == 0)
    q_ *= o.q_;
  else
    v_ = static_cast<std::uint32_t>(std::uint64_t(v_) * o.v_ % p_);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  Scalar r = *this;
  if (p_ == 0)
    r.q_ = 1 / q_;
  else
    r.v_ = mod_pow(v_, p_ - 2, p_);
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error("division by zero");
  if (p_ == 0) {
    q_ /= o.q_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string Scalar::to_string() const {
  if (p_ == 0) return q_.get_str();
  return std::to_string(v_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace powerhom
