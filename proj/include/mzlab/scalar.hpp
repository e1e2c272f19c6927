#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "mzlab/errors.hpp"

namespace mzlab {

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (e != 0) {
    if (e & 1U) acc = mul_mod(acc, base, p);
    base = mul_mod(base, base, p);
    e >>= 1U;
  }
  return acc;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace detail

/// An element of Q or of F_p. The characteristic travels with the value and
/// every binary operation checks that both operands agree.
class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;

  Scalar(long value, unsigned characteristic) : p_(characteristic) {
    if (p_ == 0) {
      q_ = value;
    } else {
      long m = value % static_cast<long>(p_);
      if (m < 0) m += static_cast<long>(p_);
      r_ = static_cast<std::uint64_t>(m);
    }
  }

  explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Reduces a rational into F_p (p = 0 keeps it rational).
  static Scalar from_rational(const mpq_class& q, unsigned characteristic) {
    if (characteristic == 0) return Scalar(q);
    Scalar out;
    out.p_ = characteristic;
    mpz_class num = q.get_num() % characteristic;
    mpz_class den = q.get_den() % characteristic;
    if (num < 0) num += characteristic;
    if (den == 0) {
      throw InputError("denominator of " + q.get_str() + " vanishes modulo " +
                       std::to_string(characteristic));
    }
    const auto n = num.get_ui();
    const auto d = den.get_ui();
    out.r_ = detail::mul_mod(n, detail::pow_mod(d, characteristic - 2, characteristic), characteristic);
    return out;
  }

  /// Parses `p/q` or an integer literal with optional sign.
  static Scalar parse(std::string_view text, unsigned characteristic) {
    mpq_class q;
    std::string s(text);
    if (s.empty() || q.set_str(s, 10) != 0) throw InputError("malformed rational literal '" + s + "'");
    if (q.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
    q.canonicalize();
    return from_rational(q, characteristic);
  }

  unsigned characteristic() const noexcept { return p_; }

  bool is_zero() const noexcept { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }
  bool is_one() const noexcept { return p_ == 0 ? q_ == 1 : r_ == 1; }

  /// Rational value; only meaningful in characteristic zero.
  const mpq_class& rational() const {
    if (p_ != 0) throw ContextError("rational() requested from a prime-field scalar");
    return q_;
  }

  std::uint64_t residue() const {
    if (p_ == 0) throw ContextError("residue() requested from a rational scalar");
    return r_;
  }

  Scalar zero() const { return Scalar(0, p_); }
  Scalar one() const { return Scalar(1, p_); }

  Scalar operator-() const {
    Scalar out = *this;
    if (p_ == 0) {
      out.q_ = -q_;
    } else if (r_ != 0) {
      out.r_ = p_ - r_;
    }
    return out;
  }

  Scalar& operator+=(const Scalar& o) {
    check(o);
    if (p_ == 0) {
      q_ += o.q_;
    } else {
      r_ = (r_ + o.r_) % p_;
    }
    return *this;
  }

  Scalar& operator-=(const Scalar& o) {
    check(o);
    if (p_ == 0) {
      q_ -= o.q_;
    } else {
      r_ = (r_ + p_ - o.r_) % p_;
    }
    return *this;
  }

  Scalar& operator*=(const Scalar& o) {
    check(o);
    if (p_ == 0) {
      q_ *= o.q_;
    } else {
      r_ = detail::mul_mod(r_, o.r_, p_);
    }
    return *this;
  }

  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  Scalar inverse() const {
    if (is_zero()) throw InputError("division by zero");
    Scalar out = *this;
    if (p_ == 0) {
      out.q_ = 1 / q_;
      out.q_.canonicalize();
    } else {
      out.r_ = detail::pow_mod(r_, p_ - 2, p_);
    }
    return out;
  }

  /// Integer power; negative exponents invert.
  Scalar pow(long e) const {
    Scalar base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Scalar acc = one();
    while (k != 0) {
      if (k & 1UL) acc *= base;
      base *= base;
      k >>= 1U;
    }
    return acc;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.p_ != b.p_) return false;
    return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
  }

  /// `p/q`, an integer, or a residue in [0, p).
  std::string to_string() const { return p_ == 0 ? q_.get_str() : std::to_string(r_); }

  /// True when the value prints with a leading minus sign.
  bool is_negative() const noexcept { return p_ == 0 && sgn(q_) < 0; }

 private:
  void check(const Scalar& o) const {
    if (p_ != o.p_) {
      throw ContextError("characteristic mismatch: " + std::to_string(p_) + " vs " + std::to_string(o.p_));
    }
  }

  unsigned p_ = 0;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

/// The base field: Q when `characteristic == 0`, otherwise F_p.
struct Field {
  unsigned characteristic = 0;

  static Field rationals() { return Field{0}; }
  static Field prime(unsigned p) {
    if (!detail::is_prime(p)) throw InputError("characteristic " + std::to_string(p) + " is not prime");
    if (p >= (1U << 31)) throw InputError("prime characteristic must be below 2^31");
    return Field{p};
  }

  Scalar operator()(long v) const { return Scalar(v, characteristic); }
  Scalar zero() const { return Scalar(0, characteristic); }
  Scalar one() const { return Scalar(1, characteristic); }
  Scalar from(const mpq_class& q) const { return Scalar::from_rational(q, characteristic); }
  Scalar parse(std::string_view s) const { return Scalar::parse(s, characteristic); }

  friend bool operator==(const Field&, const Field&) = default;
};

}  // namespace mzlab
