#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mzlab/errors.hpp"
#include "mzlab/linalg.hpp"
#include "mzlab/scalar.hpp"

namespace mzlab {

/// Dense univariate polynomial in T over Q or F_p; coefficients stored from
/// the constant term upward with no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(Field field) : field_(field) {}
  UniPoly(Field field, std::vector<Scalar> coeffs) : field_(field), c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(Field field, const Scalar& s) { return UniPoly(field, {s}); }
  /// T
  static UniPoly t(Field field) { return UniPoly(field, {field.zero(), field.one()}); }
  /// c * T^k
  static UniPoly monomial(Field field, std::size_t k, const Scalar& c) {
    std::vector<Scalar> v(k + 1, field.zero());
    v[k] = c;
    return UniPoly(field, std::move(v));
  }
  static UniPoly from_ints(Field field, const std::vector<long>& coeffs) {
    std::vector<Scalar> v;
    for (long x : coeffs) v.push_back(field(x));
    return UniPoly(field, std::move(v));
  }

  Field field() const noexcept { return field_; }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const noexcept { return c_; }
  Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : field_.zero(); }
  Scalar lead() const { return c_.empty() ? field_.zero() : c_.back(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

  UniPoly monic() const {
    if (is_zero()) return *this;
    return *this * lead().inverse();
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    a.check(b);
    std::vector<Scalar> v(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return UniPoly(a.field_, std::move(v));
  }
  UniPoly operator-() const {
    UniPoly out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    a.check(b);
    if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
    std::vector<Scalar> v(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(a.field_, std::move(v));
  }
  friend UniPoly operator*(UniPoly a, const Scalar& s) {
    for (auto& x : a.c_) x *= s;
    a.trim();
    return a;
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

  UniPoly pow(std::size_t e) const {
    UniPoly acc = constant(field_, field_.one());
    UniPoly base = *this;
    while (e != 0) {
      if (e & 1U) acc = acc * base;
      e >>= 1U;
      if (e != 0) base = base * base;
    }
    return acc;
  }

  /// Quotient and remainder of division by a nonzero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
    check(d);
    if (d.is_zero()) throw InputError("polynomial division by zero");
    UniPoly r = *this;
    if (r.degree() < d.degree()) return {UniPoly(field_), r};
    std::vector<Scalar> q(static_cast<std::size_t>(r.degree() - d.degree() + 1), field_.zero());
    const Scalar inv = d.lead().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
      const auto shift = static_cast<std::size_t>(r.degree() - d.degree());
      const Scalar f = r.lead() * inv;
      q[shift] = f;
      for (std::size_t i = 0; i < d.c_.size(); ++i) r.c_[i + shift] -= f * d.c_[i];
      r.trim();
    }
    return {UniPoly(field_, std::move(q)), r};
  }
  UniPoly operator/(const UniPoly& d) const { return divmod(d).first; }
  UniPoly operator%(const UniPoly& d) const { return divmod(d).second; }

  bool divides(const UniPoly& f) const { return (f % *this).is_zero(); }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly(field_);
    std::vector<Scalar> v;
    for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * field_(static_cast<long>(i)));
    return UniPoly(field_, std::move(v));
  }

  Scalar eval(const Scalar& x) const {
    Scalar acc = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// p(A) by Horner's rule.
  Matrix eval(const Matrix& a) const {
    a.require_square();
    const auto n = a.rows();
    Matrix acc(field_, n, n);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * a + (*it) * Matrix::identity(field_, n);
    return acc;
  }

  /// Descending powers of T, e.g. `T^2 - 3/2*T + 1`.
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const Scalar& c = c_[k];
      if (c.is_zero()) continue;
      const bool neg = c.is_negative();
      const Scalar mag = neg ? -c : c;
      if (first) {
        if (neg) s += "-";
      } else {
        s += neg ? " - " : " + ";
      }
      first = false;
      std::string mono = k == 0 ? "" : (k == 1 ? "T" : "T^" + std::to_string(k));
      if (mono.empty()) {
        s += mag.to_string();
      } else if (mag.is_one()) {
        s += mono;
      } else {
        s += mag.to_string() + "*" + mono;
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  void check(const UniPoly& o) const {
    if (!(field_ == o.field_)) throw ContextError("polynomial characteristic mismatch");
  }

  Field field_{};
  std::vector<Scalar> c_;
};

/// Monic gcd (zero only when both inputs are zero).
inline UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// f / gcd(f, f'), made monic. Valid in characteristic zero.
inline UniPoly squarefree_part(const UniPoly& f) {
  if (f.degree() <= 0) return UniPoly::constant(f.field(), f.field().one());
  return (f / gcd(f, f.derivative())).monic();
}

inline bool is_squarefree(const UniPoly& f) { return gcd(f, f.derivative()).degree() == 0; }

}  // namespace mzlab
