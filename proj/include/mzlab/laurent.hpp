#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include "mzlab/errors.hpp"
#include "mzlab/format.hpp"
#include "mzlab/multi_index.hpp"
#include "mzlab/scalar.hpp"

namespace mzlab {

/// Number of variables plus base field. Every ring element carries one.
struct RingContext {
  std::size_t nvars = 1;
  Field field{};

  Scalar scalar(long v) const { return field(v); }

  friend bool operator==(const RingContext&, const RingContext&) = default;

  std::string to_string() const {
    return "nvars=" + std::to_string(nvars) + " char=" + std::to_string(field.characteristic);
  }
};

inline void require_same_context(const RingContext& a, const RingContext& b) {
  if (!(a == b)) throw ContextError("ring context mismatch: " + a.to_string() + " vs " + b.to_string());
}

/// Sparse Laurent polynomial sum_a f_a x^a over Q or F_p. Zero coefficients
/// are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(RingContext ctx) : ctx_(ctx) {}

  static LaurentPoly constant(RingContext ctx, const Scalar& c) {
    return monomial(ctx, MultiIndex(ctx.nvars), c);
  }
  static LaurentPoly constant(RingContext ctx, long c) { return constant(ctx, ctx.field(c)); }

  static LaurentPoly monomial(RingContext ctx, const MultiIndex& a, const Scalar& c) {
    LaurentPoly f(ctx);
    f.require_index(a);
    f.require_scalar(c);
    if (!c.is_zero()) f.terms_.emplace(a, c);
    return f;
  }
  static LaurentPoly monomial(RingContext ctx, const MultiIndex& a) { return monomial(ctx, a, ctx.field.one()); }

  static LaurentPoly variable(RingContext ctx, std::size_t i) {
    if (i >= ctx.nvars) throw InputError("variable x" + std::to_string(i + 1) + " out of range");
    return monomial(ctx, MultiIndex::unit(ctx.nvars, i));
  }

  static LaurentPoly from_terms(RingContext ctx, const TermMap& terms) {
    LaurentPoly f(ctx);
    for (const auto& [a, c] : terms) f.add_term(a, c);
    return f;
  }

  const RingContext& context() const noexcept { return ctx_; }
  std::size_t nvars() const noexcept { return ctx_.nvars; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Coefficient of x^a, zero when absent.
  Scalar coeff(const MultiIndex& a) const {
    require_index(a);
    auto it = terms_.find(a);
    return it == terms_.end() ? ctx_.field.zero() : it->second;
  }

  Scalar constant_term() const { return coeff(MultiIndex(ctx_.nvars)); }

  void add_term(const MultiIndex& a, const Scalar& c) {
    require_index(a);
    require_scalar(c);
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(a, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  LaurentPoly operator-() const {
    LaurentPoly out = *this;
    for (auto& [a, c] : out.terms_) c = -c;
    return out;
  }

  LaurentPoly& operator+=(const LaurentPoly& g) {
    require_same_context(ctx_, g.ctx_);
    for (const auto& [a, c] : g.terms_) add_term(a, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& g) {
    require_same_context(ctx_, g.ctx_);
    for (const auto& [a, c] : g.terms_) add_term(a, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& g) { return *this = *this * g; }
  LaurentPoly& operator*=(const Scalar& s) {
    require_scalar(s);
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [a, c] : terms_) c *= s;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly f, const LaurentPoly& g) { return f += g; }
  friend LaurentPoly operator-(LaurentPoly f, const LaurentPoly& g) { return f -= g; }
  friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
    require_same_context(f.ctx_, g.ctx_);
    LaurentPoly out(f.ctx_);
    for (const auto& [a, c] : f.terms_) {
      for (const auto& [b, d] : g.terms_) out.add_term(a + b, c * d);
    }
    return out;
  }
  friend LaurentPoly operator*(LaurentPoly f, const Scalar& s) { return f *= s; }
  friend LaurentPoly operator*(const Scalar& s, LaurentPoly f) { return f *= s; }

  friend bool operator==(const LaurentPoly& f, const LaurentPoly& g) {
    return f.ctx_ == g.ctx_ && f.terms_ == g.terms_;
  }

  /// Units of k[x, x^-1] are exactly the nonzero scalar multiples of monomials.
  bool is_unit() const noexcept { return terms_.size() == 1; }

  LaurentPoly inverse() const {
    if (!is_unit()) throw NotAUnit("Laurent polynomial " + to_string() + " is not a unit");
    const auto& [a, c] = *terms_.begin();
    return monomial(ctx_, -1 * a, c.inverse());
  }

  /// f^e; negative e requires f to be a unit.
  LaurentPoly pow(std::int64_t e) const {
    LaurentPoly base = e < 0 ? inverse() : *this;
    auto k = static_cast<std::uint64_t>(e < 0 ? -e : e);
    LaurentPoly acc = constant(ctx_, ctx_.field.one());
    while (k != 0) {
      if (k & 1U) acc = acc * base;
      k >>= 1U;
      if (k != 0) base = base * base;
    }
    return acc;
  }

  /// Partial derivative with respect to x_{i+1}.
  LaurentPoly partial(std::size_t i) const {
    if (i >= ctx_.nvars) throw InputError("partial derivative index out of range");
    LaurentPoly out(ctx_);
    for (const auto& [a, c] : terms_) {
      if (a[i] == 0) continue;
      MultiIndex b = a;
      b[i] -= 1;
      out.add_term(b, c * ctx_.field(static_cast<long>(a[i])));
    }
    return out;
  }

  /// True when every exponent is non-negative.
  bool is_polynomial() const {
    for (const auto& [a, c] : terms_) {
      if (!a.is_natural()) return false;
    }
    return true;
  }

  /// Largest total degree in the support; lowest() for the zero polynomial.
  std::int64_t degree() const {
    if (terms_.empty()) return std::numeric_limits<std::int64_t>::lowest();
    return terms_.rbegin()->first.total_degree();
  }

  std::string to_string() const { return detail::format_terms(terms_); }

 private:
  void require_index(const MultiIndex& a) const {
    if (a.size() != ctx_.nvars) {
      throw InputError("exponent vector " + a.to_string() + " does not have " + std::to_string(ctx_.nvars) +
                       " entries");
    }
  }
  void require_scalar(const Scalar& c) const {
    if (c.characteristic() != ctx_.field.characteristic) {
      throw ContextError("scalar of characteristic " + std::to_string(c.characteristic()) +
                         " in a ring of characteristic " + std::to_string(ctx_.field.characteristic));
    }
  }

  RingContext ctx_{};
  TermMap terms_;
};

enum class ArithOp { add, sub, mul };

inline LaurentPoly lp_arith(const LaurentPoly& f, const LaurentPoly& g, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return f + g;
    case ArithOp::sub:
      return f - g;
    case ArithOp::mul:
      return f * g;
  }
  throw InputError("unknown arithmetic operation");
}

inline Scalar lp_coeff(const LaurentPoly& f, const MultiIndex& a) { return f.coeff(a); }

}  // namespace mzlab
