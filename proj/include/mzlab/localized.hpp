#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

#include "mzlab/errors.hpp"
#include "mzlab/multi_index.hpp"
#include "mzlab/series.hpp"

namespace mzlab {

/// Element x^shift * body of the localization k[[x]][x^-1], with the body a
/// truncated series. The coefficient at exponent e is known exactly when
/// e - shift has a negative entry (it is zero) or total degree <= body order.
class LocalizedSeries {
 public:
  LocalizedSeries() = default;
  LocalizedSeries(MultiIndex shift, TruncSeries body) : shift_(std::move(shift)), body_(std::move(body)) {
    shift_.require_same_size(MultiIndex(body_.nvars()));
  }

  static LocalizedSeries monomial(RingContext ctx, std::int64_t order, const MultiIndex& a) {
    return {a, TruncSeries::one(ctx, order)};
  }
  static LocalizedSeries from_series(TruncSeries body) {
    MultiIndex zero(body.nvars());
    return {std::move(zero), std::move(body)};
  }

  const MultiIndex& shift() const noexcept { return shift_; }
  const TruncSeries& body() const noexcept { return body_; }
  const RingContext& context() const noexcept { return body_.context(); }
  bool is_zero() const noexcept { return body_.is_zero(); }

  Scalar coeff(const MultiIndex& e) const {
    const MultiIndex rel = e - shift_;
    if (!rel.is_natural()) return context().field.zero();
    return body_.coeff(rel);
  }

  Scalar constant_term() const { return coeff(MultiIndex(body_.nvars())); }

  /// Products add shifts; the bodies multiply at the order both determine.
  friend LocalizedSeries operator*(const LocalizedSeries& f, const LocalizedSeries& g) {
    return {f.shift_ + g.shift_, mul_valid(f.body_, g.body_)};
  }

  /// Negative powers need a body with nonzero constant term.
  LocalizedSeries pow(std::int64_t m) const { return {m * shift_, body_.pow(m)}; }

  LocalizedSeries operator-() const { return {shift_, -body_}; }

  /// Sums are taken over the componentwise minimum of the two shifts.
  friend LocalizedSeries operator+(const LocalizedSeries& f, const LocalizedSeries& g) {
    MultiIndex s = f.shift_;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = std::min(s[i], g.shift_[i]);
    return {s, f.rebase(s).body_ + g.rebase(s).body_};
  }
  friend LocalizedSeries operator-(const LocalizedSeries& f, const LocalizedSeries& g) { return f + (-g); }
  friend LocalizedSeries operator*(LocalizedSeries f, const Scalar& c) {
    f.body_ = f.body_ * c;
    return f;
  }

  /// Same element written as x^s * body'; s must be <= shift componentwise.
  /// Multiplying the body by x^(shift - s) raises its known order by |shift - s|.
  LocalizedSeries rebase(const MultiIndex& s) const {
    const MultiIndex gap = shift_ - s;
    if (!gap.is_natural()) throw InputError("rebase target " + s.to_string() + " exceeds shift " + shift_.to_string());
    TruncSeries body(context(), body_.order() + gap.total_degree());
    for (const auto& [a, c] : body_.terms()) body.add_term(a + gap, c);
    return {s, std::move(body)};
  }

  /// Known terms, keyed by their true exponents.
  TermMap terms() const {
    TermMap out;
    for (const auto& [a, c] : body_.terms()) out.emplace(a + shift_, c);
    return out;
  }

  std::string to_string() const { return detail::format_terms(terms()); }

 private:
  MultiIndex shift_;
  TruncSeries body_;
};

}  // namespace mzlab
