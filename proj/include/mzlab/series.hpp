#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mzlab/errors.hpp"
#include "mzlab/format.hpp"
#include "mzlab/laurent.hpp"
#include "mzlab/linalg.hpp"
#include "mzlab/multi_index.hpp"
#include "mzlab/scalar.hpp"

namespace mzlab {

/// Multivariate power series known through total degree `order` (the class
/// of f modulo m^(order+1), m = (x1, ..., xn)).
class TruncSeries {
 public:
  TruncSeries() = default;
  TruncSeries(RingContext ctx, std::int64_t order) : ctx_(ctx), order_(order) {
    if (order < 0) throw InputError("truncation order must be non-negative");
  }

  static TruncSeries constant(RingContext ctx, std::int64_t order, const Scalar& c) {
    TruncSeries f(ctx, order);
    f.add_term(MultiIndex(ctx.nvars), c);
    return f;
  }
  static TruncSeries one(RingContext ctx, std::int64_t order) { return constant(ctx, order, ctx.field.one()); }

  static TruncSeries variable(RingContext ctx, std::int64_t order, std::size_t i) {
    if (i >= ctx.nvars) throw InputError("variable x" + std::to_string(i + 1) + " out of range");
    TruncSeries f(ctx, order);
    f.add_term(MultiIndex::unit(ctx.nvars, i), ctx.field.one());
    return f;
  }

  static TruncSeries monomial(RingContext ctx, std::int64_t order, const MultiIndex& a, const Scalar& c) {
    TruncSeries f(ctx, order);
    f.add_term(a, c);
    return f;
  }

  /// Truncates a polynomial; negative exponents are rejected.
  static TruncSeries from_poly(const LaurentPoly& p, std::int64_t order) {
    TruncSeries f(p.context(), order);
    for (const auto& [a, c] : p.terms()) {
      if (!a.is_natural()) throw InputError("negative exponent in power-series context");
      f.add_term(a, c);
    }
    return f;
  }

  /// sum_{|a| <= order} x1^a (the geometric series 1/(1 - x1) when n = 1).
  static TruncSeries geometric(RingContext ctx, std::int64_t order, std::size_t var) {
    TruncSeries f(ctx, order);
    for (std::int64_t i = 0; i <= order; ++i) {
      MultiIndex a(ctx.nvars);
      a[var] = i;
      f.add_term(a, ctx.field.one());
    }
    return f;
  }

  const RingContext& context() const noexcept { return ctx_; }
  std::size_t nvars() const noexcept { return ctx_.nvars; }
  std::int64_t order() const noexcept { return order_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient of x^a. Exponents above the truncation order are unknown.
  Scalar coeff(const MultiIndex& a) const {
    require_index(a);
    if (!a.is_natural()) return ctx_.field.zero();
    if (a.total_degree() > order_) {
      throw Inconclusive("coefficient of degree " + std::to_string(a.total_degree()) +
                         " requested beyond truncation order " + std::to_string(order_));
    }
    auto it = terms_.find(a);
    return it == terms_.end() ? ctx_.field.zero() : it->second;
  }

  Scalar constant_term() const { return coeff(MultiIndex(ctx_.nvars)); }
  bool is_unit() const { return !constant_term().is_zero(); }

  /// Smallest total degree in the support; order + 1 for the zero series.
  std::int64_t valuation() const { return terms_.empty() ? order_ + 1 : terms_.begin()->first.total_degree(); }

  /// Coefficients of x1..xn.
  Vector linear_coeffs() const {
    Vector v;
    for (std::size_t i = 0; i < ctx_.nvars; ++i) {
      v.push_back(order_ >= 1 ? coeff(MultiIndex::unit(ctx_.nvars, i)) : ctx_.field.zero());
    }
    return v;
  }

  void add_term(const MultiIndex& a, const Scalar& c) {
    require_index(a);
    if (!a.is_natural()) throw InputError("negative exponent in power-series context");
    if (c.characteristic() != ctx_.field.characteristic) throw ContextError("scalar characteristic mismatch");
    if (c.is_zero() || a.total_degree() > order_) return;
    auto [it, inserted] = terms_.try_emplace(a, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TruncSeries truncate(std::int64_t order) const {
    if (order > order_) throw InputError("cannot raise truncation order by truncating");
    TruncSeries out(ctx_, order);
    for (const auto& [a, c] : terms_) {
      if (a.total_degree() > order) break;
      out.terms_.emplace(a, c);
    }
    return out;
  }

  TruncSeries operator-() const {
    TruncSeries out = *this;
    for (auto& [a, c] : out.terms_) c = -c;
    return out;
  }

  /// Sums of series of different orders are valid through the smaller one.
  friend TruncSeries operator+(const TruncSeries& f, const TruncSeries& g) { return combine(f, g, false); }
  friend TruncSeries operator-(const TruncSeries& f, const TruncSeries& g) { return combine(f, g, true); }

  friend TruncSeries operator*(TruncSeries f, const Scalar& s) {
    if (s.is_zero()) {
      f.terms_.clear();
      return f;
    }
    for (auto& [a, c] : f.terms_) c *= s;
    return f;
  }
  friend TruncSeries operator*(const Scalar& s, TruncSeries f) { return std::move(f) * s; }

  /// Product at the common order; mismatched orders are an input error.
  friend TruncSeries operator*(const TruncSeries& f, const TruncSeries& g) {
    require_same_context(f.ctx_, g.ctx_);
    if (f.order_ != g.order_) {
      throw InputError("truncation order mismatch: " + std::to_string(f.order_) + " vs " + std::to_string(g.order_));
    }
    return product(f, g, f.order_);
  }

  /// Product whose order is the largest one the factors determine:
  /// min(Kf + val g, Kg + val f).
  friend TruncSeries mul_valid(const TruncSeries& f, const TruncSeries& g) {
    require_same_context(f.ctx_, g.ctx_);
    const std::int64_t k = std::min(f.order_ + g.valuation(), g.order_ + f.valuation());
    return product(f, g, k);
  }

  friend bool operator==(const TruncSeries& f, const TruncSeries& g) {
    return f.ctx_ == g.ctx_ && f.order_ == g.order_ && f.terms_ == g.terms_;
  }

  /// Equality of the coefficients both operands know.
  bool agrees_with(const TruncSeries& g) const {
    require_same_context(ctx_, g.ctx_);
    const auto k = std::min(order_, g.order_);
    return truncate(k).terms_ == g.truncate(k).terms_;
  }

  /// Inverse of a unit by the homogeneous recursion
  /// G_d = -f0^{-1} sum_{j>=1} F_j G_{d-j}.
  TruncSeries inverse() const {
    const Scalar f0 = constant_term();
    if (f0.is_zero()) throw NotAUnit("series " + to_string() + " has zero constant term and is not a unit");
    const Scalar inv0 = f0.inverse();
    auto parts = homogeneous_parts();
    std::vector<TermMap> g(static_cast<std::size_t>(order_) + 1);
    g[0].emplace(MultiIndex(ctx_.nvars), inv0);
    for (std::int64_t d = 1; d <= order_; ++d) {
      TruncSeries acc(ctx_, order_);
      for (std::int64_t j = 1; j <= d; ++j) {
        for (const auto& [a, c] : parts[static_cast<std::size_t>(j)]) {
          for (const auto& [b, e] : g[static_cast<std::size_t>(d - j)]) acc.add_term(a + b, c * e);
        }
      }
      for (const auto& [a, c] : acc.terms_) g[static_cast<std::size_t>(d)].emplace(a, -(c * inv0));
    }
    TruncSeries out(ctx_, order_);
    for (const auto& part : g) {
      for (const auto& [a, c] : part) out.terms_.emplace(a, c);
    }
    return out;
  }

  TruncSeries pow(std::int64_t e) const {
    TruncSeries base = e < 0 ? inverse() : *this;
    auto k = static_cast<std::uint64_t>(e < 0 ? -e : e);
    TruncSeries acc = one(ctx_, order_);
    while (k != 0) {
      if (k & 1U) acc = acc * base;
      k >>= 1U;
      if (k != 0) base = base * base;
    }
    return acc;
  }

  /// d/dx_{i+1}; the result is valid through order - 1.
  TruncSeries partial(std::size_t i) const {
    if (i >= ctx_.nvars) throw InputError("partial derivative index out of range");
    if (order_ < 1) throw Inconclusive("derivative of an order-0 truncation carries no information");
    TruncSeries out(ctx_, order_ - 1);
    for (const auto& [a, c] : terms_) {
      if (a[i] == 0) continue;
      MultiIndex b = a;
      b[i] -= 1;
      out.add_term(b, c * ctx_.field(static_cast<long>(a[i])));
    }
    return out;
  }

  /// The polynomial sum of the known terms.
  LaurentPoly to_poly() const { return LaurentPoly::from_terms(ctx_, terms_); }

  std::vector<TermMap> homogeneous_parts() const {
    std::vector<TermMap> parts(static_cast<std::size_t>(order_) + 1);
    for (const auto& [a, c] : terms_) parts[static_cast<std::size_t>(a.total_degree())].emplace(a, c);
    return parts;
  }

  std::string to_string() const { return detail::format_terms(terms_); }

 private:
  static TruncSeries product(const TruncSeries& f, const TruncSeries& g, std::int64_t k) {
    TruncSeries out(f.ctx_, k);
    for (const auto& [a, c] : f.terms_) {
      const auto da = a.total_degree();
      if (da > k) break;
      for (const auto& [b, e] : g.terms_) {
        if (da + b.total_degree() > k) break;
        out.add_term(a + b, c * e);
      }
    }
    return out;
  }

  static TruncSeries combine(const TruncSeries& f, const TruncSeries& g, bool subtract) {
    require_same_context(f.ctx_, g.ctx_);
    const auto k = std::min(f.order_, g.order_);
    TruncSeries out = f.order_ == k ? f : f.truncate(k);
    for (const auto& [a, c] : g.terms_) {
      if (a.total_degree() > k) break;
      out.add_term(a, subtract ? -c : c);
    }
    return out;
  }

  void require_index(const MultiIndex& a) const {
    if (a.size() != ctx_.nvars) {
      throw InputError("exponent vector " + a.to_string() + " does not have " + std::to_string(ctx_.nvars) +
                       " entries");
    }
  }

  RingContext ctx_{};
  std::int64_t order_ = 0;
  TermMap terms_;
};

inline TruncSeries ts_mul(const TruncSeries& f, const TruncSeries& g) { return f * g; }

inline TruncSeries ts_inverse(const TruncSeries& f) { return f.inverse(); }

/// f(images): x_i is replaced by images[i]. Every image must lie in the
/// maximal ideal, otherwise the substitution is not continuous and the
/// infinite tail of f would feed every coefficient.
inline TruncSeries ts_substitute(const TruncSeries& f, const std::vector<TruncSeries>& images) {
  if (images.size() != f.nvars()) {
    throw InputError("substitution needs " + std::to_string(f.nvars()) + " images, got " +
                     std::to_string(images.size()));
  }
  if (images.empty()) return f;
  const RingContext& ctx = images.front().context();
  std::int64_t k = f.order();
  for (const auto& h : images) {
    require_same_context(ctx, h.context());
    if (ctx.field.characteristic != f.context().field.characteristic) throw ContextError("characteristic mismatch");
    if (!h.constant_term().is_zero()) {
      throw InputError("substitution image " + h.to_string() +
                       " has nonzero constant term (phi(x_i) must lie in the maximal ideal)");
    }
    k = std::min(k, h.order());
  }
  // powers[i][e] = images[i]^e at order k
  std::vector<std::vector<TruncSeries>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    powers[i].push_back(TruncSeries::one(ctx, k));
    powers[i].push_back(images[i].truncate(k));
  }
  auto power = [&](std::size_t i, std::int64_t e) -> const TruncSeries& {
    auto& row = powers[i];
    while (static_cast<std::int64_t>(row.size()) <= e) row.push_back(row.back() * row[1]);
    return row[static_cast<std::size_t>(e)];
  };
  TruncSeries out(ctx, k);
  for (const auto& [a, c] : f.terms()) {
    if (a.total_degree() > k) break;
    TruncSeries term = TruncSeries::constant(ctx, k, c);
    for (std::size_t i = 0; i < a.size() && !term.is_zero(); ++i) {
      if (a[i] != 0) term = term * power(i, a[i]);
    }
    out = out + term;
  }
  return out;
}

/// Componentwise substitution F(G) = (F_1(G), ..., F_m(G)).
inline std::vector<TruncSeries> ts_compose(const std::vector<TruncSeries>& outer,
                                           const std::vector<TruncSeries>& inner) {
  std::vector<TruncSeries> out;
  out.reserve(outer.size());
  for (const auto& f : outer) out.push_back(ts_substitute(f, inner));
  return out;
}

/// Matrix of linear parts: row i holds the coefficients of x_1..x_n in F_i.
inline Matrix linear_part_matrix(const std::vector<TruncSeries>& maps) {
  if (maps.empty()) throw InputError("empty map");
  const auto n = maps.front().nvars();
  Matrix m(maps.front().context().field, maps.size(), n);
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const Vector row = maps[i].linear_coeffs();
    for (std::size_t j = 0; j < n; ++j) m(i, j) = row[j];
  }
  return m;
}

inline std::vector<TruncSeries> identity_map(RingContext ctx, std::int64_t order) {
  std::vector<TruncSeries> id;
  for (std::size_t i = 0; i < ctx.nvars; ++i) id.push_back(TruncSeries::variable(ctx, order, i));
  return id;
}

/// Compositional inverse G of F (F(G) = G(F) = x through order K).
///
/// Start from G = L^{-1} x with L the linear part of F. If G is correct
/// through degree d - 1, then F(G) - x starts in degree d and subtracting
/// L^{-1} applied to that degree-d error fixes degree d; nonlinear terms of F
/// only see the correction in degrees > d.
inline std::vector<TruncSeries> formal_inverse(const std::vector<TruncSeries>& maps, std::int64_t order) {
  if (maps.empty()) throw InputError("formal_inverse of an empty map");
  const RingContext ctx = maps.front().context();
  const std::size_t n = ctx.nvars;
  if (maps.size() != n) throw InputError("formal_inverse needs exactly n = nvars components");
  std::vector<TruncSeries> f;
  for (const auto& m : maps) {
    require_same_context(ctx, m.context());
    if (m.order() < order) throw InputError("component known only through order " + std::to_string(m.order()));
    if (!m.constant_term().is_zero()) throw InputError("component " + m.to_string() + " has nonzero constant term");
    f.push_back(m.truncate(order));
  }
  const Matrix lin = linear_part_matrix(f);
  if (lin.rank() < n) throw InputError("Jacobian not invertible at 0");
  const Matrix lin_inv = lin.inverse();

  const auto x = identity_map(ctx, order);
  std::vector<TruncSeries> g;
  for (std::size_t i = 0; i < n; ++i) {
    TruncSeries gi(ctx, order);
    for (std::size_t j = 0; j < n; ++j) gi.add_term(MultiIndex::unit(n, j), lin_inv(i, j));
    g.push_back(std::move(gi));
  }
  for (std::int64_t d = 2; d <= order; ++d) {
    const auto fg = ts_compose(f, g);
    std::vector<TermMap> err(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto parts = (fg[i] - x[i]).homogeneous_parts();
      err[i] = parts[static_cast<std::size_t>(d)];
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (lin_inv(i, j).is_zero()) continue;
        for (const auto& [a, c] : err[j]) g[i].add_term(a, -(lin_inv(i, j) * c));
      }
    }
  }
  return g;
}

}  // namespace mzlab
