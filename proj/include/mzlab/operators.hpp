#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "mzlab/errors.hpp"
#include "mzlab/laurent.hpp"
#include "mzlab/multi_index.hpp"
#include "mzlab/report.hpp"
#include "mzlab/series.hpp"
#include "mzlab/unipoly.hpp"

namespace mzlab {

/// The two carrier rings operators act on.
template <class R>
concept Carrier = std::same_as<R, LaurentPoly> || std::same_as<R, TruncSeries>;

/// Exact equality for Laurent polynomials; agreement through the common
/// valid order for truncated series.
inline bool same_element(const LaurentPoly& a, const LaurentPoly& b) { return a == b; }
inline bool same_element(const TruncSeries& a, const TruncSeries& b) { return a.agrees_with(b); }

namespace detail {

inline LaurentPoly zero_like(const LaurentPoly& f) { return LaurentPoly(f.context()); }
inline TruncSeries zero_like(const TruncSeries& f) { return TruncSeries(f.context(), f.order()); }

inline LaurentPoly one_like(const LaurentPoly& f) { return LaurentPoly::constant(f.context(), 1); }
inline TruncSeries one_like(const TruncSeries& f) { return TruncSeries::one(f.context(), f.order()); }

inline LaurentPoly generator(const LaurentPoly& like, std::size_t i) {
  return LaurentPoly::variable(like.context(), i);
}
inline TruncSeries generator(const TruncSeries& like, std::size_t i) {
  return TruncSeries::variable(like.context(), like.order(), i);
}

template <Carrier R>
void require_family(const std::vector<R>& v, const char* what) {
  if (v.empty()) throw InputError(std::string(what) + ": need at least one variable");
  const RingContext& ctx = v.front().context();
  if (v.size() != ctx.nvars) {
    throw InputError(std::string(what) + ": " + std::to_string(v.size()) + " entries for " +
                     std::to_string(ctx.nvars) + " variables");
  }
  for (const auto& x : v) require_same_context(ctx, x.context());
}

}  // namespace detail

/// D = sum_i p_i d/dx_i.
template <Carrier R>
class Derivation {
 public:
  using carrier = R;

  explicit Derivation(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    detail::require_family(coeffs_, "derivation");
  }

  /// Sum c_i x_i d/dx_i.
  static Derivation diagonal(const RingContext& ctx, const std::vector<Scalar>& c)
    requires std::same_as<R, LaurentPoly>
  {
    if (c.size() != ctx.nvars) throw InputError("diagonal derivation: weight count mismatch");
    std::vector<R> p;
    for (std::size_t i = 0; i < ctx.nvars; ++i) p.push_back(LaurentPoly::variable(ctx, i) * c[i]);
    return Derivation(std::move(p));
  }

  const std::vector<R>& coeffs() const noexcept { return coeffs_; }
  const RingContext& context() const noexcept { return coeffs_.front().context(); }
  std::size_t nvars() const noexcept { return coeffs_.size(); }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const R& p) { return p.is_zero(); });
  }

  /// sum_i p_i * df/dx_i. For series the result carries the order the data
  /// actually determines (never more than the order of f).
  R apply(const R& f) const {
    require_same_context(context(), f.context());
    if constexpr (std::same_as<R, LaurentPoly>) {
      LaurentPoly out(f.context());
      for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) out += coeffs_[i] * f.partial(i);
      }
      return out;
    } else {
      std::optional<TruncSeries> out;
      for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        TruncSeries term = mul_valid(coeffs_[i], f.partial(i));
        out = out ? *out + term : term;
      }
      const auto k = std::min(out->order(), f.order());
      return out->truncate(k);
    }
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i != 0) s += ", ";
      s += "D(x" + std::to_string(i + 1) + ")=" + coeffs_[i].to_string();
    }
    return s;
  }

 private:
  std::vector<R> coeffs_;
};

/// Algebra endomorphism given by generator images x_i -> images[i].
template <Carrier R>
class Endomorphism {
 public:
  using carrier = R;

  explicit Endomorphism(std::vector<R> images) : images_(std::move(images)) {
    detail::require_family(images_, "endomorphism");
    if constexpr (std::same_as<R, TruncSeries>) {
      for (std::size_t i = 0; i < images_.size(); ++i) {
        if (!images_[i].constant_term().is_zero()) {
          throw InputError("phi(x" + std::to_string(i + 1) + ") = " + images_[i].to_string() +
                           " has a nonzero constant term c; then phi((x_i - c)^-1) would be the inverse of a "
                           "series with zero constant term, which does not exist in k[[x]]");
        }
      }
    }
  }

  static Endomorphism identity(const R& like) {
    std::vector<R> imgs;
    for (std::size_t i = 0; i < like.context().nvars; ++i) imgs.push_back(detail::generator(like, i));
    return Endomorphism(std::move(imgs));
  }

  const std::vector<R>& images() const noexcept { return images_; }
  const RingContext& context() const noexcept { return images_.front().context(); }
  std::size_t nvars() const noexcept { return images_.size(); }

  R apply(const R& f) const {
    require_same_context(context(), f.context());
    if constexpr (std::same_as<R, TruncSeries>) {
      return ts_substitute(f, images_);
    } else {
      std::map<std::pair<std::size_t, std::int64_t>, LaurentPoly> cache;
      auto power = [&](std::size_t i, std::int64_t e) -> const LaurentPoly& {
        auto key = std::make_pair(i, e);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        if (e < 0 && !images_[i].is_unit()) {
          throw InputError("phi(x" + std::to_string(i + 1) + ") = " + images_[i].to_string() +
                           " is not a unit but x" + std::to_string(i + 1) + " appears with a negative exponent");
        }
        return cache.emplace(key, images_[i].pow(e)).first->second;
      };
      LaurentPoly out(f.context());
      for (const auto& [a, c] : f.terms()) {
        LaurentPoly term = LaurentPoly::constant(f.context(), c);
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (a[i] != 0) term = term * power(i, a[i]);
        }
        out += term;
      }
      return out;
    }
  }

  /// phi after psi: x_i -> phi(psi(x_i)).
  Endomorphism after(const Endomorphism& psi) const {
    std::vector<R> imgs;
    for (const auto& g : psi.images_) imgs.push_back(apply(g));
    return Endomorphism(std::move(imgs));
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i != 0) s += ", ";
      s += "phi(x" + std::to_string(i + 1) + ")=" + images_[i].to_string();
    }
    return s;
  }

 private:
  std::vector<R> images_;
};

/// delta = 1 - phi.
template <Carrier R>
class EDerivation {
 public:
  using carrier = R;

  explicit EDerivation(Endomorphism<R> phi) : phi_(std::move(phi)) {}

  const Endomorphism<R>& phi() const noexcept { return phi_; }
  const RingContext& context() const noexcept { return phi_.context(); }

  R apply(const R& f) const { return f - phi_.apply(f); }

  std::string to_string() const { return "1 - [" + phi_.to_string() + "]"; }

 private:
  Endomorphism<R> phi_;
};

/// Anything that maps a carrier element to another.
template <class L>
concept Operator = requires(const L& op, const typename L::carrier& f) {
  { op.apply(f) } -> std::same_as<typename L::carrier>;
};

template <Carrier R>
R apply_derivation(const Derivation<R>& d, const R& f) {
  return d.apply(f);
}
template <Carrier R>
R apply_endomorphism(const Endomorphism<R>& phi, const R& f) {
  return phi.apply(f);
}
template <Carrier R>
R apply_ederivation(const EDerivation<R>& delta, const R& f) {
  return delta.apply(f);
}

/// L^m(f); L^0 is the identity.
template <Operator L>
typename L::carrier iterate_operator(const L& op, std::size_t m, typename L::carrier f) {
  for (std::size_t k = 0; k < m; ++k) f = op.apply(f);
  return f;
}

/// D^n(ab) == sum_i binom(n, i) D^i(a) D^{n-i}(b), compared exactly (series:
/// through the common valid order).
template <Carrier R>
bool leibniz_power_check(const Derivation<R>& d, const R& a, const R& b, std::size_t n) {
  if (n == 0) throw InputError("leibniz_power_check needs n >= 1");
  const Field field = d.context().field;
  std::vector<R> da{a}, db{b};
  for (std::size_t k = 0; k < n; ++k) {
    da.push_back(d.apply(da.back()));
    db.push_back(d.apply(db.back()));
  }
  R lhs = iterate_operator(d, n, [&] {
    if constexpr (std::same_as<R, TruncSeries>) {
      return mul_valid(a, b);
    } else {
      return a * b;
    }
  }());
  R rhs = detail::zero_like(lhs);
  Scalar binom = field.one();
  for (std::size_t i = 0; i <= n; ++i) {
    if constexpr (std::same_as<R, TruncSeries>) {
      rhs = rhs + mul_valid(da[i], db[n - i]) * binom;
    } else {
      rhs += da[i] * db[n - i] * binom;
    }
    binom = binom * field(static_cast<long>(n - i)) / field(static_cast<long>(i + 1));
  }
  return same_element(lhs, rhs);
}

/// Outcome of checking the closed form for D^m((1 - v)^-1) with D(v) = c v.
struct Eq21Report {
  Scalar c;
  std::size_t m = 0;
  std::int64_t order = 0;      // valid order of the remainder series
  bool polynomial = false;     // (1-v)^m R_m has no terms of degree > m
  UniPoly p;                   // the extracted p_m(v)
  std::int64_t highest_nonzero = -1;

  Report to_report() const {
    Report r;
    r.add("c", c.to_string());
    r.add("m", m);
    r.add("order", order);
    r.add("status", polynomial ? "polynomial" : "not-polynomial");
    r.add("p_m", p.to_string());
    r.add("p_m_degree", p.degree());
    r.add("degree_bound", "p_m_degree <= m");
    return r;
  }
};

/// On k[[v]] with D(v) = c v: computes
///   R_m = D^m((1-v)^-1) - m! c^m v^m (1-v)^-(m+1)
/// as a truncated series, multiplies by (1-v)^m and checks the product is a
/// polynomial of degree <= m through the valid order.
inline Eq21Report eq21_check(const Scalar& c, std::size_t m, std::int64_t order) {
  if (m == 0) throw InputError("eq21_check needs m >= 1");
  if (order < static_cast<std::int64_t>(4 * m)) {
    throw Inconclusive("order " + std::to_string(order) + " is below 4m = " + std::to_string(4 * m));
  }
  const Field field{c.characteristic()};
  const RingContext ctx{1, field};
  const TruncSeries v = TruncSeries::variable(ctx, order, 0);
  const TruncSeries one = TruncSeries::one(ctx, order);
  const Derivation<TruncSeries> d({v * c});
  const TruncSeries geom = (one - v).inverse();
  const TruncSeries dm = iterate_operator(d, m, geom);

  Scalar fact = field.one();
  for (std::size_t k = 2; k <= m; ++k) fact *= field(static_cast<long>(k));
  const TruncSeries lead = v.pow(static_cast<std::int64_t>(m)) * (one - v).pow(-static_cast<std::int64_t>(m + 1)) *
                           (fact * c.pow(static_cast<long>(m)));
  const TruncSeries rem = dm - lead;
  const TruncSeries prod = mul_valid(rem, (one - v).pow(static_cast<std::int64_t>(m)).truncate(rem.order()));

  Eq21Report rep;
  rep.c = c;
  rep.m = m;
  rep.order = prod.order();
  rep.polynomial = true;
  std::vector<Scalar> coeffs;
  for (const auto& [a, x] : prod.terms()) {
    rep.highest_nonzero = std::max<std::int64_t>(rep.highest_nonzero, a[0]);
    if (a[0] > static_cast<std::int64_t>(m)) rep.polynomial = false;
  }
  for (std::int64_t k = 0; k <= static_cast<std::int64_t>(m); ++k) coeffs.push_back(prod.coeff(MultiIndex{k}));
  rep.p = UniPoly(field, std::move(coeffs));
  return rep;
}

/// D = sum_i D_i with D_i raising the weight <d, b> of every monomial by i.
struct GradedPieces {
  MultiIndex weights;
  std::map<std::int64_t, Derivation<LaurentPoly>> components;

  /// Lowest occurring index N; empty for the zero derivation.
  std::optional<std::int64_t> lowest() const {
    if (components.empty()) return std::nullopt;
    return components.begin()->first;
  }

  Report to_report() const {
    Report r;
    r.add("weights", weights.to_string());
    const auto n = lowest();
    r.add("N", n ? std::to_string(*n) : std::string("undefined"));
    for (const auto& [i, di] : components) r.add("D_" + std::to_string(i), di.to_string());
    return r;
  }
};

/// Splits each coefficient p_i by the shift <d, a> - d_i that the term
/// x^a d/dx_i applies to weights.
inline GradedPieces graded_decompose(const Derivation<LaurentPoly>& d, const MultiIndex& weights) {
  weights.require_same_size(MultiIndex(d.nvars()));
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0) throw InputError("weight vector must have strictly positive entries");
  }
  const RingContext& ctx = d.context();
  std::map<std::int64_t, std::vector<LaurentPoly>> split;
  for (std::size_t i = 0; i < d.nvars(); ++i) {
    for (const auto& [a, c] : d.coeffs()[i].terms()) {
      const std::int64_t shift = weight(a, weights) - weights[i];
      auto [it, inserted] = split.try_emplace(shift, std::vector<LaurentPoly>(d.nvars(), LaurentPoly(ctx)));
      it->second[i].add_term(a, c);
    }
  }
  GradedPieces out{weights, {}};
  for (auto& [i, coeffs] : split) out.components.emplace(i, Derivation<LaurentPoly>(std::move(coeffs)));
  return out;
}

/// phi(x_i) = x^alpha * h with h(0) != 0: the shape every image of a
/// generator takes in k[[x]][x^-1].
struct UnitForm {
  MultiIndex alpha;
  TruncSeries h;
};

struct LocalizedEndomorphism {
  std::vector<UnitForm> images;
};

/// Per variable, whether phi(x_i) lies in k[[x]] (alpha in N^n). Any
/// k-algebra endomorphism of k[[x]][x^-1] must pass; a failure flags an
/// inconsistent input.
inline Report localized_endo_validate(const LocalizedEndomorphism& phi) {
  Report r;
  bool all = true;
  for (std::size_t i = 0; i < phi.images.size(); ++i) {
    const auto& u = phi.images[i];
    u.alpha.require_same_size(MultiIndex(u.h.nvars()));
    if (u.h.constant_term().is_zero()) {
      throw InputError("malformed unit form for phi(x" + std::to_string(i + 1) + "): h(0) = 0");
    }
    const bool ok = u.alpha.is_natural();
    all = all && ok;
    r.add("x" + std::to_string(i + 1), "alpha=" + u.alpha.to_string() + (ok ? " in N^n" : " not in N^n"));
  }
  r.add("status", all ? "holds" : "flagged");
  return r;
}

}  // namespace mzlab
