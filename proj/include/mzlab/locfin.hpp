#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mzlab/errors.hpp"
#include "mzlab/jordan.hpp"
#include "mzlab/linalg.hpp"
#include "mzlab/operators.hpp"
#include "mzlab/report.hpp"
#include "mzlab/series.hpp"

namespace mzlab {

enum class SpanStatus { closed, exceeded_cap };

inline const char* to_string(SpanStatus s) { return s == SpanStatus::closed ? "closed" : "exceeded_cap"; }

namespace detail {

/// Product in the carrier; series multiply at the order both factors fix.
inline LaurentPoly ring_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
inline TruncSeries ring_mul(const TruncSeries& a, const TruncSeries& b) { return mul_valid(a, b); }

inline bool is_unit_element(const LaurentPoly& u) { return u.is_unit(); }
inline bool is_unit_element(const TruncSeries& u) { return u.is_unit(); }

/// Linear span of ring elements, echelonized over monomials. Series are
/// compared at the order of the first element; an element known to less
/// precision cannot be placed and is reported as inconclusive.
template <Carrier R>
class SpanBuilder {
 public:
  explicit SpanBuilder(Field field) : echelon_(field) {}

  const std::vector<R>& elements() const noexcept { return elements_; }
  std::size_t dimension() const noexcept { return elements_.size(); }
  std::optional<std::int64_t> order() const noexcept { return order_; }

  TermMap terms_of(const R& f) {
    if constexpr (std::same_as<R, TruncSeries>) {
      if (!order_) order_ = f.order();
      if (f.order() < *order_) {
        throw Inconclusive("iterate known only to order " + std::to_string(f.order()) + " (span compared at order " +
                           std::to_string(*order_) + "); raise the order");
      }
      return f.truncate(*order_).terms();
    } else {
      return f.terms();
    }
  }

  SparseEchelon::Reduction reduce(const R& f) { return echelon_.reduce(terms_of(f)); }

  bool insert(const R& f) {
    if (!echelon_.insert(terms_of(f))) return false;
    elements_.push_back(f);
    return true;
  }

 private:
  SparseEchelon echelon_;
  std::vector<R> elements_;
  std::optional<std::int64_t> order_;
};

}  // namespace detail

/// span{L^m(a) : m >= 0} with basis a, L(a), ..., L^{d-1}(a).
template <Carrier R>
struct CyclicSpace {
  R element;
  std::vector<R> basis;
  Matrix action;               // companion form; meaningful when closed
  SpanStatus status = SpanStatus::closed;
  std::size_t cap = 0;
  std::optional<R> last;       // L^dim(a), the first iterate tested for membership
  std::optional<std::int64_t> order;

  std::size_t dim() const noexcept { return basis.size(); }

  Report to_report() const {
    Report r;
    r.add("status", to_string(status));
    r.add("dim", dim());
    r.add("cap", cap);
    if (order) r.add("order", *order);
    if (status == SpanStatus::closed) r.add("action", action.to_inline_string());
    for (std::size_t k = 0; k < basis.size(); ++k) r.add("basis" + std::to_string(k), basis[k].to_string());
    return r;
  }
};

template <Operator L>
CyclicSpace<typename L::carrier> cyclic_space(const L& op, const typename L::carrier& a, std::size_t cap) {
  using R = typename L::carrier;
  if (cap == 0) throw InputError("cap must be at least 1");
  require_same_context(op.context(), a.context());
  const Field field = a.context().field;
  CyclicSpace<R> out{a, {}, Matrix(field, 0, 0), SpanStatus::closed, cap, std::nullopt, std::nullopt};
  if (a.is_zero()) return out;
  detail::SpanBuilder<R> span(field);
  span.insert(a);
  R cur = a;
  while (true) {
    cur = op.apply(cur);
    auto red = span.reduce(cur);
    if (red.remainder.empty()) {
      const std::size_t d = span.dimension();
      Matrix m(field, d, d);
      for (std::size_t k = 0; k + 1 < d; ++k) m(k + 1, k) = field.one();
      for (std::size_t k = 0; k < d; ++k) m(k, d - 1) = red.coords[k];
      out.action = std::move(m);
      break;
    }
    if (span.dimension() >= cap) {
      out.status = SpanStatus::exceeded_cap;
      break;
    }
    span.insert(cur);
  }
  out.basis = span.elements();
  out.last = cur;
  out.order = span.order();
  return out;
}

struct NilpotenceVerdict {
  enum class Kind { yes, no_evidence, exceeded_cap };
  Kind kind = Kind::no_evidence;
  std::size_t m = 0;  // least m >= 1 with L^m(a) = 0 when kind == yes
  std::size_t cap = 0;

  Report to_report() const {
    Report r;
    switch (kind) {
      case Kind::yes:
        r.add("status", "yes");
        r.add("m", m);
        break;
      case Kind::no_evidence:
        r.add("status", "no_evidence");
        break;
      case Kind::exceeded_cap:
        r.add("status", "exceeded_cap");
        break;
    }
    r.add("cap", cap);
    return r;
  }
};

/// With a closed cyclic space of dimension d, L is nilpotent on a iff
/// L^d(a) = 0, and then d is the least such power.
template <Operator L>
NilpotenceVerdict is_locally_nilpotent_on(const L& op, const typename L::carrier& a, std::size_t cap) {
  NilpotenceVerdict v;
  v.cap = cap;
  if (a.is_zero()) {
    v.kind = NilpotenceVerdict::Kind::yes;
    v.m = 1;
    return v;
  }
  const auto cs = cyclic_space(op, a, cap);
  if (cs.status == SpanStatus::exceeded_cap) {
    v.kind = NilpotenceVerdict::Kind::exceeded_cap;
  } else if (cs.last->is_zero()) {
    v.kind = NilpotenceVerdict::Kind::yes;
    v.m = cs.dim();
  } else {
    v.kind = NilpotenceVerdict::Kind::no_evidence;
  }
  return v;
}

/// min{n >= 0 : D^{n+1}(a) = 0}; nonzero constants have degree 0.
template <Carrier R>
std::size_t d_degree(const Derivation<R>& d, const R& a, std::size_t cap) {
  if (a.is_zero()) throw InputError("d_degree is undefined for 0");
  const auto v = is_locally_nilpotent_on(d, a, cap);
  if (v.kind != NilpotenceVerdict::Kind::yes) {
    throw Inconclusive("D is not certified locally nilpotent on " + a.to_string() + " within cap " +
                       std::to_string(cap));
  }
  return v.m - 1;
}

template <Carrier R>
bool degree_additivity_check(const Derivation<R>& d, const R& a, const R& b, std::size_t cap) {
  const std::size_t da = d_degree(d, a, cap);
  const std::size_t db = d_degree(d, b, cap);
  const std::size_t dab = d_degree(d, detail::ring_mul(a, b), 2 * cap);
  return dab == da + db;
}

/// A locally nilpotent derivation kills every unit.
template <Carrier R>
bool unit_kill_check(const Derivation<R>& d, const R& u, std::size_t cap) {
  if (!detail::is_unit_element(u)) throw InputError(u.to_string() + " is not a unit");
  const auto v = is_locally_nilpotent_on(d, u, cap);
  if (v.kind != NilpotenceVerdict::Kind::yes) {
    throw Inconclusive("precondition fails: D is not certified locally nilpotent on " + u.to_string() +
                       " within cap " + std::to_string(cap));
  }
  return d.apply(u).is_zero();
}

/// V = sum_j phi^j(W) with the matrix of phi on the stored basis.
template <Carrier R>
struct InvariantSpace {
  std::vector<R> generators;
  std::vector<R> basis;
  Matrix action;  // column k = coordinates of phi(basis[k])
  SpanStatus status = SpanStatus::closed;
  std::size_t cap = 0;
  std::optional<std::int64_t> order;

  std::size_t dim() const noexcept { return basis.size(); }

  Report to_report() const {
    Report r;
    r.add("status", to_string(status));
    r.add("dim", dim());
    r.add("cap", cap);
    if (order) r.add("order", *order);
    if (status == SpanStatus::closed) r.add("action", action.to_inline_string());
    for (std::size_t k = 0; k < basis.size(); ++k) r.add("basis" + std::to_string(k), basis[k].to_string());
    return r;
  }
};

template <Carrier R>
InvariantSpace<R> build_invariant_space(const Endomorphism<R>& phi, const std::vector<R>& w, std::size_t cap) {
  if (cap < w.size()) throw InputError("cap must be at least the number of generators");
  const Field field = phi.context().field;
  for (const auto& g : w) require_same_context(phi.context(), g.context());
  InvariantSpace<R> out{w, {}, Matrix(field, 0, 0), SpanStatus::closed, cap, std::nullopt};
  detail::SpanBuilder<R> span(field);
  for (const auto& g : w) span.insert(g);
  std::vector<Vector> columns;
  for (std::size_t k = 0; k < span.dimension(); ++k) {
    const R img = phi.apply(span.elements()[k]);
    if (!span.reduce(img).remainder.empty()) {
      if (span.dimension() >= cap) {
        out.status = SpanStatus::exceeded_cap;
        break;
      }
      span.insert(img);
    }
  }
  out.basis = span.elements();
  out.order = span.order();
  if (out.status == SpanStatus::closed) {
    const std::size_t d = out.basis.size();
    Matrix a(field, d, d);
    for (std::size_t k = 0; k < d; ++k) {
      const auto red = span.reduce(phi.apply(out.basis[k]));
      for (std::size_t i = 0; i < d; ++i) a(i, k) = red.coords[i];
    }
    out.action = std::move(a);
  }
  return out;
}

/// phi^i = phi^j, compared on generator images.
struct PeriodicityCertificate {
  std::size_t i = 0;
  std::size_t j = 0;
  std::string scope;
  std::optional<std::int64_t> order;

  Report to_report() const {
    Report r;
    r.add("status", "found");
    r.add("i", i);
    r.add("j", j);
    r.add("scope", scope);
    if (order) r.add("order", *order);
    return r;
  }
};

/// Generator images of phi^k for k = 1..m.
template <Carrier R>
std::vector<std::vector<R>> endomorphism_iterates(const Endomorphism<R>& phi, std::size_t m) {
  std::vector<std::vector<R>> it;
  if (m == 0) return it;
  it.push_back(phi.images());
  while (it.size() < m) {
    std::vector<R> next;
    for (const auto& g : it.back()) next.push_back(phi.apply(g));
    it.push_back(std::move(next));
  }
  return it;
}

/// Lexicographically least (i, j), 1 <= i < j <= i_max, with phi^i = phi^j.
template <Carrier R>
std::optional<PeriodicityCertificate> detect_periodicity(const Endomorphism<R>& phi, std::size_t i_max) {
  if (i_max < 2) throw InputError("i_max must be at least 2");
  const auto it = endomorphism_iterates(phi, i_max);
  auto equal = [](const std::vector<R>& a, const std::vector<R>& b) {
    for (std::size_t s = 0; s < a.size(); ++s) {
      if (!same_element(a[s], b[s])) return false;
    }
    return true;
  };
  for (std::size_t i = 1; i < i_max; ++i) {
    for (std::size_t j = i + 1; j <= i_max; ++j) {
      if (!equal(it[i - 1], it[j - 1])) continue;
      PeriodicityCertificate c{i, j, "on_basis", std::nullopt};
      if constexpr (std::same_as<R, TruncSeries>) {
        c.scope = "on_generators_at_order_K";
        c.order = phi.images().front().order();
      }
      return c;
    }
  }
  return std::nullopt;
}

/// Coordinates y with phi(y_i) = c_i y_i (i <= d) and phi^N(y_i) = 0 (i > d).
struct Normalization {
  std::vector<TruncSeries> coordinates;
  std::vector<Scalar> eigenvalues;  // c_i for i < d
  std::size_t d = 0;
  std::size_t n_index = 1;
  std::size_t dim_v = 0;
  std::int64_t order = 0;
  bool certified = false;

  Report to_report() const {
    Report r;
    r.add("status", certified ? "certified" : "uncertified");
    r.add("order", order);
    r.add("dim_V", dim_v);
    r.add("d", d);
    r.add("N", n_index);
    for (std::size_t k = 0; k < coordinates.size(); ++k) {
      const std::string key = "y" + std::to_string(k + 1);
      r.add(key, coordinates[k].to_string());
      if (k < d) r.add("c" + std::to_string(k + 1), eigenvalues[k].to_string());
    }
    return r;
  }
};

/// Eigen-coordinates for a locally finite endomorphism of k[[x]] whose
/// nonzero eigenvalues on V are rational (so +1 or -1).
inline Normalization normalize_endomorphism(const Endomorphism<TruncSeries>& phi, std::size_t cap) {
  const RingContext& ctx = phi.context();
  if (ctx.field.characteristic != 0) throw InputError("normalize_endomorphism is implemented over Q");
  const std::int64_t order = phi.images().front().order();
  std::vector<TruncSeries> w;
  for (std::size_t i = 0; i < ctx.nvars; ++i) w.push_back(TruncSeries::variable(ctx, order, i));
  const auto inv = build_invariant_space(phi, w, cap);
  if (inv.status != SpanStatus::closed) {
    throw Inconclusive("invariant space exceeded cap " + std::to_string(cap));
  }
  const Matrix& a = inv.action;
  const auto cyc = roots_of_unity_orders(a);
  if (!cyc.all_roots_of_unity()) {
    throw InputError("phi|_V has an eigenvalue that is not a root of unity; phi is not locally finite");
  }
  const auto blocks = jordan_block_check(a);
  if (!blocks.clean()) throw InputError("phi|_V has a nontrivial Jordan block at a nonzero eigenvalue");
  for (const auto& fc : cyc.factors) {
    if (fc.kind == FactorClass::Kind::cyclotomic && fc.order > 2) {
      throw Unsupported("eigenvalues of order " + std::to_string(fc.order) +
                        " are not rational; eigen-coordinates need an extension of Q");
    }
  }

  const Field field = ctx.field;
  const std::size_t dv = inv.dim();
  auto element = [&](const Vector& v) {
    TruncSeries y(ctx, order);
    for (std::size_t k = 0; k < dv; ++k) {
      if (!v[k].is_zero()) y = y + inv.basis[k] * v[k];
    }
    return y;
  };
  auto normalized = [](Vector v) {
    for (const auto& x : v) {
      if (x.is_zero()) continue;
      const Scalar s = x.inverse();
      for (auto& y : v) y = y * s;
      break;
    }
    return v;
  };

  struct Candidate {
    TruncSeries y;
    std::optional<Scalar> c;
  };
  std::vector<Candidate> candidates;
  for (long c : {1L, -1L}) {
    const Matrix shifted = a - field(c) * Matrix::identity(field, dv);
    for (const auto& v : shifted.kernel()) candidates.push_back({element(normalized(v)), field(c)});
  }
  for (const auto& v : a.pow(dv).kernel()) candidates.push_back({element(normalized(v)), std::nullopt});

  Normalization out;
  out.order = order;
  out.dim_v = dv;
  const Matrix zero_part = restrict_to_generalized_kernel(a);
  out.n_index = zero_part.rows() == 0 ? 1 : nilpotence_index(zero_part);

  std::vector<Vector> linear;
  for (const auto& cand : candidates) {
    if (out.coordinates.size() == ctx.nvars) break;
    linear.push_back(cand.y.linear_coeffs());
    if (Matrix::from_columns(field, ctx.nvars, linear).rank() < linear.size()) {
      linear.pop_back();
      continue;
    }
    out.coordinates.push_back(cand.y);
    if (cand.c) {
      out.eigenvalues.push_back(*cand.c);
      ++out.d;
    }
  }
  if (out.coordinates.size() != ctx.nvars) {
    throw InputError("eigen-elements of V do not span the linear forms; cannot build coordinates");
  }

  for (std::size_t k = 0; k < ctx.nvars; ++k) {
    const TruncSeries img = phi.apply(out.coordinates[k]);
    if (k < out.d) {
      if (!(img - out.coordinates[k] * out.eigenvalues[k]).is_zero()) {
        throw InputError("normalize_endomorphism: eigen-relation failed (internal inconsistency)");
      }
    } else if (!iterate_operator(phi, out.n_index, out.coordinates[k]).is_zero()) {
      throw InputError("normalize_endomorphism: nilpotent coordinate not killed (internal inconsistency)");
    }
  }

  const auto g = formal_inverse(out.coordinates, order);
  const auto id = identity_map(ctx, order);
  const auto fg = ts_compose(out.coordinates, g);
  const auto gf = ts_compose(g, out.coordinates);
  out.certified = true;
  for (std::size_t k = 0; k < ctx.nvars; ++k) {
    if (!(fg[k] == id[k]) || !(gf[k] == id[k])) out.certified = false;
  }
  return out;
}

}  // namespace mzlab
