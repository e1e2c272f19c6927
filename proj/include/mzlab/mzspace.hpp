#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mzlab/errors.hpp"
#include "mzlab/laurent.hpp"
#include "mzlab/linalg.hpp"
#include "mzlab/locfin.hpp"
#include "mzlab/localized.hpp"
#include "mzlab/operators.hpp"
#include "mzlab/report.hpp"
#include "mzlab/series.hpp"
#include "mzlab/unipoly.hpp"

namespace mzlab {

/// Exponents a in N^n with |a| = d, in canonical order.
inline std::vector<MultiIndex> monomials_of_degree(std::size_t n, std::int64_t d) {
  std::vector<MultiIndex> out;
  if (n == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  MultiIndex a(n);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
    if (i + 1 == n) {
      a[i] = left;
      out.push_back(a);
      return;
    }
    for (std::int64_t e = left; e >= 0; --e) {
      a[i] = e;
      self(self, i + 1, left - e);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<MultiIndex> monomials_up_to(std::size_t n, std::int64_t b) {
  std::vector<MultiIndex> out;
  for (std::int64_t d = 0; d <= b; ++d) {
    auto part = monomials_of_degree(n, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

/// {f : f_a = 0 for all a in S}, or with `cofinite` set, {f : f_a = 0 for
/// all a outside S}.
struct SubspaceSpec {
  std::size_t nvars = 0;
  std::set<MultiIndex> support;
  bool cofinite = false;

  static SubspaceSpec constant_term_free(std::size_t n) { return {n, {MultiIndex(n)}, false}; }

  std::string to_string() const {
    std::string s = cofinite ? "kernel-support-cofinite: {" : "kernel-support: {";
    bool first = true;
    for (const auto& a : support) {
      if (!first) s += ",";
      first = false;
      s += a.to_string();
    }
    return s + "}";
  }
};

/// Parses `kernel-support: {(0,0),(1,-1)}` or `kernel-support-cofinite: {...}`.
/// A bare `{...}` means the finite form.
inline SubspaceSpec parse_subspace(const std::string& text) {
  SubspaceSpec spec;
  std::string body = text;
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    std::string head = text.substr(0, colon);
    head.erase(std::remove_if(head.begin(), head.end(), [](unsigned char c) { return std::isspace(c); }), head.end());
    if (head == "kernel-support-cofinite") {
      spec.cofinite = true;
    } else if (head != "kernel-support") {
      throw InputError("unknown subspace kind '" + head + "'");
    }
    body = text.substr(colon + 1);
  }
  body.erase(std::remove_if(body.begin(), body.end(), [](unsigned char c) { return std::isspace(c); }), body.end());
  if (body.size() < 2 || body.front() != '{' || body.back() != '}') {
    throw InputError("subspace support must be written {(a1,...,an),...}");
  }
  body = body.substr(1, body.size() - 2);
  std::size_t pos = 0;
  std::optional<std::size_t> n;
  while (pos < body.size()) {
    if (body[pos] == ',') {
      ++pos;
      continue;
    }
    if (body[pos] != '(') throw InputError("expected '(' at offset " + std::to_string(pos) + " of subspace support");
    const auto close = body.find(')', pos);
    if (close == std::string::npos) throw InputError("unbalanced '(' in subspace support");
    std::vector<std::int64_t> e;
    std::string item = body.substr(pos + 1, close - pos - 1);
    std::size_t start = 0;
    while (start <= item.size()) {
      const auto comma = item.find(',', start);
      const std::string tok = item.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (tok.empty() || used != tok.size()) throw InputError("bad exponent '" + tok + "' in subspace support");
      e.push_back(v);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (n && *n != e.size()) throw InputError("subspace support mixes exponent lengths");
    n = e.size();
    spec.support.insert(MultiIndex(std::move(e)));
    pos = close + 1;
  }
  if (!n) throw InputError("empty subspace support; the number of variables is unknown");
  spec.nvars = *n;
  return spec;
}

namespace detail {

inline LaurentPoly mz_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
inline TruncSeries mz_mul(const TruncSeries& a, const TruncSeries& b) { return mul_valid(a, b); }
inline LocalizedSeries mz_mul(const LocalizedSeries& a, const LocalizedSeries& b) { return a * b; }

}  // namespace detail

/// Exact for Laurent polynomials. For series the coefficients on a finite S
/// must lie within the known order (otherwise Inconclusive); a cofinite S
/// would need the unknown tail and is refused.
template <class E>
bool in_subspace(const E& f, const SubspaceSpec& m) {
  if (m.nvars != f.context().nvars) throw InputError("subspace and element have different numbers of variables");
  if (!m.cofinite) {
    for (const auto& a : m.support) {
      if (!f.coeff(a).is_zero()) return false;
    }
    return true;
  }
  if constexpr (!std::is_same_v<E, LaurentPoly>) {
    throw Unsupported("cofinite subspaces are decided only for Laurent polynomials");
  } else {
    for (const auto& [a, c] : f.terms()) {
      if (!m.support.count(a)) return false;
    }
    return true;
  }
}

struct RadicalReport {
  std::string element;
  std::string subspace;
  std::size_t m0 = 1;
  std::size_t m1 = 1;
  std::optional<std::size_t> witness;  // a^witness is not in M

  bool in_radical() const { return !witness.has_value(); }

  Report to_report() const {
    Report r;
    r.add("a", element);
    r.add("M", subspace);
    r.add("range", "[" + std::to_string(m0) + "," + std::to_string(m1) + "]");
    r.add("verdict", in_radical() ? "in_radical_up_to_bound" : "not_in_radical");
    if (witness) r.add("witness_m", *witness);
    return r;
  }
};

/// First m in [m0, m1] with a^m outside M, else in_radical_up_to_bound.
template <class E>
RadicalReport radical_membership(const E& a, const SubspaceSpec& m, std::size_t m0, std::size_t m1) {
  if (m0 == 0) throw InputError("radical scan must start at m0 >= 1");
  if (m1 < m0) throw InputError("radical scan range is empty");
  RadicalReport rep{a.to_string(), m.to_string(), m0, m1, std::nullopt};
  E p = a.pow(static_cast<std::int64_t>(m0));
  for (std::size_t k = m0; k <= m1; ++k) {
    if (k > m0) p = detail::mz_mul(p, a);
    if (!in_subspace(p, m)) {
      rep.witness = k;
      break;
    }
  }
  return rep;
}

struct MZReport {
  struct Verdict {
    std::string b;
    std::optional<std::size_t> n_b;       // least N with b a^m in M for all m in [N, m_max]
    std::vector<std::size_t> witnesses;   // m with b a^m outside M
  };
  std::string element;
  std::string subspace;
  std::size_t m_max = 0;
  RadicalReport radical;
  std::vector<Verdict> verdicts;

  bool vacuous() const { return !radical.in_radical(); }
  bool violated() const {
    return std::any_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return !v.n_b.has_value(); });
  }

  Report to_report() const {
    Report r;
    r.add("a", element);
    r.add("M", subspace);
    r.add("m_max", m_max);
    if (vacuous()) {
      r.add("status", "vacuous");
      r.add("radical_witness_m", *radical.witness);
      return r;
    }
    r.add("status", violated() ? "violated" : "tail_in_M");
    for (std::size_t k = 0; k < verdicts.size(); ++k) {
      const auto& v = verdicts[k];
      const std::string key = "b" + std::to_string(k + 1);
      r.add(key, v.b);
      if (v.n_b) {
        r.add(key + "_verdict", "tail_in_M");
        r.add(key + "_N", *v.n_b);
      } else {
        r.add(key + "_verdict", "violated");
        r.add(key + "_violations", v.witnesses.size());
        std::string list;
        for (std::size_t m : v.witnesses) list += (list.empty() ? "" : ",") + std::to_string(m);
        r.add(key + "_witnesses", list);
      }
    }
    return r;
  }
};

/// Checks b a^m in M for m = 1..m_max and every b. Only meaningful when a
/// passes the radical scan on the same range; otherwise the report is
/// marked vacuous.
template <class E>
MZReport mz_falsify(const E& a, const SubspaceSpec& m, const std::vector<E>& bs, std::size_t m_max) {
  if (m_max == 0) throw InputError("m_max must be at least 1");
  MZReport rep{a.to_string(), m.to_string(), m_max, radical_membership(a, m, 1, m_max), {}};
  if (rep.vacuous()) return rep;
  for (const auto& b : bs) {
    MZReport::Verdict v{b.to_string(), std::nullopt, {}};
    std::vector<bool> in(m_max + 1, false);
    E p = b;
    for (std::size_t k = 1; k <= m_max; ++k) {
      p = detail::mz_mul(p, a);
      in[k] = in_subspace(p, m);
      if (!in[k]) v.witnesses.push_back(k);
    }
    if (in[m_max]) {
      std::size_t n = m_max;
      while (n > 1 && in[n - 1]) --n;
      v.n_b = n;
    }
    rep.verdicts.push_back(std::move(v));
  }
  return rep;
}

/// phi(x_i) = lambda_i x_i.
struct DiagonalEndoSpec {
  std::vector<Scalar> lambda;
};

/// D = sum_i c_i x_i d/dx_i where c_i = <w_i, t> for a vector w_i in Q^d
/// and t = (t_1..t_d) a Q-linearly independent family. Then
/// D(x^a) = <sum_i a_i w_i, t> x^a, which vanishes iff that vector is zero.
struct DiagonalDerivationSpec {
  std::vector<std::vector<Scalar>> c;
};

using ImageSpec = std::variant<DiagonalEndoSpec, DiagonalDerivationSpec>;

struct ImageVerdict {
  bool member = false;
  std::optional<LaurentPoly> preimage;   // exact preimage (endomorphism case)
  std::string preimage_text;             // canonical text, symbolic in t for derivations
  std::vector<MultiIndex> obstruction;   // monomials of f the image cannot reach
  bool verified = false;                 // operator applied to the preimage reproduces f
  std::string verification;

  Report to_report() const {
    Report r;
    r.add("verdict", member ? "member" : "non_member");
    if (member) {
      r.add("preimage", preimage_text);
      r.add("verified", verified);
      if (!verification.empty()) r.add("verification", verification);
    } else {
      std::string s = "{";
      for (std::size_t k = 0; k < obstruction.size(); ++k) s += (k ? "," : "") + obstruction[k].to_string();
      r.add("obstruction", s + "}");
    }
    return r;
  }
};

namespace detail {

inline std::string linear_form_text(const std::vector<Scalar>& w) {
  TermMap t;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!w[k].is_zero()) t.emplace(MultiIndex::unit(w.size(), k), w[k]);
  }
  std::string s = format_terms(t);
  std::replace(s.begin(), s.end(), 'x', 't');
  return s;
}

inline std::vector<Scalar> weight_vector(const DiagonalDerivationSpec& spec, const MultiIndex& a, Field field) {
  const std::size_t d = spec.c.front().size();
  std::vector<Scalar> w(d, field.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < d; ++k) w[k] += field(static_cast<long>(a[i])) * spec.c[i][k];
  }
  return w;
}

}  // namespace detail

/// Coefficientwise solution of delta(g) = f or D(g) = f for diagonal operators.
inline ImageVerdict image_membership_diagonal(const ImageSpec& spec, const LaurentPoly& f) {
  const RingContext& ctx = f.context();
  const Field field = ctx.field;
  ImageVerdict out;
  if (const auto* endo = std::get_if<DiagonalEndoSpec>(&spec)) {
    if (endo->lambda.size() != ctx.nvars) throw InputError("need one scaling factor per variable");
    for (const auto& l : endo->lambda) {
      if (l.is_zero()) throw InputError("malformed spec: scaling factor 0 does not give an automorphism of the torus");
    }
    LaurentPoly g(ctx);
    for (const auto& [a, c] : f.terms()) {
      Scalar la = field.one();
      for (std::size_t i = 0; i < a.size(); ++i) la *= endo->lambda[i].pow(a[i]);
      if (la.is_one()) {
        out.obstruction.push_back(a);
      } else {
        g.add_term(a, c / (field.one() - la));
      }
    }
    out.member = out.obstruction.empty();
    if (out.member) {
      std::vector<LaurentPoly> imgs;
      for (std::size_t i = 0; i < ctx.nvars; ++i) imgs.push_back(LaurentPoly::variable(ctx, i) * endo->lambda[i]);
      const EDerivation<LaurentPoly> delta{Endomorphism<LaurentPoly>(std::move(imgs))};
      out.verified = delta.apply(g) == f;
      out.preimage_text = g.to_string();
      out.preimage = std::move(g);
    }
    return out;
  }

  const auto& der = std::get<DiagonalDerivationSpec>(spec);
  if (der.c.size() != ctx.nvars) throw InputError("need one weight vector per variable");
  const std::size_t d = der.c.front().size();
  if (d == 0) throw InputError("weight vectors must be nonempty");
  for (const auto& w : der.c) {
    if (w.size() != d) throw InputError("weight vectors must share one length");
  }
  std::vector<std::pair<MultiIndex, std::vector<Scalar>>> solvable;
  for (const auto& [a, c] : f.terms()) {
    auto w = detail::weight_vector(der, a, field);
    if (std::all_of(w.begin(), w.end(), [](const Scalar& s) { return s.is_zero(); })) {
      out.obstruction.push_back(a);
    } else {
      solvable.emplace_back(a, std::move(w));
    }
  }
  out.member = out.obstruction.empty();
  if (!out.member) return out;

  std::string text;
  for (const auto& [a, w] : solvable) {
    const Scalar c = f.coeff(a);
    const std::string mono = detail::format_monomial(a);
    std::string term = c.is_negative() ? (-c).to_string() : c.to_string();
    if (!mono.empty()) term = (term == "1" ? mono : term + "*" + mono);
    term += "/(" + detail::linear_form_text(w) + ")";
    text += text.empty() ? (c.is_negative() ? "-" : "") : (c.is_negative() ? " - " : " + ");
    text += term;
  }
  out.preimage_text = text.empty() ? "0" : text;

  // Specialize t = (1, s, s^2, ...) at the first integer s >= 2 that keeps
  // every needed <w, t> nonzero, then check D(g) = f with rational c_i.
  for (long s = 2;; ++s) {
    std::vector<Scalar> t(d, field.one());
    for (std::size_t k = 1; k < d; ++k) t[k] = t[k - 1] * field(s);
    auto pair = [&](const std::vector<Scalar>& w) {
      Scalar acc = field.zero();
      for (std::size_t k = 0; k < d; ++k) acc += w[k] * t[k];
      return acc;
    };
    bool ok = true;
    for (const auto& [a, w] : solvable) ok = ok && !pair(w).is_zero();
    if (!ok) continue;
    std::vector<Scalar> ci;
    for (const auto& w : der.c) ci.push_back(pair(w));
    LaurentPoly g(ctx);
    for (const auto& [a, w] : solvable) g.add_term(a, f.coeff(a) / pair(w));
    out.verified = Derivation<LaurentPoly>::diagonal(ctx, ci).apply(g) == f;
    std::string at;
    for (std::size_t k = 0; k < d; ++k) at += (k ? "," : "") + t[k].to_string();
    out.verification = "D(g) = f at t=(" + at + ")";
    break;
  }
  return out;
}

struct BoundedImageVerdict {
  bool member = false;
  std::optional<LaurentPoly> preimage;
  bool verified = false;
  std::int64_t bound = 0;
  bool degree_preserving = false;  // L maps degree <= B into degree <= B
  bool unconditional = false;      // non-membership proven for the whole ring
  std::string reason;

  Report to_report() const {
    Report r;
    r.add("bound", bound);
    r.add("degree_preserving", degree_preserving);
    if (member) {
      r.add("verdict", "member");
      r.add("preimage", preimage->to_string());
      r.add("verified", verified);
    } else {
      r.add("verdict", unconditional ? "no_solution" : "no_solution_within_bound");
      r.add("unconditional", unconditional);
      if (!reason.empty()) r.add("reason", reason);
    }
    return r;
  }
};

namespace detail {

/// In characteristic p, D^p is again a derivation and (1 - phi)^p = 1 - phi^p,
/// so L^p = 0 as soon as it holds on the generators.
template <class L>
bool charp_nilpotent_on_generators(const L& op) {
  const RingContext& ctx = op.context();
  const unsigned p = ctx.field.characteristic;
  if (p == 0) return false;
  if constexpr (std::same_as<L, Derivation<LaurentPoly>>) {
    for (std::size_t i = 0; i < ctx.nvars; ++i) {
      if (!iterate_operator(op, p, LaurentPoly::variable(ctx, i)).is_zero()) return false;
    }
    return true;
  } else if constexpr (std::same_as<L, EDerivation<LaurentPoly>>) {
    for (std::size_t i = 0; i < ctx.nvars; ++i) {
      const LaurentPoly x = LaurentPoly::variable(ctx, i);
      if (!(iterate_operator(op.phi(), p, x) == x)) return false;
    }
    return true;
  } else {
    return false;
  }
}

}  // namespace detail

/// Solves L(g) = f over polynomials g of degree <= B. A negative answer is
/// upgraded to a proof when L^p = 0 (characteristic p) and L^{p-1}(f) != 0,
/// because the image of L lies in ker L^{p-1}.
template <Operator L>
BoundedImageVerdict image_membership_bounded(const L& op, const LaurentPoly& f, std::int64_t bound) {
  require_same_context(op.context(), f.context());
  if (bound < 0) throw InputError("degree bound must be nonnegative");
  if (!f.is_polynomial() || (!f.is_zero() && f.degree() > bound)) {
    throw InputError("f = " + f.to_string() + " has support outside degree " + std::to_string(bound));
  }
  const RingContext& ctx = f.context();
  BoundedImageVerdict out;
  out.bound = bound;
  const auto monos = monomials_up_to(ctx.nvars, bound);
  SparseEchelon ech(ctx.field);
  std::vector<std::size_t> used;
  out.degree_preserving = true;
  for (std::size_t k = 0; k < monos.size(); ++k) {
    const LaurentPoly img = op.apply(LaurentPoly::monomial(ctx, monos[k]));
    if (!img.is_zero() && (!img.is_polynomial() || img.degree() > monos[k].total_degree())) {
      out.degree_preserving = false;
    }
    if (ech.insert(img.terms())) used.push_back(k);
  }
  const auto red = ech.reduce(f.terms());
  if (red.remainder.empty()) {
    LaurentPoly g(ctx);
    for (std::size_t k = 0; k < used.size(); ++k) {
      if (!red.coords[k].is_zero()) g.add_term(monos[used[k]], red.coords[k]);
    }
    out.member = true;
    out.verified = op.apply(g) == f;
    out.preimage = std::move(g);
    return out;
  }
  if (detail::charp_nilpotent_on_generators(op)) {
    const unsigned p = ctx.field.characteristic;
    if (!iterate_operator(op, p - 1, f).is_zero()) {
      out.unconditional = true;
      out.reason = "L^" + std::to_string(p) + " = 0 and L^" + std::to_string(p - 1) +
                   "(f) != 0, so f is outside ker L^" + std::to_string(p - 1) + " which contains im L";
      return out;
    }
  }
  out.reason = "no preimage of degree <= " + std::to_string(bound);
  return out;
}

/// sum_{i=0}^{p-1} (t + i)^{p-1} in F_p[t].
inline UniPoly charp_telescope(unsigned p) {
  const Field field = Field::prime(p);
  UniPoly s(field, {});
  for (unsigned i = 0; i < p; ++i) {
    s = s + UniPoly(field, {field(static_cast<long>(i)), field.one()}).pow(p - 1);
  }
  return s;
}

namespace detail {

/// phi must send every x_i to a linear form (or 0), so that it preserves
/// each homogeneous component of k[x]; membership questions then split by
/// degree and every piece is finite-dimensional.
inline void require_graded(const Endomorphism<LaurentPoly>& phi) {
  for (const auto& g : phi.images()) {
    for (const auto& [a, c] : g.terms()) {
      if (!a.is_natural() || a.total_degree() != 1) {
        throw Unsupported("this check needs phi(x_i) to be linear forms; got " + g.to_string());
      }
    }
  }
}

/// Membership in M = (1 - phi)(k[x]) for a grading-preserving phi, decided
/// one homogeneous degree at a time.
class GradedImage {
 public:
  explicit GradedImage(Endomorphism<LaurentPoly> phi) : phi_(std::move(phi)) {}

  bool contains(const LaurentPoly& f) {
    std::map<std::int64_t, TermMap> parts;
    for (const auto& [a, c] : f.terms()) {
      if (!a.is_natural()) return false;
      parts[a.total_degree()].emplace(a, c);
    }
    for (const auto& [d, part] : parts) {
      if (!echelon(d).contains(part)) return false;
    }
    return true;
  }

  /// Dimension of M in degree d.
  std::size_t dimension(std::int64_t d) { return echelon(d).dimension(); }

 private:
  SparseEchelon& echelon(std::int64_t d) {
    auto it = cache_.find(d);
    if (it != cache_.end()) return it->second;
    const RingContext& ctx = phi_.context();
    SparseEchelon e(ctx.field);
    const EDerivation<LaurentPoly> delta(phi_);
    for (const auto& a : monomials_of_degree(ctx.nvars, d)) e.insert(delta.apply(LaurentPoly::monomial(ctx, a)).terms());
    return cache_.emplace(d, std::move(e)).first->second;
  }

  Endomorphism<LaurentPoly> phi_;
  std::map<std::int64_t, SparseEchelon> cache_;
};

}  // namespace detail

/// I = ker phi^i restricted to polynomials of degree <= B, as a reduced
/// echelon basis. Needs a certified phi^i = phi^j.
struct KernelIdeal {
  std::size_t i = 0;
  std::size_t j = 0;
  std::int64_t bound = 0;
  std::vector<LaurentPoly> basis;

  Report to_report() const {
    Report r;
    r.add("i", i);
    r.add("j", j);
    r.add("bound", bound);
    r.add("dim", basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) r.add("basis" + std::to_string(k), basis[k].to_string());
    return r;
  }
};

inline KernelIdeal eventual_kernel_ideal(const Endomorphism<LaurentPoly>& phi, std::int64_t bound, std::size_t r_max) {
  detail::require_graded(phi);
  const auto cert = detect_periodicity(phi, std::max<std::size_t>(r_max, 2));
  if (!cert) {
    throw Inconclusive("phi^i = phi^j not certified for j <= " + std::to_string(r_max) + "; refusing");
  }
  const RingContext& ctx = phi.context();
  const auto monos = monomials_up_to(ctx.nvars, bound);
  std::map<MultiIndex, std::size_t> index;
  for (std::size_t k = 0; k < monos.size(); ++k) index.emplace(monos[k], k);
  Matrix m(ctx.field, monos.size(), monos.size());
  for (std::size_t k = 0; k < monos.size(); ++k) {
    const LaurentPoly img = iterate_operator(phi, cert->i, LaurentPoly::monomial(ctx, monos[k]));
    for (const auto& [a, c] : img.terms()) m(index.at(a), k) = c;
  }
  KernelIdeal out{cert->i, cert->j, bound, {}};
  const auto ker = m.kernel();
  if (ker.empty()) return out;
  Matrix rows(ctx.field, ker.size(), monos.size());
  for (std::size_t r = 0; r < ker.size(); ++r) {
    for (std::size_t k = 0; k < monos.size(); ++k) rows(r, k) = ker[r][k];
  }
  const auto [rref, pivots] = rows.rref();
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    LaurentPoly g(ctx);
    for (std::size_t k = 0; k < monos.size(); ++k) {
      if (!rref(r, k).is_zero()) g.add_term(monos[k], rref(r, k));
    }
    out.basis.push_back(std::move(g));
  }
  return out;
}

/// Radical verdicts for M = (1 - phi)(k[x]) and I = {a : phi^r(a) = 0}.
/// a in r(M) is tested as a^m in M for every m in [window_lo, window_hi];
/// a in r(I) as phi^i(a^m) = 0 for some m <= window_hi.
struct Prop14Report {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t window_lo = 0;
  std::size_t window_hi = 0;
  struct Row {
    std::string a;
    bool in_rm = false;
    bool in_ri = false;
  };
  std::vector<Row> rows;

  bool agree() const {
    return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.in_rm == r.in_ri; });
  }

  Report to_report() const {
    Report r;
    r.add("i", i);
    r.add("j", j);
    r.add("window", "[" + std::to_string(window_lo) + "," + std::to_string(window_hi) + "]");
    r.add("tested", rows.size());
    for (const auto& row : rows) {
      r.add(row.a, std::string(row.in_rm ? "r(M)" : "-") + " " + (row.in_ri ? "r(I)" : "-"));
    }
    r.add("status", agree() ? "agree" : "disagree");
    return r;
  }
};

inline Prop14Report verify_prop_1_4(const Endomorphism<LaurentPoly>& phi, const std::vector<LaurentPoly>& tests,
                                    std::size_t window_lo, std::size_t window_hi, std::size_t r_max = 16) {
  detail::require_graded(phi);
  if (window_lo == 0 || window_hi < window_lo) throw InputError("radical window must satisfy 1 <= lo <= hi");
  const auto cert = detect_periodicity(phi, std::max<std::size_t>(r_max, 2));
  if (!cert) throw Inconclusive("phi^i = phi^j not certified for j <= " + std::to_string(r_max) + "; refusing");
  Prop14Report rep;
  rep.i = cert->i;
  rep.j = cert->j;
  rep.window_lo = window_lo;
  rep.window_hi = window_hi;
  detail::GradedImage m(phi);
  for (const auto& a : tests) {
    require_same_context(phi.context(), a.context());
    Prop14Report::Row row{a.to_string(), true, false};
    LaurentPoly p = LaurentPoly::constant(a.context(), 1);
    for (std::size_t k = 1; k <= window_hi; ++k) {
      p = p * a;
      if (k >= window_lo && row.in_rm && !m.contains(p)) row.in_rm = false;
      if (!row.in_ri && iterate_operator(phi, cert->i, p).is_zero()) row.in_ri = true;
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

/// Power-sum hypothesis sum_j a_j^{r+i} = 0 (1 <= i <= n) and nilpotency of
/// each a_j, in a truncated quotient k[[x]]/m^{K+1} where an element is
/// nilpotent iff its (K+1)-th power vanishes.
struct PowerSumReport {
  std::size_t r = 0;
  bool hypothesis = false;
  std::optional<std::size_t> failing_i;
  bool conclusion = false;
  std::vector<bool> nilpotent;

  bool consistent() const { return !hypothesis || conclusion; }

  Report to_report() const {
    Report r;
    r.add("hypothesis", hypothesis ? "holds" : "fails");
    if (failing_i) {
      r.add("failing_i", *failing_i);
      r.add("failing_exponent", this->r + *failing_i);
    }
    r.add("conclusion", conclusion ? "all_nilpotent" : "not_all_nilpotent");
    r.add("status", consistent() ? "consistent" : "counterexample");
    return r;
  }
};

inline PowerSumReport power_sum_nilpotency_check(const std::vector<TruncSeries>& a, std::size_t r) {
  if (a.empty()) throw InputError("need at least one element");
  const RingContext& ctx = a.front().context();
  const std::int64_t k = a.front().order();
  for (const auto& x : a) {
    require_same_context(ctx, x.context());
    if (x.order() != k) throw InputError("elements must share one truncation order");
  }
  PowerSumReport rep;
  rep.r = r;
  rep.hypothesis = true;
  const std::size_t n = a.size();
  for (std::size_t i = 1; i <= n && rep.hypothesis; ++i) {
    TruncSeries s(ctx, k);
    for (const auto& x : a) s = s + x.pow(static_cast<std::int64_t>(r + i));
    if (!s.is_zero()) {
      rep.hypothesis = false;
      rep.failing_i = i;
    }
  }
  rep.conclusion = true;
  for (const auto& x : a) {
    const bool nil = x.pow(k + 1).is_zero();
    rep.nilpotent.push_back(nil);
    rep.conclusion = rep.conclusion && nil;
  }
  return rep;
}

}  // namespace mzlab
