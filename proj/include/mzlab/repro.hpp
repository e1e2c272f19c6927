#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mzlab/errors.hpp"
#include "mzlab/jordan.hpp"
#include "mzlab/locfin.hpp"
#include "mzlab/mzspace.hpp"
#include "mzlab/operators.hpp"
#include "mzlab/report.hpp"
#include "mzlab/text.hpp"

namespace mzlab {

/// Knobs a caller may override; unset fields take each case's default.
struct ReproParams {
  std::optional<unsigned> p;
  std::optional<std::size_t> mmax;
  std::optional<std::int64_t> order;
};

struct ReproOutcome {
  bool pass = false;
  Report report;
};

struct ReproCase {
  std::string id;
  std::string description;
  std::function<ReproOutcome(const ReproParams&)> run;
};

namespace detail {

inline LaurentPoly lp(const std::string& text, std::size_t n, Field f = Field::rationals()) {
  return parse_laurent(text, RingContext{n, f});
}

inline ReproOutcome repro_dk_image(const ReproParams&) {
  const Field q = Field::rationals();
  const RingContext ctx{2, q};
  const ImageSpec spec = DiagonalEndoSpec{{q(2), q(3)}};
  ReproOutcome out;
  const auto v1 = image_membership_diagonal(spec, lp("x1*x2^-1", 2));
  const auto v2 = image_membership_diagonal(spec, lp("1", 2));
  out.report.append(v1.to_report(), "f=x1*x2^-1 ");
  out.report.append(v2.to_report(), "f=1 ");
  bool ok = v1.member && v1.verified && v1.preimage_text == "3*x1*x2^-1" && !v2.member &&
            v2.obstruction == std::vector<MultiIndex>{MultiIndex(2)};
  std::size_t scanned = 0;
  for (std::int64_t a = -4; a <= 4; ++a) {
    for (std::int64_t b = -4; b <= 4; ++b) {
      const MultiIndex e{a, b};
      const auto v = image_membership_diagonal(spec, LaurentPoly::monomial(ctx, e));
      ok = ok && (v.member == !e.is_zero()) && (!v.member || v.verified);
      ++scanned;
    }
  }
  out.report.add("monomials_scanned", scanned);
  out.report.add("obstruction_exactly_constant_term", ok);
  out.pass = ok;
  return out;
}

inline ReproOutcome repro_dk_derivation(const ReproParams&) {
  const Field q = Field::rationals();
  const RingContext ctx{2, q};
  const ImageSpec spec = DiagonalDerivationSpec{{{q(1), q(0)}, {q(0), q(1)}}};
  ReproOutcome out;
  const auto v1 = image_membership_diagonal(spec, lp("5", 2));
  const auto v2 = image_membership_diagonal(spec, lp("x1", 2));
  out.report.append(v1.to_report(), "f=5 ");
  out.report.append(v2.to_report(), "f=x1 ");
  bool ok = !v1.member && v2.member && v2.verified;
  for (std::int64_t a = -4; a <= 4; ++a) {
    for (std::int64_t b = -4; b <= 4; ++b) {
      const MultiIndex e{a, b};
      const auto v = image_membership_diagonal(spec, LaurentPoly::monomial(ctx, e) * q(7));
      ok = ok && (v.member == !e.is_zero()) && (!v.member || v.verified);
    }
  }
  out.report.add("obstruction_exactly_constant_term", ok);
  out.pass = ok;
  return out;
}

inline ReproOutcome repro_series_counterexample(const ReproParams& p) {
  const std::size_t mmax = p.mmax.value_or(50);
  const std::int64_t order = p.order.value_or(60);
  if (order < static_cast<std::int64_t>(mmax)) {
    throw InputError("order " + std::to_string(order) + " must be at least mmax " + std::to_string(mmax));
  }
  const RingContext ctx{1, Field::rationals()};
  const auto a = parse_localized("x1^-1", ctx, order);
  const auto b = parse_localized("(1-x1)^-1", ctx, order);
  const auto m = SubspaceSpec::constant_term_free(1);
  ReproOutcome out;
  bool all_one = true;
  LocalizedSeries pw = b;
  for (std::size_t k = 1; k <= mmax; ++k) {
    pw = pw * a;
    all_one = all_one && pw.constant_term().is_one();
  }
  const auto rad = radical_membership(a, m, 1, mmax);
  const auto mz = mz_falsify(a, m, {b}, mmax);
  out.report.add("order", order);
  out.report.add("mmax", mmax);
  out.report.add("constant_term_of_b_a^m_is_1", all_one);
  out.report.add("radical", rad.in_radical() ? "in_radical_up_to_bound" : "not_in_radical");
  out.report.add("mz", mz.violated() ? "violated" : "tail_in_M");
  out.report.add("violations", mz.verdicts.front().witnesses.size());
  out.pass = all_one && rad.in_radical() && mz.violated() && mz.verdicts.front().witnesses.size() == mmax;
  return out;
}

inline ReproOutcome repro_charp(const ReproParams& p, bool ederivation) {
  const unsigned prime = p.p.value_or(5);
  const Field f = Field::prime(prime);
  const RingContext ctx{1, f};
  const LaurentPoly t = LaurentPoly::variable(ctx, 0);
  const LaurentPoly target = t.pow(static_cast<std::int64_t>(prime) - 1);
  const auto bound = static_cast<std::int64_t>(3 * prime);
  ReproOutcome out;
  out.report.add("p", prime);
  out.report.add("f", target.to_string());
  if (!ederivation) {
    const Derivation<LaurentPoly> d({LaurentPoly::constant(ctx, 1)});
    const auto v = image_membership_bounded(d, target, bound);
    out.report.append(v.to_report());
    out.pass = !v.member && v.unconditional;
  } else {
    const EDerivation<LaurentPoly> delta{Endomorphism<LaurentPoly>({t + LaurentPoly::constant(ctx, 1)})};
    const auto v = image_membership_bounded(delta, target, bound);
    const auto one = image_membership_bounded(delta, LaurentPoly::constant(ctx, 1), bound);
    out.report.append(v.to_report());
    out.report.add("f=1 verdict", one.member ? "member" : "no_solution");
    if (one.member) out.report.add("f=1 preimage", one.preimage->to_string());
    out.pass = !v.member && v.unconditional && one.member && one.verified;
  }
  return out;
}

inline ReproOutcome repro_telescope(const ReproParams& p) {
  const unsigned prime = p.p.value_or(5);
  const UniPoly s = charp_telescope(prime);
  const Field f = Field::prime(prime);
  ReproOutcome out;
  out.report.add("p", prime);
  out.report.add("sum", s.to_string());
  out.pass = s == UniPoly::constant(f, f(-1));
  out.report.add("equals_minus_one", out.pass);
  return out;
}

inline ReproOutcome repro_leibniz_power(const ReproParams&) {
  const Field q = Field::rationals();
  const RingContext ctx{2, q};
  const auto x1 = LaurentPoly::variable(ctx, 0);
  const auto x2 = LaurentPoly::variable(ctx, 1);
  const Derivation<LaurentPoly> euler({x1, x2});
  const Derivation<LaurentPoly> mixed({x2 * x2, lp("1 + x1", 2)});
  const std::vector<std::pair<LaurentPoly, LaurentPoly>> pairs = {
      {lp("x1^2*x2 - 3*x2", 2), lp("2 + x1*x2^3", 2)},
      {lp("1/2*x1^4 - x2", 2), lp("x1 + x2 - 7", 2)},
      {lp("x1^-1 + x2^2", 2), lp("x1^3*x2^-2", 2)},
  };
  ReproOutcome out;
  bool ok = true;
  std::size_t checks = 0;
  for (const auto* d : {&euler, &mixed}) {
    for (const auto& [a, b] : pairs) {
      for (std::size_t n = 1; n <= 8; ++n) {
        ok = ok && leibniz_power_check(*d, a, b, n);
        ++checks;
      }
    }
  }
  out.report.add("checks", checks);
  out.report.add("all_true", ok);
  out.pass = ok;
  return out;
}

inline ReproOutcome repro_geometric_derivatives(const ReproParams& p) {
  const Field q = Field::rationals();
  const std::int64_t order = p.order.value_or(40);
  ReproOutcome out;
  bool ok = true;
  for (const Scalar& c : {q(1), q(2), q(1) / q(2)}) {
    for (std::size_t m = 1; m <= 6; ++m) {
      const auto r = eq21_check(c, m, order);
      ok = ok && r.polynomial && r.p.degree() <= static_cast<std::int64_t>(m);
      if (m == 1) ok = ok && r.p.degree() < 0;
      if (m == 2) ok = ok && r.p == UniPoly(q, {q(0), c * c});
      out.report.add("c=" + c.to_string() + " p_" + std::to_string(m), r.p.to_string());
    }
  }
  out.report.add("degree_bound", "deg p_m <= m");
  out.report.add("all_polynomial", ok);
  out.pass = ok;
  return out;
}

inline ReproOutcome repro_radical_agreement(const ReproParams&) {
  const RingContext ctx{2, Field::rationals()};
  const auto x1 = LaurentPoly::variable(ctx, 0);
  const auto x2 = LaurentPoly::variable(ctx, 1);
  std::vector<LaurentPoly> tests;
  for (const auto& a : monomials_up_to(2, 4)) tests.push_back(LaurentPoly::monomial(ctx, a));
  tests.push_back(x1 - x2);
  const std::vector<std::pair<std::string, Endomorphism<LaurentPoly>>> maps = {
      {"identity", Endomorphism<LaurentPoly>({x1, x2})},
      {"kill-x1", Endomorphism<LaurentPoly>({LaurentPoly(ctx), x2})},
      {"swap", Endomorphism<LaurentPoly>({x2, x1})},
  };
  ReproOutcome out;
  bool ok = true;
  for (const auto& [name, phi] : maps) {
    const auto r = verify_prop_1_4(phi, tests, 5, 10);
    std::size_t in_both = 0;
    for (const auto& row : r.rows) in_both += row.in_rm && row.in_ri;
    out.report.add(name + " i,j", std::to_string(r.i) + "," + std::to_string(r.j));
    out.report.add(name + " in_both_radicals", in_both);
    out.report.add(name + " status", r.agree() ? "agree" : "disagree");
    ok = ok && r.agree();
  }
  out.pass = ok;
  return out;
}

inline ReproOutcome repro_power_sums(const ReproParams&) {
  const RingContext ctx{1, Field::rationals()};
  const auto e = parse_series("x1", ctx, 1);
  const auto one = parse_series("1", ctx, 1);
  const TruncSeries zero(ctx, 1);
  ReproOutcome out;
  const auto r1 = power_sum_nilpotency_check({e, -e}, 1);
  const auto r2 = power_sum_nilpotency_check({one, -one}, 1);
  const auto r3 = power_sum_nilpotency_check({zero, zero, zero}, 0);
  out.report.append(r1.to_report(), "(e,-e) ");
  out.report.append(r2.to_report(), "(1,-1) ");
  out.report.append(r3.to_report(), "(0,0,0) ");
  out.pass = r1.hypothesis && r1.conclusion && !r2.hypothesis && r2.failing_i == 1u && r3.hypothesis &&
             r3.conclusion;
  return out;
}

inline ReproOutcome repro_degree_additivity(const ReproParams&) {
  const RingContext c1{1, Field::rationals()};
  const RingContext c2{2, Field::rationals()};
  const Derivation<LaurentPoly> ddx({LaurentPoly::constant(c1, 1)});
  const Derivation<LaurentPoly> d1({LaurentPoly::constant(c2, 1), LaurentPoly(c2)});
  ReproOutcome out;
  bool ok = true;
  const auto a = lp("x1^2", 1);
  const auto b = lp("x1^3", 1);
  out.report.add("deg x1^2", d_degree(ddx, a, 64));
  out.report.add("deg x1^3", d_degree(ddx, b, 64));
  out.report.add("deg x1^5", d_degree(ddx, a * b, 64));
  ok = ok && degree_additivity_check(ddx, a, b, 64);
  ok = ok && degree_additivity_check(ddx, lp("7", 1), lp("x1^4 - x1", 1), 64);
  const auto c = lp("x1^2*x2^5", 2);
  out.report.add("deg_d1 x1^2*x2^5", d_degree(d1, c, 64));
  ok = ok && degree_additivity_check(d1, c, lp("x1 + x2^9", 2), 64);
  ok = ok && degree_additivity_check(d1, lp("x1^3*x2 - 2*x2^2", 2), lp("1/3*x1^2 + x1*x2", 2), 64);
  out.report.add("additive", ok);
  out.pass = ok;
  return out;
}

inline ReproOutcome repro_periodicity_swap(const ReproParams&) {
  const RingContext ctx{2, Field::rationals()};
  const auto x1 = LaurentPoly::variable(ctx, 0);
  const auto x2 = LaurentPoly::variable(ctx, 1);
  ReproOutcome out;
  const auto swap = detect_periodicity(Endomorphism<LaurentPoly>({x2, x1}), 10);
  const auto fold = detect_periodicity(Endomorphism<LaurentPoly>({x1, x1}), 10);
  const auto cert = eventual_period_certificate(parse_matrix("1 -1"));
  out.report.add("swap", swap ? std::to_string(swap->i) + "," + std::to_string(swap->j) : "none");
  out.report.add("x1->x1,x2->x1", fold ? std::to_string(fold->i) + "," + std::to_string(fold->j) : "none");
  out.report.append(cert.to_report(), "[-1] ");
  out.pass = swap && swap->i == 1 && swap->j == 3 && fold && fold->i == 1 && fold->j == 2 && cert.certified &&
             cert.n == 1 && cert.d == 2;
  return out;
}

inline ReproOutcome repro_jc_certificate(const ReproParams&) {
  ReproOutcome out;
  // companion matrix of (T - 1)^2 (T + 1) = T^3 - T^2 - T + 1
  const Matrix a = parse_matrix("3  0 0 -1  1 0 1  0 1 1");
  const auto jc = jc_decompose(a);
  const bool inv = jc.semisimple + jc.nilpotent == a && jc.semisimple * jc.nilpotent == jc.nilpotent * jc.semisimple &&
                   nilpotence_index(jc.nilpotent) == 2 && is_squarefree(min_poly(jc.semisimple));
  out.report.add("A", a.to_inline_string());
  out.report.add("S", jc.semisimple.to_inline_string());
  out.report.add("N", jc.nilpotent.to_inline_string());
  out.report.add("invariants", inv);
  const auto rot = roots_of_unity_orders(parse_matrix("2 0 1 -1 0"));
  const auto two = eventual_period_certificate(parse_matrix("1 2"));
  out.report.add("rotation d", rot.d ? std::to_string(*rot.d) : "undefined");
  out.report.append(two.to_report(), "[2] ");
  out.pass = inv && rot.d == 4ul && !two.certified && two.refusal == "eigenvalue 2 is not a root of unity";
  return out;
}

inline ReproOutcome repro_normalize_swap(const ReproParams& p) {
  const std::int64_t order = p.order.value_or(16);
  const RingContext ctx{2, Field::rationals()};
  const Endomorphism<TruncSeries> swap({TruncSeries::variable(ctx, order, 1), TruncSeries::variable(ctx, order, 0)});
  const auto n = normalize_endomorphism(swap, 64);
  ReproOutcome out;
  out.report.append(n.to_report());
  out.pass = n.certified && n.d == 2 && n.coordinates[0].to_string() == "x2 + x1" &&
             n.coordinates[1].to_string() == "-x2 + x1";
  return out;
}

}  // namespace detail

inline const std::vector<ReproCase>& repro_registry() {
  static const std::vector<ReproCase> cases = {
      {"dk-image", "1 - phi with phi(x_i) = p_i x_i has image {f : f_0 = 0}", detail::repro_dk_image},
      {"dk-derivation", "sum c_i x_i d/dx_i with Q-independent c_i has image {f : f_0 = 0}",
       detail::repro_dk_derivation},
      {"series-counterexample", "a = 1/x1, b = 1/(1 - x1): every b a^m has constant term 1",
       detail::repro_series_counterexample},
      {"charp-derivation", "t^(p-1) is not in the image of d/dt over F_p",
       [](const ReproParams& p) { return detail::repro_charp(p, false); }},
      {"charp-ederivation", "t^(p-1) is not in the image of 1 - phi, phi(t) = t + 1, over F_p",
       [](const ReproParams& p) { return detail::repro_charp(p, true); }},
      {"telescope", "sum_{i<p} (t + i)^(p-1) = -1 in F_p[t]", detail::repro_telescope},
      {"leibniz-power", "D^n(ab) = sum_i binom(n,i) D^i(a) D^(n-i)(b) for n <= 8", detail::repro_leibniz_power},
      {"geometric-derivatives", "D^m((1-v)^-1) = m! c^m v^m (1-v)^-(m+1) + (1-v)^-m p_m(v), deg p_m <= m", detail::repro_geometric_derivatives},
      {"radical-agreement", "phi^i = phi^j implies r((1 - phi)A) = r(I)", detail::repro_radical_agreement},
      {"power-sums", "vanishing power sums force nilpotency", detail::repro_power_sums},
      {"degree-additivity", "deg_D(ab) = deg_D(a) + deg_D(b) for locally nilpotent D",
       detail::repro_degree_additivity},
      {"periodicity-swap", "phi^i = phi^j for a locally finite phi", detail::repro_periodicity_swap},
      {"jc-certificate", "Jordan-Chevalley split and root-of-unity certificate", detail::repro_jc_certificate},
      {"normalize-swap", "eigen-coordinates y with phi(y_i) = c_i y_i", detail::repro_normalize_swap},
  };
  return cases;
}

inline const ReproCase* find_repro(const std::string& id) {
  for (const auto& c : repro_registry()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

}  // namespace mzlab
