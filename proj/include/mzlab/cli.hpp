#pragma once

#include <CLI11.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mzlab/errors.hpp"
#include "mzlab/jordan.hpp"
#include "mzlab/locfin.hpp"
#include "mzlab/mzspace.hpp"
#include "mzlab/operators.hpp"
#include "mzlab/report.hpp"
#include "mzlab/repro.hpp"
#include "mzlab/series.hpp"
#include "mzlab/text.hpp"

namespace mzlab {

enum ExitCode : int { exit_ok = 0, exit_violation = 1, exit_input = 2, exit_inconclusive = 3 };

struct CliResult {
  int code = exit_ok;
  std::string out;
  std::string err;
};

namespace cli {

struct Inputs {
  bool machine = false;
  unsigned characteristic = 0;
  std::int64_t order = 32;
  std::size_t cap = 64;
  std::size_t mmax = 50;
  std::size_t nvars = 0;
  std::string carrier = "laurent";

  std::string derivation, endo, ederivation, op;
  std::string f, g, a, support = "{(0)}", matrix, weights, d;
  std::vector<std::string> b, components;
  std::size_t m = 1, m0 = 1, imax = 10;
  std::optional<std::int64_t> bound;
  std::vector<std::string> cases;
  bool all = false;
  std::optional<unsigned> p;
  bool order_given = false, mmax_given = false;
};

/// Tuples like `(1,0),(0,1)` or `((1,0),(0,1))` as rows of scalars.
inline std::vector<std::vector<Scalar>> parse_tuples(const std::string& text, Field field) {
  std::vector<std::vector<Scalar>> rows;
  std::size_t pos = 0;
  while (true) {
    const auto close = text.find(')', pos);
    if (close == std::string::npos) break;
    const auto open = text.rfind('(', close);
    if (open == std::string::npos || open < pos) throw InputError("unbalanced parentheses in '" + text + "'");
    std::vector<Scalar> row;
    std::stringstream ss(text.substr(open + 1, close - open - 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      tok = trim_copy(tok);
      if (tok.empty()) throw InputError("empty entry in '" + text + "'");
      row.push_back(field.parse(tok));
    }
    rows.push_back(std::move(row));
    pos = close + 1;
    while (pos < text.size() && (text[pos] == ')' || text[pos] == ',' || text[pos] == ' ')) ++pos;
  }
  if (rows.empty()) throw InputError("expected tuples like (1,0),(0,1) in '" + text + "'");
  return rows;
}

inline MultiIndex parse_index(const std::string& text) {
  const auto rows = parse_tuples(text, Field::rationals());
  if (rows.size() != 1) throw InputError("expected one tuple in '" + text + "'");
  std::vector<std::int64_t> e;
  for (const auto& s : rows.front()) {
    const mpq_class q = s.rational();
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw InputError("weights must be integers");
    e.push_back(q.get_num().get_si());
  }
  return MultiIndex(std::move(e));
}

class Runner {
 public:
  explicit Runner(Inputs in) : in_(std::move(in)) {}

  int run(const std::string& sub, Report& out) {
    load_files();
    field_ = in_.characteristic == 0 ? Field::rationals() : Field::prime(in_.characteristic);
    ctx_ = RingContext{nvars(), field_};
    if (sub == "apply") return apply(out, false);
    if (sub == "iterate") return apply(out, true);
    if (sub == "cyclic") return cyclic(out);
    if (sub == "ddeg") return ddeg(out);
    if (sub == "periodicity") return periodicity(out);
    if (sub == "jc") return jc(out);
    if (sub == "cyclo") return cyclo(out);
    if (sub == "radical") return radical(out);
    if (sub == "mz") return mz(out);
    if (sub == "image") return image(out);
    if (sub == "grade") return grade(out);
    if (sub == "inverse") return inverse(out);
    if (sub == "normalize") return normalize(out);
    throw InputError("unknown subcommand " + sub);
  }

 private:
  Inputs in_;
  Field field_;
  RingContext ctx_;

  void load_files() {
    for (auto* s : {&in_.derivation, &in_.endo, &in_.ederivation, &in_.op, &in_.f, &in_.g, &in_.a, &in_.support,
                    &in_.matrix, &in_.weights, &in_.d}) {
      *s = read_argument(*s);
    }
    for (auto& s : in_.b) s = read_argument(s);
    for (auto& s : in_.components) s = read_argument(s);
  }

  std::size_t nvars() const {
    if (in_.nvars != 0) return in_.nvars;
    std::size_t n = 1;
    for (const auto* s : {&in_.derivation, &in_.endo, &in_.ederivation, &in_.op, &in_.f, &in_.g, &in_.a}) {
      n = std::max(n, max_variable_index(*s));
    }
    for (const auto& s : in_.b) n = std::max(n, max_variable_index(s));
    for (const auto& s : in_.components) n = std::max(n, max_variable_index(s));
    if (!in_.components.empty()) n = std::max(n, in_.components.size());
    return n;
  }

  bool series() const {
    if (in_.carrier == "laurent") return false;
    if (in_.carrier == "series") return true;
    throw InputError("operators act on the laurent or series carrier, not '" + in_.carrier + "'");
  }

  OperatorText op_text() const {
    int given = !in_.derivation.empty() + !in_.endo.empty() + !in_.ederivation.empty() + !in_.op.empty();
    if (given != 1) throw InputError("give exactly one of --derivation, --endo, --ederivation, --op");
    if (!in_.derivation.empty()) return parse_operator_text(in_.derivation, OperatorText::Kind::derivation);
    if (!in_.endo.empty()) return parse_operator_text(in_.endo, OperatorText::Kind::endo);
    if (!in_.ederivation.empty()) return parse_operator_text(in_.ederivation, OperatorText::Kind::ederivation);
    return parse_operator_text(in_.op);
  }

  const std::string& require(const std::string& value, const char* flag) const {
    if (value.empty()) throw InputError(std::string("missing ") + flag);
    return value;
  }

  template <Carrier R>
  R element(const std::string& text) const {
    if constexpr (std::same_as<R, LaurentPoly>) {
      return parse_laurent(text, ctx_);
    } else {
      return parse_series(text, ctx_, in_.order);
    }
  }

  /// Calls fn with the parsed operator on the selected carrier.
  template <class Fn>
  int with_operator(Fn&& fn) const {
    const OperatorText op = op_text();
    auto go = [&]<Carrier R>(R*) {
      switch (op.kind) {
        case OperatorText::Kind::derivation:
          return fn(build_derivation<R>(op, ctx_, in_.order));
        case OperatorText::Kind::endo:
          return fn(build_endomorphism<R>(op, ctx_, in_.order));
        case OperatorText::Kind::ederivation:
          return fn(EDerivation<R>(build_endomorphism<R>(op, ctx_, in_.order)));
      }
      return static_cast<int>(exit_input);
    };
    return series() ? go(static_cast<TruncSeries*>(nullptr)) : go(static_cast<LaurentPoly*>(nullptr));
  }

  int apply(Report& out, bool iterate) {
    return with_operator([&](const auto& op) {
      using R = typename std::decay_t<decltype(op)>::carrier;
      const R f = element<R>(require(in_.f, "--f"));
      const R r = iterate ? iterate_operator(op, in_.m, f) : op.apply(f);
      out.add("operator", op.to_string());
      out.add("f", f.to_string());
      if (iterate) out.add("m", in_.m);
      out.add("result", r.to_string());
      if constexpr (std::same_as<R, TruncSeries>) out.add("order", r.order());
      return static_cast<int>(exit_ok);
    });
  }

  int cyclic(Report& out) {
    return with_operator([&](const auto& op) {
      using R = typename std::decay_t<decltype(op)>::carrier;
      const auto cs = cyclic_space(op, element<R>(require(in_.f, "--f")), in_.cap);
      out.append(cs.to_report());
      const auto nil = is_locally_nilpotent_on(op, cs.element, in_.cap);
      out.add("nilpotent", nil.to_report().get("status"));
      if (nil.kind == NilpotenceVerdict::Kind::yes) out.add("nilpotent_m", nil.m);
      return static_cast<int>(cs.status == SpanStatus::closed ? exit_ok : exit_inconclusive);
    });
  }

  int ddeg(Report& out) {
    const OperatorText op = op_text();
    auto go = [&]<Carrier R>(R*) {
      const auto d = build_derivation<R>(op, ctx_, in_.order);
      const R a = element<R>(require(in_.f, "--f"));
      out.add("f", a.to_string());
      out.add("deg", d_degree(d, a, in_.cap));
      if (in_.g.empty()) return static_cast<int>(exit_ok);
      const R b = element<R>(in_.g);
      out.add("g", b.to_string());
      out.add("deg_g", d_degree(d, b, in_.cap));
      out.add("deg_fg", d_degree(d, detail::ring_mul(a, b), 2 * in_.cap));
      const bool ok = degree_additivity_check(d, a, b, in_.cap);
      out.add("additive", ok);
      return static_cast<int>(ok ? exit_ok : exit_violation);
    };
    return series() ? go(static_cast<TruncSeries*>(nullptr)) : go(static_cast<LaurentPoly*>(nullptr));
  }

  int periodicity(Report& out) {
    const OperatorText op = op_text();
    auto go = [&]<Carrier R>(R*) {
      const auto phi = build_endomorphism<R>(op, ctx_, in_.order);
      const auto cert = detect_periodicity(phi, in_.imax);
      out.add("operator", phi.to_string());
      out.add("i_max", in_.imax);
      if (!cert) {
        out.add("status", "none");
        return static_cast<int>(exit_inconclusive);
      }
      out.append(cert->to_report());
      return static_cast<int>(exit_ok);
    };
    return series() ? go(static_cast<TruncSeries*>(nullptr)) : go(static_cast<LaurentPoly*>(nullptr));
  }

  Matrix matrix() const { return parse_matrix(require(in_.matrix, "--matrix"), field_); }

  int jc(Report& out) {
    const Matrix a = matrix();
    const auto d = jc_decompose(a);
    const bool sum = d.semisimple + d.nilpotent == a;
    const bool commute = d.semisimple * d.nilpotent == d.nilpotent * d.semisimple;
    const bool nilpotent = d.nilpotent.pow(a.rows()).is_zero();
    const bool squarefree = is_squarefree(min_poly(d.semisimple));
    out.add("A", a.to_inline_string());
    out.add("char_poly", char_poly(a).to_string());
    out.add("min_poly", min_poly(a).to_string());
    out.add("S", d.semisimple.to_inline_string());
    out.add("N", d.nilpotent.to_inline_string());
    out.add("nilpotence_index", nilpotence_index(d.nilpotent));
    out.add("S+N=A", sum);
    out.add("SN=NS", commute);
    out.add("N_nilpotent", nilpotent);
    out.add("min_poly_S_squarefree", squarefree);
    return sum && commute && nilpotent && squarefree ? exit_ok : exit_violation;
  }

  int cyclo(Report& out) {
    const Matrix a = matrix();
    out.append(roots_of_unity_orders(a).to_report());
    const auto blocks = jordan_block_check(a);
    out.append(blocks.to_report(), "blocks_");
    const auto cert = eventual_period_certificate(a);
    out.append(cert.to_report(), "period_");
    return cert.certified ? exit_ok : exit_violation;
  }

  SubspaceSpec subspace() const {
    SubspaceSpec s = parse_subspace(in_.support);
    if (s.nvars != ctx_.nvars) {
      if (in_.support == "{(0)}") return SubspaceSpec::constant_term_free(ctx_.nvars);
      throw InputError("support tuples have length " + std::to_string(s.nvars) + " but there are " +
                       std::to_string(ctx_.nvars) + " variables");
    }
    return s;
  }

  template <class Fn>
  int with_carrier(Fn&& fn) const {
    if (in_.carrier == "laurent") return fn([&](const std::string& t) { return parse_laurent(t, ctx_); });
    if (in_.carrier == "series") return fn([&](const std::string& t) { return parse_series(t, ctx_, in_.order); });
    if (in_.carrier == "localized") {
      return fn([&](const std::string& t) { return parse_localized(t, ctx_, in_.order); });
    }
    throw InputError("unknown carrier '" + in_.carrier + "'");
  }

  int radical(Report& out) {
    const SubspaceSpec m = subspace();
    return with_carrier([&](auto parse) {
      const auto r = radical_membership(parse(require(in_.f, "--f")), m, in_.m0, in_.mmax);
      out.append(r.to_report());
      return static_cast<int>(r.in_radical() ? exit_ok : exit_violation);
    });
  }

  int mz(Report& out) {
    const SubspaceSpec m = subspace();
    return with_carrier([&](auto parse) {
      const auto a = parse(require(in_.a, "--a"));
      std::vector<std::decay_t<decltype(a)>> bs;
      for (const auto& t : in_.b) bs.push_back(parse(t));
      if (bs.empty()) throw InputError("give at least one --b");
      const auto r = mz_falsify(a, m, bs, in_.mmax);
      out.append(r.to_report());
      return static_cast<int>(r.vacuous() || r.violated() ? exit_violation : exit_ok);
    });
  }

  /// phi(x_i) = lambda_i x_i, or D(x_i) = c_i x_i, read off a parsed operator.
  std::optional<ImageSpec> diagonal_spec(const OperatorText& op) const {
    std::vector<Scalar> coeffs;
    for (std::size_t i = 0; i < ctx_.nvars; ++i) {
      auto it = op.entries.find(i);
      const LaurentPoly img = it == op.entries.end()
                                  ? (op.kind == OperatorText::Kind::derivation ? LaurentPoly(ctx_)
                                                                                : LaurentPoly::variable(ctx_, i))
                                  : parse_laurent(it->second, ctx_);
      const MultiIndex e = MultiIndex::unit(ctx_.nvars, i);
      if (!img.is_zero() && !(img.size() == 1 && !img.coeff(e).is_zero())) return std::nullopt;
      coeffs.push_back(img.coeff(e));
    }
    if (op.kind == OperatorText::Kind::derivation) {
      DiagonalDerivationSpec s;
      for (const auto& c : coeffs) s.c.push_back({c});
      return s;
    }
    return DiagonalEndoSpec{coeffs};
  }

  int image(Report& out) {
    const LaurentPoly f = parse_laurent(require(in_.f, "--f"), ctx_);
    out.add("f", f.to_string());
    if (!in_.weights.empty()) {
      if (!in_.derivation.empty() || !in_.endo.empty() || !in_.ederivation.empty() || !in_.op.empty()) {
        throw InputError("--weights describes the operator on its own");
      }
      DiagonalDerivationSpec s{parse_tuples(in_.weights, field_)};
      out.add("operator", "sum_i <w_i,t> x_i d/dx_i, w = " + in_.weights);
      const auto v = image_membership_diagonal(s, f);
      out.append(v.to_report());
      return v.member ? exit_ok : exit_violation;
    }
    OperatorText op = op_text();
    if (in_.bound) {
      if (op.kind == OperatorText::Kind::endo) op.kind = OperatorText::Kind::ederivation;
      int code = exit_ok;
      auto go = [&](const auto& l) {
        const auto v = image_membership_bounded(l, f, *in_.bound);
        out.add("operator", l.to_string());
        out.append(v.to_report());
        code = v.member ? exit_ok : exit_violation;
      };
      if (op.kind == OperatorText::Kind::derivation) {
        go(build_derivation<LaurentPoly>(op, ctx_));
      } else {
        go(EDerivation<LaurentPoly>(build_endomorphism<LaurentPoly>(op, ctx_)));
      }
      return code;
    }
    const auto spec = diagonal_spec(op);
    if (!spec) throw InputError("operator is not diagonal; pass --bound B for the bounded solver");
    out.add("operator", op.kind == OperatorText::Kind::derivation ? "diagonal derivation" : "1 - phi, phi diagonal");
    const auto v = image_membership_diagonal(*spec, f);
    out.append(v.to_report());
    return v.member ? exit_ok : exit_violation;
  }

  int grade(Report& out) {
    const OperatorText op = op_text();
    const auto d = build_derivation<LaurentPoly>(op, ctx_);
    const MultiIndex w = parse_index(require(in_.d, "--d"));
    out.add("operator", d.to_string());
    out.append(graded_decompose(d, w).to_report());
    return exit_ok;
  }

  int inverse(Report& out) {
    if (in_.components.empty()) throw InputError("give the map components with --component");
    std::vector<TruncSeries> fs;
    for (const auto& t : in_.components) fs.push_back(parse_series(t, ctx_, in_.order));
    const auto g = formal_inverse(fs, in_.order);
    const auto id = identity_map(ctx_, in_.order);
    bool round = true;
    const auto fg = ts_compose(fs, g);
    const auto gf = ts_compose(g, fs);
    for (std::size_t i = 0; i < id.size(); ++i) round = round && fg[i] == id[i] && gf[i] == id[i];
    out.add("order", in_.order);
    for (std::size_t i = 0; i < g.size(); ++i) out.add("G" + std::to_string(i + 1), g[i].to_string());
    out.add("round_trip", round);
    return round ? exit_ok : exit_violation;
  }

  int normalize(Report& out) {
    const OperatorText op = op_text();
    const auto phi = build_endomorphism<TruncSeries>(op, ctx_, in_.order);
    const auto n = normalize_endomorphism(phi, in_.cap);
    out.append(n.to_report());
    return n.certified ? exit_ok : exit_violation;
  }
};

inline int run_repro(const Inputs& in, Report& out) {
  std::vector<const ReproCase*> todo;
  if (in.all) {
    for (const auto& c : repro_registry()) todo.push_back(&c);
  }
  for (const auto& id : in.cases) {
    const ReproCase* c = find_repro(id);
    if (!c) throw InputError("unknown repro case '" + id + "'");
    todo.push_back(c);
  }
  if (todo.empty()) {
    for (const auto& c : repro_registry()) out.add("case", c.id + " - " + c.description);
    return exit_ok;
  }
  ReproParams params;
  params.p = in.p;
  if (in.mmax_given) params.mmax = in.mmax;
  if (in.order_given) params.order = in.order;
  bool all_pass = true;
  for (const auto* c : todo) {
    const ReproOutcome r = c->run(params);
    out.add("case", c->id);
    out.add("description", c->description);
    out.append(r.report, "  ");
    out.add("result", r.pass ? "PASS" : "FAIL");
    all_pass = all_pass && r.pass;
  }
  if (todo.size() > 1) out.add("summary", all_pass ? "all PASS" : "FAIL");
  return all_pass ? exit_ok : exit_violation;
}

}  // namespace cli

/// Runs one `mz-lab` invocation. `args` excludes the program name.
inline CliResult run_subcommand(const std::vector<std::string>& args) {
  CliResult res;
  cli::Inputs in;
  CLI::App app{"Exact workbench for derivations, E-derivations and Mathieu-Zhao spaces", "mz-lab"};
  app.set_config("--config", "", "read key = value options from a file");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--machine", in.machine, "emit key<TAB>value lines");
  app.add_option("--char", in.characteristic, "field characteristic (0 or a prime)");
  auto* order_opt = app.add_option("--order", in.order, "truncation order K for series")->capture_default_str();
  app.add_option("--cap", in.cap, "dimension cap for local finiteness")->capture_default_str();
  auto* mmax_opt = app.add_option("--mmax", in.mmax, "largest power scanned")->capture_default_str();
  app.add_option("--nvars", in.nvars, "number of variables (default: inferred)");
  app.add_option("--carrier", in.carrier, "laurent, series or localized")->capture_default_str();

  auto op_flags = [&](CLI::App* s) {
    s->add_option("--derivation", in.derivation, "D(x1)=..., D(x2)=...");
    s->add_option("--endo", in.endo, "phi(x1)=..., phi(x2)=...");
    s->add_option("--ederivation", in.ederivation, "phi(x1)=... for delta = 1 - phi");
    s->add_option("--op", in.op, "operator with a kind prefix, e.g. 'endo: phi(x1)=x2'");
  };
  std::vector<std::pair<std::string, CLI::App*>> subs;
  auto sub = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    subs.emplace_back(name, s);
    return s;
  };
  auto* s_apply = sub("apply", "apply an operator to f");
  op_flags(s_apply);
  s_apply->add_option("--f", in.f, "element")->required();
  auto* s_iter = sub("iterate", "apply an operator m times");
  op_flags(s_iter);
  s_iter->add_option("--f", in.f, "element")->required();
  s_iter->add_option("--m", in.m, "number of applications")->required();
  auto* s_cyc = sub("cyclic", "span of L^m(f) and its action matrix");
  op_flags(s_cyc);
  s_cyc->add_option("--f", in.f, "element")->required();
  auto* s_ddeg = sub("ddeg", "D-degree, and additivity when --g is given");
  op_flags(s_ddeg);
  s_ddeg->add_option("--f", in.f, "element")->required();
  s_ddeg->add_option("--g", in.g, "second element");
  auto* s_per = sub("periodicity", "least (i, j) with phi^i = phi^j");
  op_flags(s_per);
  s_per->add_option("--imax", in.imax, "largest power compared")->capture_default_str();
  auto* s_jc = sub("jc", "Jordan-Chevalley decomposition");
  s_jc->add_option("--matrix", in.matrix, "n followed by n*n entries, or @file")->required();
  auto* s_cyclo = sub("cyclo", "root-of-unity certificate and (N, d)");
  s_cyclo->add_option("--matrix", in.matrix, "n followed by n*n entries, or @file")->required();
  auto* s_rad = sub("radical", "scan a^m for m in [m0, mmax]");
  s_rad->add_option("--f", in.f, "element a")->required();
  s_rad->add_option("--support", in.support, "kernel support, e.g. {(0,0)}");
  s_rad->add_option("--m0", in.m0, "first power")->capture_default_str();
  auto* s_mz = sub("mz", "look for b a^m outside M");
  s_mz->add_option("--a", in.a, "element a")->required();
  s_mz->add_option("--b", in.b, "multiplier (repeatable)")->required();
  s_mz->add_option("--support", in.support, "kernel support, e.g. {(0,0)}");
  auto* s_img = sub("image", "is f in the image of the operator?");
  op_flags(s_img);
  s_img->add_option("--f", in.f, "element")->required();
  s_img->add_option("--weights", in.weights, "vectors w_i in Q^d for D = sum <w_i,t> x_i d/dx_i");
  s_img->add_option("--bound", in.bound, "degree bound for the general solver");
  auto* s_grade = sub("grade", "split a derivation by weight");
  op_flags(s_grade);
  s_grade->add_option("--d", in.d, "positive weight vector, e.g. (1,1)")->required();
  auto* s_inv = sub("inverse", "compositional inverse of a formal map");
  s_inv->add_option("--component", in.components, "F_i (repeatable, in order)")->required();
  auto* s_norm = sub("normalize", "eigen-coordinates of a locally finite endomorphism of k[[x]]");
  op_flags(s_norm);
  auto* s_repro = sub("repro", "run reproduction cases");
  s_repro->add_option("case", in.cases, "case identifiers");
  s_repro->add_flag("--all", in.all, "run every case");
  s_repro->add_option("--p", in.p, "prime for the characteristic-p cases");

  std::vector<std::string> argv_store{"mz-lab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  std::ostringstream out, err;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    res.code = app.exit(e, out, err);
    if (res.code != 0) res.code = exit_input;
    res.out = out.str();
    res.err = err.str();
    return res;
  }
  in.order_given = order_opt->count() > 0;
  in.mmax_given = mmax_opt->count() > 0;

  std::string name;
  for (const auto& [n, s] : subs) {
    if (s->parsed()) name = n;
  }
  Report report;
  try {
    if (in.order < 0) throw InputError("--order must be nonnegative");
    if (name == "repro") {
      res.code = cli::run_repro(in, report);
    } else {
      res.code = cli::Runner(in).run(name, report);
    }
  } catch (const Inconclusive& e) {
    res.code = exit_inconclusive;
    report.add("status", "inconclusive");
    report.add("reason", e.what());
  } catch (const Unsupported& e) {
    res.code = exit_input;
    err << "unsupported: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    res.code = exit_input;
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    res.code = exit_input;
    err << "error: " << e.what() << "\n";
  }
  res.out = in.machine ? report.machine() : report.human();
  res.err = err.str();
  return res;
}

}  // namespace mzlab
