#pragma once

// Spectral analysis of a linear operator given by its matrix over Q, done
// entirely with polynomial factors: no eigenvalue is ever computed
// numerically or adjoined to Q.

#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mzlab/errors.hpp"
#include "mzlab/factor.hpp"
#include "mzlab/linalg.hpp"
#include "mzlab/report.hpp"
#include "mzlab/scalar.hpp"
#include "mzlab/unipoly.hpp"

namespace mzlab {

/// det(T I - A), via reduction to upper Hessenberg form and the
/// three-term recurrence on leading principal minors.
inline UniPoly char_poly(const Matrix& a) {
  a.require_square();
  const Field f = a.field();
  const std::size_t n = a.rows();
  Matrix h = a;
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && h(piv, m - 1).is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(m, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, m));
    }
    const Scalar inv = h(m, m - 1).inverse();
    for (std::size_t i = m + 1; i < n; ++i) {
      if (h(i, m - 1).is_zero()) continue;
      const Scalar u = h(i, m - 1) * inv;
      for (std::size_t j = 0; j < n; ++j) h(i, j) -= u * h(m, j);
      for (std::size_t r = 0; r < n; ++r) h(r, m) += u * h(r, i);
    }
  }
  // p[k] = characteristic polynomial of the leading k x k block.
  std::vector<UniPoly> p;
  p.push_back(UniPoly::constant(f, f.one()));
  const UniPoly t = UniPoly::t(f);
  for (std::size_t m = 0; m < n; ++m) {
    UniPoly next = (t - UniPoly::constant(f, h(m, m))) * p[m];
    Scalar prod = f.one();
    for (std::size_t i = m; i-- > 0;) {
      prod *= h(i + 1, i);
      if (prod.is_zero()) break;
      next = next - p[i] * (prod * h(i, m));
    }
    p.push_back(std::move(next));
  }
  return p.back();
}

/// Least-degree monic annihilating polynomial, found as the first linear
/// dependency among I, A, A^2, ... viewed as vectors of length n^2.
inline UniPoly min_poly(const Matrix& a) {
  a.require_square();
  const Field f = a.field();
  const std::size_t n = a.rows();
  std::vector<Vector> powers;
  Matrix pk = Matrix::identity(f, n);
  for (std::size_t k = 0; k <= n; ++k) {
    Vector flat;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) flat.push_back(pk(i, j));
    }
    if (!powers.empty()) {
      const Matrix basis = Matrix::from_columns(f, n * n, powers);
      if (auto sol = basis.solve(flat)) {
        std::vector<Scalar> c;
        for (const auto& x : *sol) c.push_back(-x);
        c.push_back(f.one());
        return UniPoly(f, std::move(c));
      }
    }
    powers.push_back(std::move(flat));
    pk = pk * a;
  }
  throw InputError("min_poly: no dependency found (Cayley-Hamilton violated?)");
}

/// A = S + N with S semisimple, N nilpotent, SN = NS.
struct RationalJC {
  Matrix semisimple;
  Matrix nilpotent;
};

/// Newton iteration S <- S - g(S) g'(S)^{-1} from S = A, g the squarefree
/// part of the characteristic polynomial. Each step doubles the power of
/// g(A) dividing g(S); ceil(log2 n) + 1 steps exceed the nilpotency bound n.
inline RationalJC jc_decompose(const Matrix& a) {
  a.require_square();
  if (a.field().characteristic != 0) throw InputError("jc_decompose is implemented over Q");
  const std::size_t n = a.rows();
  if (n == 0) return {a, a};
  const UniPoly g = squarefree_part(char_poly(a));
  const UniPoly dg = g.derivative();
  Matrix s = a;
  std::size_t steps = 1;
  while ((std::size_t{1} << (steps - 1)) < n) ++steps;
  for (std::size_t k = 0; k < steps; ++k) {
    const Matrix gs = g.eval(s);
    if (gs.is_zero()) break;
    s = s - gs * dg.eval(s).inverse();
  }
  if (!g.eval(s).is_zero()) throw InputError("jc_decompose: Newton iteration did not converge");
  return {s, a - s};
}

/// Smallest k >= 1 with N^k = 0; 1 for the zero (or empty) matrix.
inline std::size_t nilpotence_index(const Matrix& nmat) {
  nmat.require_square();
  const std::size_t n = nmat.rows();
  Matrix p = nmat;
  for (std::size_t k = 1; k <= std::max<std::size_t>(n, 1); ++k) {
    if (p.is_zero()) return k;
    p = p * nmat;
  }
  throw InputError("matrix is not nilpotent");
}

struct FactorClass {
  enum class Kind { zero_root, cyclotomic, other };
  UniPoly poly;
  unsigned multiplicity = 1;
  Kind kind = Kind::other;
  unsigned long order = 0;  // m when poly = Phi_m
};

struct CycloReport {
  UniPoly char_poly;
  std::vector<FactorClass> factors;
  /// lcm of the cyclotomic orders; empty when some nonzero eigenvalue is not
  /// a root of unity.
  std::optional<unsigned long> d;

  bool all_roots_of_unity() const { return d.has_value(); }

  Report to_report() const {
    Report r;
    r.add("char_poly", char_poly.to_string());
    for (const auto& fc : factors) {
      std::string kind;
      switch (fc.kind) {
        case FactorClass::Kind::zero_root:
          kind = "zero-root";
          break;
        case FactorClass::Kind::cyclotomic:
          kind = "cyclotomic " + std::to_string(fc.order);
          break;
        case FactorClass::Kind::other:
          kind = "other";
          break;
      }
      r.add("factor", fc.poly.to_string() + " ^" + std::to_string(fc.multiplicity) + " " + kind);
    }
    if (d) {
      r.add("d", *d);
    } else {
      r.add("d", "undefined");
      r.add("verdict", "non-root-of-unity eigenvalue present");
    }
    return r;
  }
};

/// Classifies the irreducible factors of char_poly(A): T (eigenvalue 0),
/// Phi_m (primitive m-th roots of unity), or anything else.
inline CycloReport roots_of_unity_orders(const Matrix& a) {
  if (a.field().characteristic != 0) throw InputError("cyclotomic certification is implemented over Q");
  CycloReport rep;
  rep.char_poly = char_poly(a);
  unsigned long d = 1;
  bool ok = true;
  const UniPoly t = UniPoly::t(a.field());
  for (const auto& f : factor_rational(rep.char_poly)) {
    FactorClass fc{f.poly, f.multiplicity, FactorClass::Kind::other, 0};
    if (f.poly == t) {
      fc.kind = FactorClass::Kind::zero_root;
    } else {
      for (unsigned long m : inverse_totient(static_cast<unsigned long>(f.poly.degree()))) {
        const UniPoly phi = cyclotomic(m);
        if (phi == f.poly && phi.divides(rep.char_poly)) {
          fc.kind = FactorClass::Kind::cyclotomic;
          fc.order = m;
          break;
        }
      }
    }
    if (fc.kind == FactorClass::Kind::cyclotomic) d = std::lcm(d, fc.order);
    if (fc.kind == FactorClass::Kind::other) ok = false;
    rep.factors.push_back(std::move(fc));
  }
  if (ok) rep.d = d;
  return rep;
}

struct JordanBlockReport {
  struct Violation {
    UniPoly factor;
    unsigned min_poly_multiplicity = 0;
  };
  UniPoly min_poly;
  std::vector<Violation> violations;

  bool clean() const { return violations.empty(); }

  Report to_report() const {
    Report r;
    r.add("min_poly", min_poly.to_string());
    r.add("status", clean() ? "clean" : "violation");
    for (const auto& v : violations) {
      r.add("violation", v.factor.to_string() + " ^" + std::to_string(v.min_poly_multiplicity));
    }
    r.add("context", "meaningful for phi|_V of a locally finite endomorphism of a local domain");
    return r;
  }
};

/// Every irreducible factor q != T must divide the minimal polynomial
/// exactly once: Jordan blocks at nonzero eigenvalues are 1 x 1.
inline JordanBlockReport jordan_block_check(const Matrix& a) {
  JordanBlockReport rep;
  rep.min_poly = min_poly(a);
  const UniPoly t = UniPoly::t(a.field());
  for (const auto& f : factor_rational(rep.min_poly)) {
    if (f.poly == t) continue;
    if (f.multiplicity > 1) rep.violations.push_back({f.poly, f.multiplicity});
  }
  return rep;
}

struct PeriodCertificate {
  bool certified = false;
  std::size_t n = 0;       // A^{n+d} = A^n
  unsigned long d = 0;
  std::string refusal;     // reason when not certified

  Report to_report() const {
    Report r;
    r.add("status", certified ? "certified" : "refused");
    if (certified) {
      r.add("N", n);
      r.add("d", d);
    } else {
      r.add("reason", refusal);
    }
    return r;
  }
};

/// Basis of the generalized 0-eigenspace ker A^n, and the matrix of A
/// restricted to it.
inline Matrix restrict_to_generalized_kernel(const Matrix& a) {
  const std::size_t n = a.rows();
  const auto basis = a.pow(n).kernel();
  const Field f = a.field();
  if (basis.empty()) return Matrix(f, 0, 0);
  const Matrix b = Matrix::from_columns(f, n, basis);
  Matrix r(f, basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto coords = b.solve(a * basis[j]);
    if (!coords) throw InputError("generalized kernel is not invariant");
    for (std::size_t i = 0; i < basis.size(); ++i) r(i, j) = (*coords)[i];
  }
  return r;
}

/// (N, d) with A^{N+d} = A^N, when every nonzero eigenvalue is a root of unity
/// with trivial Jordan blocks. N is the nilpotence index on the generalized
/// 0-eigenspace; d is the lcm of the cyclotomic orders.
inline PeriodCertificate eventual_period_certificate(const Matrix& a) {
  PeriodCertificate cert;
  const CycloReport cyc = roots_of_unity_orders(a);
  if (!cyc.all_roots_of_unity()) {
    for (const auto& fc : cyc.factors) {
      if (fc.kind != FactorClass::Kind::other) continue;
      std::string what = fc.poly.degree() == 1 ? "eigenvalue " + (-fc.poly.coeff(0)).to_string()
                                               : "eigenvalues of " + fc.poly.to_string();
      cert.refusal = what + " is not a root of unity";
      return cert;
    }
  }
  const JordanBlockReport blocks = jordan_block_check(a);
  if (!blocks.clean()) {
    cert.refusal = "nontrivial Jordan block at the roots of " + blocks.violations.front().factor.to_string();
    return cert;
  }
  const Matrix zero_part = restrict_to_generalized_kernel(a);
  cert.n = zero_part.rows() == 0 ? 1 : nilpotence_index(zero_part);
  cert.d = *cyc.d;
  if (!(a.pow(cert.n + cert.d) == a.pow(cert.n))) {
    throw InputError("eventual_period_certificate: A^{N+d} != A^N (internal inconsistency)");
  }
  cert.certified = true;
  return cert;
}

/// Parses the matrix file format: first line n, then n rows of n rationals.
inline Matrix parse_matrix(const std::string& text, Field field = Field::rationals()) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
      if (!cur.empty()) tokens.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) tokens.push_back(cur);
  if (tokens.empty()) throw InputError("empty matrix file");
  long dim = -1;
  try {
    std::size_t used = 0;
    dim = std::stol(tokens[0], &used);
    if (used != tokens[0].size()) dim = -1;
  } catch (const std::logic_error&) {
    dim = -1;
  }
  if (dim < 0) throw InputError("matrix file must start with the dimension n");
  const auto n = static_cast<std::size_t>(dim);
  if (tokens.size() != 1 + n * n) {
    throw InputError("matrix file: expected " + std::to_string(n * n) + " entries, found " +
                     std::to_string(tokens.size() - 1));
  }
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = field.parse(tokens[1 + i * n + j]);
  }
  return m;
}

}  // namespace mzlab
