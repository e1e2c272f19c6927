#pragma once

// Factorization of univariate polynomials over Q: Yun's squarefree
// decomposition followed by Zassenhaus (factor mod a small prime, Hensel lift,
// recombine). Sized for characteristic polynomials of small matrices.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "mzlab/errors.hpp"
#include "mzlab/scalar.hpp"
#include "mzlab/unipoly.hpp"

namespace mzlab {

struct Factor {
  UniPoly poly;  // monic, irreducible over Q
  unsigned multiplicity = 1;
};

namespace detail {

// ---- polynomials over F_p, p < 2^31 ----------------------------------------

using PolyP = std::vector<std::uint64_t>;

inline void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline long deg(const PolyP& a) { return static_cast<long>(a.size()) - 1; }

inline PolyP sub_p(const PolyP& a, const PolyP& b, std::uint64_t p) {
  PolyP r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

inline PolyP mul_p(const PolyP& a, const PolyP& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PolyP r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mul_mod(a[i], b[j], p)) % p;
  }
  trim(r);
  return r;
}

inline std::pair<PolyP, PolyP> divmod_p(PolyP a, const PolyP& b, std::uint64_t p) {
  const std::uint64_t inv = pow_mod(b.back(), p - 2, p);
  if (deg(a) < deg(b)) return {{}, a};
  PolyP q(a.size() - b.size() + 1, 0);
  while (!a.empty() && deg(a) >= deg(b)) {
    const auto shift = static_cast<std::size_t>(deg(a) - deg(b));
    const std::uint64_t f = mul_mod(a.back(), inv, p);
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = (a[i + shift] + p - mul_mod(f, b[i], p)) % p;
    trim(a);
  }
  trim(q);
  return {q, a};
}

inline PolyP mod_p(const PolyP& a, const PolyP& b, std::uint64_t p) { return divmod_p(a, b, p).second; }

inline PolyP monic_p(PolyP a, std::uint64_t p) {
  if (a.empty()) return a;
  const std::uint64_t inv = pow_mod(a.back(), p - 2, p);
  for (auto& x : a) x = mul_mod(x, inv, p);
  return a;
}

inline PolyP gcd_p(PolyP a, PolyP b, std::uint64_t p) {
  while (!b.empty()) {
    PolyP r = mod_p(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic_p(std::move(a), p);
}

/// s, t with s a + t b = 1 (a, b coprime).
inline std::pair<PolyP, PolyP> bezout_p(const PolyP& a, const PolyP& b, std::uint64_t p) {
  PolyP r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  while (!r1.empty()) {
    auto [q, r] = divmod_p(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    PolyP s2 = sub_p(s0, mul_p(q, s1, p), p);
    PolyP t2 = sub_p(t0, mul_p(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw InputError("bezout_p: inputs are not coprime");
  const std::uint64_t inv = pow_mod(r0[0], p - 2, p);
  for (auto& x : s0) x = mul_mod(x, inv, p);
  for (auto& x : t0) x = mul_mod(x, inv, p);
  return {s0, t0};
}

inline PolyP powmod_p(PolyP base, mpz_class e, const PolyP& m, std::uint64_t p) {
  PolyP acc = {1};
  base = mod_p(base, m, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = mod_p(mul_p(acc, base, p), m, p);
    base = mod_p(mul_p(base, base, p), m, p);
    e >>= 1;
  }
  return acc;
}

inline PolyP derivative_p(const PolyP& a, std::uint64_t p) {
  PolyP r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(mul_mod(a[i], i % p, p));
  trim(r);
  return r;
}

/// Distinct-degree factorization of a monic squarefree f.
inline std::vector<std::pair<PolyP, long>> distinct_degree_p(PolyP f, std::uint64_t p) {
  std::vector<std::pair<PolyP, long>> out;
  const PolyP x = {0, 1};
  PolyP h = x;
  for (long d = 1; 2 * d <= deg(f); ++d) {
    h = powmod_p(h, mpz_class(p), f, p);
    PolyP g = gcd_p(f, sub_p(h, x, p), p);
    if (deg(g) > 0) {
      out.emplace_back(g, d);
      f = divmod_p(f, g, p).first;
      h = mod_p(h, f, p);
    }
  }
  if (deg(f) > 0) out.emplace_back(f, deg(f));
  return out;
}

/// Cantor-Zassenhaus splitting of f (monic, all factors of degree d), p odd.
inline void equal_degree_p(const PolyP& f, long d, std::uint64_t p, std::mt19937_64& rng,
                           std::vector<PolyP>& out) {
  if (deg(f) == d) {
    out.push_back(f);
    return;
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
  while (true) {
    PolyP a(static_cast<std::size_t>(deg(f)), 0);
    for (auto& c : a) c = coef(rng);
    trim(a);
    if (deg(a) < 1) continue;
    PolyP b = sub_p(powmod_p(a, e, f, p), {1}, p);
    PolyP g = gcd_p(f, b, p);
    if (deg(g) > 0 && deg(g) < deg(f)) {
      equal_degree_p(g, d, p, rng, out);
      equal_degree_p(divmod_p(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

// ---- integer polynomials --------------------------------------------------

using PolyZ = std::vector<mpz_class>;

inline void trim(PolyZ& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PolyZ mul_z(const PolyZ& a, const PolyZ& b) {
  if (a.empty() || b.empty()) return {};
  PolyZ r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

inline void reduce_mod(PolyZ& a, const mpz_class& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  trim(a);
}

/// Symmetric residues in (-m/2, m/2].
inline void symmetric_mod(PolyZ& a, const mpz_class& m) {
  reduce_mod(a, m);
  const mpz_class half = m / 2;
  for (auto& c : a) {
    if (c > half) c -= m;
  }
  trim(a);
}

inline mpz_class content(const PolyZ& a) {
  mpz_class g = 0;
  for (const auto& c : a) g = gcd(g, c);
  return g;
}

inline PolyZ primitive_part(PolyZ a) {
  mpz_class g = content(a);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

/// Exact division over Z; false when b does not divide a.
inline bool exact_divide_z(PolyZ a, const PolyZ& b, PolyZ& quotient) {
  if (b.empty()) return false;
  if (a.size() < b.size()) return a.empty() ? (quotient = {}, true) : false;
  PolyZ q(a.size() - b.size() + 1, 0);
  while (!a.empty() && a.size() >= b.size()) {
    if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t())) return false;
    const mpz_class f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  if (!a.empty()) return false;
  trim(q);
  quotient = std::move(q);
  return true;
}

inline PolyZ to_z(const PolyP& a) {
  PolyZ r;
  for (auto x : a) r.emplace_back(static_cast<unsigned long>(x));
  return r;
}

inline PolyP to_p(const PolyZ& a, std::uint64_t p) {
  PolyP r;
  for (const auto& c : a) {
    mpz_class x = c % static_cast<unsigned long>(p);
    if (x < 0) x += static_cast<unsigned long>(p);
    r.push_back(x.get_ui());
  }
  trim(r);
  return r;
}

/// Lifts f = g h (mod p), g and h monic and coprime mod p, f monic modulo
/// p^k, to a factorization modulo p^k by linear Hensel steps.
inline std::pair<PolyZ, PolyZ> hensel_lift(const PolyZ& f, const PolyP& g0, const PolyP& h0, std::uint64_t p,
                                           unsigned k) {
  const auto [s, t] = bezout_p(g0, h0, p);
  PolyZ g = to_z(g0), h = to_z(h0);
  mpz_class pe = static_cast<unsigned long>(p);
  for (unsigned e = 1; e < k; ++e) {
    const mpz_class next = pe * static_cast<unsigned long>(p);
    PolyZ err = f;
    const PolyZ gh = mul_z(g, h);
    err.resize(std::max(err.size(), gh.size()), 0);
    for (std::size_t i = 0; i < gh.size(); ++i) err[i] -= gh[i];
    reduce_mod(err, next);
    for (auto& c : err) c /= pe;  // divisible by p^e by construction
    const PolyP ep = to_p(err, p);
    const PolyP dg = mod_p(mul_p(t, ep, p), g0, p);
    const PolyP dh = mod_p(mul_p(s, ep, p), h0, p);
    g.resize(std::max(g.size(), dg.size()), 0);
    h.resize(std::max(h.size(), dh.size()), 0);
    for (std::size_t i = 0; i < dg.size(); ++i) g[i] += pe * static_cast<unsigned long>(dg[i]);
    for (std::size_t i = 0; i < dh.size(); ++i) h[i] += pe * static_cast<unsigned long>(dh[i]);
    pe = next;
  }
  reduce_mod(g, pe);
  reduce_mod(h, pe);
  return {g, h};
}

inline std::vector<PolyZ> hensel_lift_all(const PolyZ& f, const std::vector<PolyP>& factors, std::uint64_t p,
                                          unsigned k, const mpz_class& pk) {
  if (factors.size() == 1) {
    PolyZ g = f;
    reduce_mod(g, pk);
    return {g};
  }
  PolyP rest = {1};
  for (std::size_t i = 1; i < factors.size(); ++i) rest = mul_p(rest, factors[i], p);
  auto [g, h] = hensel_lift(f, factors[0], rest, p, k);
  std::vector<PolyP> tail(factors.begin() + 1, factors.end());
  auto lifted = hensel_lift_all(h, tail, p, k, pk);
  lifted.insert(lifted.begin(), g);
  return lifted;
}

inline mpz_class invert_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) throw InputError("not invertible");
  return r;
}

/// Irreducible factors over Z of a primitive squarefree polynomial of
/// positive degree with positive leading coefficient.
inline std::vector<PolyZ> zassenhaus(PolyZ f) {
  const long n = static_cast<long>(f.size()) - 1;
  if (n <= 1) return {f};

  std::uint64_t p = 3;
  PolyP fp;
  for (;; p += 2) {
    if (!is_prime(p)) continue;
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), static_cast<unsigned long>(p))) continue;
    fp = monic_p(to_p(f, p), p);
    if (deg(gcd_p(fp, derivative_p(fp, p), p)) == 0) break;
  }

  std::mt19937_64 rng(0x5eedULL);
  std::vector<PolyP> modular;
  for (const auto& [g, d] : distinct_degree_p(fp, p)) equal_degree_p(g, d, p, rng, modular);
  if (modular.size() == 1) return {f};
  std::sort(modular.begin(), modular.end());

  // Factor coefficients are bounded by 2^n (n+1) max|f_i| (Mignotte); the
  // candidate lc * prod g_i needs p^k > 2 |lc| bound.
  mpz_class maxc = 0;
  for (const auto& c : f) maxc = std::max(maxc, mpz_class(abs(c)));
  mpz_class bound = maxc * (n + 1);
  bound <<= static_cast<unsigned long>(n);
  bound *= abs(f.back()) * 2;
  unsigned k = 1;
  mpz_class pk = static_cast<unsigned long>(p);
  while (pk <= bound) {
    pk *= static_cast<unsigned long>(p);
    ++k;
  }

  PolyZ monic_f = f;
  const mpz_class lc_inv = invert_mod(f.back(), pk);
  for (auto& c : monic_f) c *= lc_inv;
  reduce_mod(monic_f, pk);
  std::vector<PolyZ> lifted = hensel_lift_all(monic_f, modular, p, k, pk);

  std::vector<PolyZ> found;
  PolyZ rest = f;
  std::size_t subset_size = 1;
  while (2 * subset_size <= lifted.size()) {
    bool progress = false;
    const std::size_t r = lifted.size();
    std::vector<bool> choose(r, false);
    std::fill(choose.begin(), choose.begin() + static_cast<long>(subset_size), true);
    do {
      PolyZ cand = {rest.back()};
      for (std::size_t i = 0; i < r; ++i) {
        if (choose[i]) {
          cand = mul_z(cand, lifted[i]);
          reduce_mod(cand, pk);
        }
      }
      symmetric_mod(cand, pk);
      cand = primitive_part(cand);
      PolyZ quotient;
      if (!cand.empty() && exact_divide_z(rest, cand, quotient)) {
        found.push_back(cand);
        rest = quotient;
        std::vector<PolyZ> keep;
        for (std::size_t i = 0; i < r; ++i) {
          if (!choose[i]) keep.push_back(lifted[i]);
        }
        lifted = std::move(keep);
        progress = true;
        break;
      }
    } while (std::prev_permutation(choose.begin(), choose.end()));
    if (!progress) ++subset_size;
  }
  if (rest.size() > 1) found.push_back(primitive_part(rest));
  return found;
}

inline PolyZ to_primitive_integer(const UniPoly& f) {
  mpz_class den = 1;
  for (const auto& c : f.coeffs()) den = lcm(den, c.rational().get_den());
  PolyZ out;
  for (const auto& c : f.coeffs()) out.push_back(mpq_class(c.rational() * den).get_num());
  return primitive_part(std::move(out));
}

inline UniPoly to_monic_rational(const PolyZ& a) {
  std::vector<Scalar> v;
  for (const auto& c : a) v.emplace_back(mpq_class(c, a.back()));
  return UniPoly(Field::rationals(), std::move(v));
}

}  // namespace detail

/// Yun's squarefree decomposition over Q: pairs (a_i, i) with f = lc * prod a_i^i,
/// each a_i monic and squarefree, pairwise coprime.
inline std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& f) {
  if (f.field().characteristic != 0) throw InputError("squarefree decomposition implemented over Q only");
  std::vector<std::pair<UniPoly, unsigned>> out;
  if (f.degree() <= 0) return out;
  const UniPoly g = f.monic();
  const UniPoly a0 = gcd(g, g.derivative());
  UniPoly b = g / a0;
  UniPoly c = g.derivative() / a0;
  UniPoly d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    UniPoly a = gcd(b, d);
    b = b / a;
    c = d / a;
    d = c - b.derivative();
    if (a.degree() > 0) out.emplace_back(a.monic(), i);
    ++i;
  }
  return out;
}

/// Complete factorization over Q into monic irreducibles with multiplicities,
/// sorted by degree and then by coefficients.
inline std::vector<Factor> factor_rational(const UniPoly& f) {
  std::vector<Factor> out;
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (const auto& z : detail::zassenhaus(detail::to_primitive_integer(part))) {
      out.push_back({detail::to_monic_rational(z), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    for (long k = a.poly.degree(); k >= 0; --k) {
      const auto& x = a.poly.coeff(static_cast<std::size_t>(k)).rational();
      const auto& y = b.poly.coeff(static_cast<std::size_t>(k)).rational();
      if (x != y) return x < y;
    }
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

/// Euler's totient.
inline unsigned long totient(unsigned long m) {
  unsigned long result = m;
  for (unsigned long q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    while (m % q == 0) m /= q;
    result -= result / q;
  }
  if (m > 1) result -= result / m;
  return result;
}

/// All m with totient(m) = k. Uses totient(m) >= sqrt(m / 2), so m <= 2 k^2.
inline std::vector<unsigned long> inverse_totient(unsigned long k) {
  std::vector<unsigned long> out;
  const unsigned long limit = 2 * k * k + 2;
  for (unsigned long m = 1; m <= limit; ++m) {
    if (totient(m) == k) out.push_back(m);
  }
  return out;
}

/// Phi_m = prod_{d | m} (T^{m/d} - 1)^{mu(d)}.
inline UniPoly cyclotomic(unsigned long m) {
  if (m == 0) throw InputError("cyclotomic polynomial index must be positive");
  const Field q = Field::rationals();
  auto mobius = [](unsigned long d) {
    int mu = 1;
    for (unsigned long r = 2; r * r <= d; ++r) {
      if (d % r != 0) continue;
      d /= r;
      if (d % r == 0) return 0;
      mu = -mu;
    }
    if (d > 1) mu = -mu;
    return mu;
  };
  UniPoly num = UniPoly::constant(q, q.one());
  UniPoly den = UniPoly::constant(q, q.one());
  for (unsigned long d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    const int mu = mobius(d);
    if (mu == 0) continue;
    UniPoly term = UniPoly::monomial(q, m / d, q.one()) - UniPoly::constant(q, q.one());
    (mu > 0 ? num : den) = (mu > 0 ? num : den) * term;
  }
  return num / den;
}

}  // namespace mzlab
