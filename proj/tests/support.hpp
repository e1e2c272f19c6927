#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mzlab/mzlab.hpp"

namespace mzlab::testing {

// Raw engine output only; std distributions differ between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(eng_() % span);
  }
  bool coin() { return (eng_() & 1u) != 0; }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }

  Scalar scalar(const Field& f, std::int64_t num = 9, std::int64_t den = 4) {
    const Scalar a = f(static_cast<long>(range(-num, num)));
    if (f.characteristic != 0) return a;
    return a / f(static_cast<long>(range(1, den)));
  }
  Scalar nonzero_scalar(const Field& f) {
    for (;;) {
      const Scalar s = scalar(f);
      if (!s.is_zero()) return s;
    }
  }

 private:
  std::mt19937_64 eng_;
};

inline MultiIndex random_exponent(Rng& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
  MultiIndex a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = rng.range(lo, hi);
  return a;
}

inline LaurentPoly random_laurent(Rng& rng, const RingContext& ctx, std::size_t terms, std::int64_t lo,
                                  std::int64_t hi) {
  LaurentPoly f(ctx);
  for (std::size_t k = 0; k < terms; ++k) f.add_term(random_exponent(rng, ctx.nvars, lo, hi), rng.scalar(ctx.field));
  return f;
}

// Polynomial with every term of total degree <= deg.
inline LaurentPoly random_poly(Rng& rng, const RingContext& ctx, std::size_t terms, std::int64_t deg) {
  LaurentPoly f(ctx);
  for (std::size_t k = 0; k < terms; ++k) {
    MultiIndex a(ctx.nvars);
    std::int64_t left = rng.range(0, deg);
    for (std::size_t i = 0; i < ctx.nvars; ++i) {
      a[i] = i + 1 == ctx.nvars ? left : rng.range(0, left);
      left -= a[i];
    }
    f.add_term(a, rng.scalar(ctx.field));
  }
  return f;
}

inline TruncSeries random_series(Rng& rng, const RingContext& ctx, std::int64_t order, std::size_t terms,
                                 bool unit = false, bool maximal = false) {
  TruncSeries f = TruncSeries::from_poly(random_poly(rng, ctx, terms, order), order);
  const Scalar c = f.constant_term();
  if (maximal && !c.is_zero()) f = f - TruncSeries::constant(ctx, order, c);
  if (unit && c.is_zero()) f = f + TruncSeries::constant(ctx, order, rng.nonzero_scalar(ctx.field));
  return f;
}

inline Matrix random_matrix(Rng& rng, const Field& f, std::size_t n, std::int64_t bound = 3) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = f(static_cast<long>(rng.range(-bound, bound)));
  }
  return m;
}

}  // namespace mzlab::testing
