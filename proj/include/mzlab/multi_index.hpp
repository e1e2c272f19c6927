#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "mzlab/errors.hpp"

namespace mzlab {

/// Exponent vector a in Z^n, standing for the monomial x^a.
///
/// Ordering is the canonical term order used everywhere for iteration and
/// printing: total degree first, then lexicographic on the entries.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : e_(n, 0) {}
  MultiIndex(std::initializer_list<std::int64_t> e) : e_(e) {}
  explicit MultiIndex(std::vector<std::int64_t> e) : e_(std::move(e)) {}

  static MultiIndex unit(std::size_t n, std::size_t i) {
    MultiIndex m(n);
    m.e_.at(i) = 1;
    return m;
  }

  std::size_t size() const noexcept { return e_.size(); }
  std::int64_t operator[](std::size_t i) const { return e_[i]; }
  std::int64_t& operator[](std::size_t i) { return e_[i]; }
  const std::vector<std::int64_t>& exponents() const noexcept { return e_; }

  std::int64_t total_degree() const { return std::accumulate(e_.begin(), e_.end(), std::int64_t{0}); }

  bool is_zero() const {
    for (auto x : e_) {
      if (x != 0) return false;
    }
    return true;
  }

  /// All entries non-negative, i.e. x^a is an honest polynomial monomial.
  bool is_natural() const {
    for (auto x : e_) {
      if (x < 0) return false;
    }
    return true;
  }

  MultiIndex& operator+=(const MultiIndex& o) {
    require_same_size(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
  }
  MultiIndex& operator-=(const MultiIndex& o) {
    require_same_size(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
  }
  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }
  friend MultiIndex operator-(MultiIndex a, const MultiIndex& b) { return a -= b; }
  friend MultiIndex operator*(std::int64_t k, MultiIndex a) {
    for (auto& x : a.e_) x *= k;
    return a;
  }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

  friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
    const auto da = a.total_degree();
    const auto db = b.total_degree();
    if (da != db) return da < db;
    return a.e_ < b.e_;
  }
  friend bool operator>(const MultiIndex& a, const MultiIndex& b) { return b < a; }

  /// `(a1,a2,...)`
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (i != 0) s += ",";
      s += std::to_string(e_[i]);
    }
    return s + ")";
  }

  void require_same_size(const MultiIndex& o) const {
    if (o.e_.size() != e_.size()) {
      throw InputError("multi-index length mismatch: " + std::to_string(e_.size()) + " vs " +
                       std::to_string(o.e_.size()));
    }
  }

 private:
  std::vector<std::int64_t> e_;
};

/// The weight <d, b> of the monomial x^b under the grading vector d.
inline std::int64_t weight(const MultiIndex& b, const MultiIndex& d) {
  b.require_same_size(d);
  std::int64_t w = 0;
  for (std::size_t i = 0; i < b.size(); ++i) w += b[i] * d[i];
  return w;
}

}  // namespace mzlab
