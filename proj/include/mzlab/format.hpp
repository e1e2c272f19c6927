#pragma once

#include <map>
#include <string>

#include "mzlab/multi_index.hpp"
#include "mzlab/scalar.hpp"

namespace mzlab {

using TermMap = std::map<MultiIndex, Scalar>;

namespace detail {

inline std::string format_monomial(const MultiIndex& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (a[i] != 1) s += "^" + std::to_string(a[i]);
  }
  return s;
}

/// Canonical text: ascending term order, `p/q` coefficients, ` + ` / ` - `
/// separators, unit coefficients elided in front of monomials.
inline std::string format_terms(const TermMap& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [a, c] : terms) {
    const bool neg = c.is_negative();
    const Scalar mag = neg ? -c : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const std::string mono = format_monomial(a);
    if (mono.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.to_string() + "*" + mono;
    }
  }
  return out;
}

}  // namespace detail

}  // namespace mzlab
