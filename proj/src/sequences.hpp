#pragma once

#include <string>
#include <vector>

#include "field.hpp"

namespace fp {

/// Finite sequence of non-negative integers indexed by homological degree.
/// Used both for free-module ranks and for Betti numbers; Betti sequences
/// additionally start with 1 and carry no trailing zeros.
using IntSeq = std::vector<Integer>;

inline IntSeq trim_trailing_zeros(IntSeq s) {
  while (s.size() > 1 && s.back() == 0) s.pop_back();
  return s;
}

inline Integer seq_at(const IntSeq& s, long i) {
  return (i >= 0 && i < static_cast<long>(s.size())) ? s[i] : Integer(0);
}

/// Cauchy product: the rank sequence of a tensor product of complexes.
inline IntSeq convolve(const IntSeq& a, const IntSeq& b) {
  if (a.empty() || b.empty()) return {};
  IntSeq r(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trim_trailing_zeros(std::move(r));
}

inline bool is_betti_sequence(const IntSeq& s) {
  if (s.empty() || s[0] != 1) return false;
  for (const auto& v : s)
    if (v < 0) return false;
  return true;
}

inline std::string seq_str(const IntSeq& s) {
  std::string out = "(";
  for (size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + s[i].get_str();
  return out + ")";
}

}  // namespace fp
