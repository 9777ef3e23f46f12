#pragma once

#include <gmpxx.h>

#include <string>

#include "error.hpp"

namespace fp {

using Integer = mpz_class;
using Scalar = mpq_class;

/// Coefficient field: the rationals (characteristic 0) or a prime field GF(p).
/// Scalars are kept in canonical form: over Q the reduced fraction, over GF(p)
/// the residue 0..p-1 with denominator 1.
class Field {
 public:
  Field() : char_(0) {}

  static Field rationals() { return Field(); }
  static Field gf(unsigned long p);

  unsigned long characteristic() const { return char_; }
  bool is_rationals() const { return char_ == 0; }

  /// Canonical form of an arbitrary rational. Over GF(p) the denominator is
  /// inverted mod p; a denominator divisible by p is rejected.
  Scalar canon(const Scalar& v) const;
  Scalar from_long(long v) const { return canon(Scalar(v)); }

  Scalar add(const Scalar& a, const Scalar& b) const { return canon(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return canon(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return canon(a * b); }
  Scalar neg(const Scalar& a) const { return canon(-a); }
  Scalar inverse(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inverse(b)); }

  bool is_zero(const Scalar& a) const { return sgn(a) == 0; }
  bool is_one(const Scalar& a) const { return a == 1; }

  std::string str() const;  // "Q" or "GF 7"

  bool operator==(const Field&) const = default;

 private:
  unsigned long char_;  // 0 for Q, else a prime
};

std::string scalar_str(const Scalar& v);

}  // namespace fp
