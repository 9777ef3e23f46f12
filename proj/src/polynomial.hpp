#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "field.hpp"

namespace fp {

/// Ambient variable set: x1..xn followed by y1..yn' plus the coefficient field.
struct VariableContext {
  int n = 1;
  int nprime = 1;
  Field field;

  int total() const { return n + nprime; }
  bool is_x(int v) const { return v < n; }
  std::string var_name(int v) const {
    return v < n ? "x" + std::to_string(v + 1) : "y" + std::to_string(v - n + 1);
  }
};

/// Exponent vector over a fixed number of variables.
class Monomial {
 public:
  explicit Monomial(int nvars = 0) : e_(nvars, 0) {}
  static Monomial one(int nvars) { return Monomial(nvars); }
  static Monomial variable(int nvars, int v) {
    Monomial m(nvars);
    m.e_[v] = 1;
    return m;
  }

  int nvars() const { return static_cast<int>(e_.size()); }
  uint32_t exp(int v) const { return e_[v]; }
  void set_exp(int v, uint32_t e) { e_[v] = e; }

  long degree() const {
    long d = 0;
    for (uint32_t e : e_) d += e;
    return d;
  }
  bool is_one() const { return degree() == 0; }
  bool involves(int v) const { return e_[v] > 0; }
  bool is_variable() const { return degree() == 1; }

  Monomial times(const Monomial& o) const {
    Monomial r(*this);
    for (int v = 0; v < nvars(); ++v) r.e_[v] += o.e_[v];
    return r;
  }
  bool divides(const Monomial& o) const {
    for (int v = 0; v < nvars(); ++v)
      if (e_[v] > o.e_[v]) return false;
    return true;
  }
  Monomial lcm(const Monomial& o) const {
    Monomial r(*this);
    for (int v = 0; v < nvars(); ++v)
      if (o.e_[v] > r.e_[v]) r.e_[v] = o.e_[v];
    return r;
  }

  /// Lexicographic order with x1 > x2 > ... > y_{n'}: the monomial with the
  /// larger exponent on the earliest differing variable is the larger one.
  static int lex_cmp(const Monomial& a, const Monomial& b) {
    for (int v = 0; v < a.nvars(); ++v) {
      if (a.e_[v] != b.e_[v]) return a.e_[v] > b.e_[v] ? 1 : -1;
    }
    return 0;
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator<(const Monomial& o) const { return lex_cmp(*this, o) < 0; }

  std::string str(const VariableContext& ctx) const;

 private:
  std::vector<uint32_t> e_;
};

struct Term {
  Scalar coeff;
  Monomial mono;
};

/// Finite sum of terms with nonzero coefficients, stored lex-descending with
/// no duplicate monomials. The zero polynomial is the empty term list.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial from_terms(std::vector<Term> terms, const Field& k);
  static Polynomial from_monomial(const Monomial& m) {
    Polynomial g;
    g.terms_.push_back({Scalar(1), m});
    return g;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  const Monomial& leading_monomial() const { return terms_.front().mono; }

  Scalar coeff_of(const Monomial& m) const;
  /// Coefficient of the degree-one monomial x_v.
  Scalar linear_coeff(int v) const;
  Scalar constant_term() const;
  bool has_constant_term() const;
  long max_term_degree() const;
  long min_term_degree() const;
  bool involves(int v) const;

  Polynomial scaled(const Scalar& c, const Field& k) const;
  Polynomial add(const Polynomial& g, const Field& k) const;
  /// this + c * g
  Polynomial axpy(const Scalar& c, const Polynomial& g, const Field& k) const;
  /// Delete every term whose monomial involves a variable with kill[v] true.
  Polynomial substitute_zero(const std::vector<char>& kill) const;

  std::string str(const VariableContext& ctx) const;

  bool operator==(const Polynomial& o) const;

 private:
  std::vector<Term> terms_;
};

/// Monomial ideal held by its unique minimal (divisibility-irredundant)
/// generating set, sorted lexicographically.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;  // zero ideal
  explicit MonomialIdeal(std::vector<Monomial> gens);

  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  size_t size() const { return gens_.size(); }

  bool contains(const Monomial& m) const;
  bool contains_ideal(const MonomialIdeal& o) const;
  MonomialIdeal plus(const MonomialIdeal& o) const;

  bool operator==(const MonomialIdeal& o) const { return gens_ == o.gens_; }

 private:
  std::vector<Monomial> gens_;
};

}  // namespace fp
