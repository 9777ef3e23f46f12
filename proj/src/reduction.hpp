#pragma once

#include <vector>

#include "matrix.hpp"
#include "polynomial.hpp"

namespace fp {

/// Contiguous range of variables: the x-block {0..n-1} or the y-block
/// {n..n+n'-1} of a VariableContext.
struct VariableBlock {
  int offset = 0;
  int count = 0;

  static VariableBlock x_block(const VariableContext& ctx) { return {0, ctx.n}; }
  static VariableBlock y_block(const VariableContext& ctx) { return {ctx.n, ctx.nprime}; }
};

/// Matrix of degree-one coefficients: entry (i, j) is the coefficient of the
/// j-th block variable in the i-th generator. Rejects generators with a
/// nonzero constant term (the ideal would be the unit ideal).
Matrix linear_part(const std::vector<Polynomial>& gens, VariableBlock block, const Field& k);

/// p = dim_k((I + m^2) / m^2), the rank of the linear part.
int compute_p(const std::vector<Polynomial>& gens, VariableBlock block, const Field& k);

/// Gauss-Jordan elimination on the generators. The first p outputs each have a
/// distinct leading variable with coefficient 1 that is absent from the other
/// outputs' linear parts; the remaining outputs have no degree-one terms at
/// all. Zero polynomials are dropped.
std::vector<Polynomial> normalize_generators(const std::vector<Polynomial>& gens,
                                             VariableBlock block, const Field& k);

/// The normal form I = (leading variables) + J with J inside the square of the
/// ideal of trailing variables.
struct SplitIdeal {
  int p = 0;
  VariableBlock block;
  std::vector<int> variable_order;  // absolute indices: pivot variables, then the rest
  std::vector<Polynomial> J;        // generators in trailing variables only

  std::vector<int> leading_vars() const {
    return {variable_order.begin(), variable_order.begin() + p};
  }
  std::vector<int> trailing_vars() const {
    return {variable_order.begin() + p, variable_order.end()};
  }
};

SplitIdeal split_ideal(const std::vector<Polynomial>& gens, VariableBlock block,
                       const Field& k);

/// When every J generator is a single term, replace the list by the minimal
/// monomial generating set, leading-variable-first. No-op otherwise.
void minimalize_monomial_split(SplitIdeal& s);

}  // namespace fp
