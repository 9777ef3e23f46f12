#pragma once

#include <optional>
#include <vector>

#include "reduction.hpp"
#include "sequences.hpp"

namespace fp {

/// Full data of a fiber product instance: the ambient context, both splits,
/// and the Betti numbers of R/J and R/J' once resolved (by the oracle for
/// monomial J, or from a spec-file override).
struct FiberSpec {
  VariableContext ctx;
  SplitIdeal split_I;       // over the x-block
  SplitIdeal split_Iprime;  // over the y-block
  std::optional<IntSeq> betti_J;
  std::optional<IntSeq> betti_Jprime;

  int p() const { return split_I.p; }
  int q() const { return split_Iprime.p; }
  std::vector<int> tilde_x() const { return split_I.trailing_vars(); }
  std::vector<int> tilde_y() const { return split_Iprime.trailing_vars(); }
};

/// Generators of the defining ideal of the fiber product: I + I' + (xy).
/// No minimality is claimed.
std::vector<Polynomial> defining_ideal(const std::vector<Polynomial>& gens_I,
                                       const std::vector<Polynomial>& gens_Iprime,
                                       const VariableContext& ctx);

/// Minimal generators in the re-indexed coordinates: J, J', the cross terms
/// on trailing variables only, then the leading variables of both splits.
std::vector<Polynomial> minimal_defining_ideal(const FiberSpec& fs);

/// F as (reduced fiber product) tensor (Koszul quotient): the reduced
/// generators J + (tilde x tilde y) + J' and the regular sequence of leading
/// variables. The two parts partition minimal_defining_ideal.
struct Decomposition {
  std::vector<Polynomial> tilde_generators;
  std::vector<int> koszul_vars;
};

Decomposition decompose(const FiberSpec& fs);

}  // namespace fp
