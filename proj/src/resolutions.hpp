#pragma once

#include <cstdint>
#include <vector>

#include "matrix.hpp"
#include "polynomial.hpp"
#include "sequences.hpp"

namespace fp {

/// Ranks of the Koszul complex on r elements: C(r, 0), ..., C(r, r).
IntSeq koszul_ranks(int r);

/// Ranks of the star product X * Y: truncate both complexes above degree 0,
/// tensor, shift down one degree, and augment with rank 1 in degree 0.
IntSeq star_ranks(const IntSeq& X, const IntSeq& Y);

/// Ranks of Cone(Omega): the star product plus, shifted into matching degree,
/// the tensor ranks of the truncated resolutions of R/I and R/I' with the two
/// Koszul complexes. These equal the Betti numbers of the fiber product only
/// when I and I' lie inside the squares of their maximal ideals; otherwise
/// they overcount, which is exactly what this function reports.
IntSeq cone_ranks(const IntSeq& S, const IntSeq& T, const IntSeq& X, const IntSeq& Y);

struct OracleLimits {
  size_t max_generators = 14;
  size_t max_multidegrees = 4000000;
};

/// One multidegree slice of K(koszul_vars) tensor R/I. Basis elements in
/// homological degree i are the subsets sigma of koszul_vars with |sigma| = i,
/// x^sigma dividing b, and b / x^sigma outside the ideal; the complement
/// monomial is determined by (b, sigma). Boundary matrices have entries 0, 1,
/// -1 and consecutive ones compose to zero.
struct MultidegreeComplex {
  Monomial multidegree;
  std::vector<int> koszul_vars;
  std::vector<std::vector<uint32_t>> basis;  // basis[i]: bitmasks over koszul_vars
  std::vector<Matrix> boundary;              // boundary[i]: C_i -> C_{i-1}; boundary[0] empty

  std::vector<size_t> homology_dims(const Field& k) const;
  bool boundaries_compose_to_zero(const Field& k) const;
};

MultidegreeComplex build_multidegree_complex(const std::vector<int>& koszul_vars,
                                             const MonomialIdeal& ideal, const Monomial& b,
                                             const Field& k);

/// All least common multiples of subsets of the minimal generators (the
/// multidegrees where the homology of the full Koszul complex can live).
std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, int nvars,
                                  const OracleLimits& limits);

/// Brute-force Betti numbers of R/I for a monomial ideal I: beta_i is the sum
/// over lcm-lattice multidegrees of the slice homology dimensions of the full
/// Koszul complex tensored with R/I. Exact over the given field.
IntSeq betti_monomial(const MonomialIdeal& ideal, int nvars, const Field& k,
                      const OracleLimits& limits = {});

/// True iff H_i(K(seq_vars) tensor R/ideal) = 0 for all i >= 1, i.e. the
/// variables form a regular sequence on R/ideal. Slices are scanned over the
/// finite exponent box that carries all homology up to isomorphic shifts.
bool koszul_regularity_check(const std::vector<int>& seq_vars, const MonomialIdeal& ideal,
                             int nvars, const Field& k, const OracleLimits& limits = {});

}  // namespace fp
