#pragma once

#include <string>

#include "sequences.hpp"

namespace fp {

/// Integer polynomial in t, dense coefficients, index = power of t.
using Poly = IntSeq;

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly one_plus_t_pow(int e);
/// Exact division by t; throws on a nonzero constant term.
Poly poly_div_t(const Poly& a);
Integer poly_eval(const Poly& a, long t);
std::string poly_str(const Poly& a);

/// Generating function of a Betti sequence.
Poly poincare_from_betti(const IntSeq& betti);

/// P_{R/I} = (1+t)^p P_{R/J} for a split ideal I = (x_1..x_p) + J.
Poly poincare_split(int p, const Poly& PJ);

/// Poincare series of the fiber product, the functional equation solved in
/// closed form:
/// P_F = (1+t)^{n'} P_I + (1+t)^n P_I' - (1+t)^{n+n'}
///       + ((1+t)/t) ((1+t)^n - (1+t)^p) ((1+t)^{n'} - (1+t)^q).
/// The division by t is exact; negative coefficients or degree overflow
/// signal inconsistent inputs.
Poly poincare_fiber(int n, int nprime, int p, int q, const Poly& PI, const Poly& PIprime);

/// The functional equation as a cross-multiplied exact identity:
/// t (P_F - (1+t)^{n'} P_I - (1+t)^n P_I' + (1+t)^{n+n'})
///   == (t+1) ((1+t)^n - (1+t)^p) ((1+t)^{n'} - (1+t)^q).
bool verify_functional_equation(int n, int nprime, int p, int q, const Poly& PI,
                                const Poly& PIprime, const Poly& PF);

}  // namespace fp
