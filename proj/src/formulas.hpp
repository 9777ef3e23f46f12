#pragma once

#include "sequences.hpp"

namespace fp {

/// Binomial coefficient with the out-of-range-zero convention (k < 0 or k > n
/// gives 0; n < 0 gives 0). The Betti sums below run past the top index, so
/// the convention is load-bearing.
Integer binom(long n, long k);

/// Betti numbers of R/I from I = (x_1..x_p) + J:
/// beta_l(R/I) = sum_i C(p, l - i) * beta_i(R/J).
IntSeq betti_convolution(int p, const IntSeq& bettiJ);

/// The reduced fiber product's Betti numbers in terms of the trailing
/// variable counts and the Betti numbers of R/J, R/J'. beta_0 = 1 is set
/// explicitly; the closed expression is used for l >= 1 only.
IntSeq betti_tilde(int n_red, int nprime_red, const IntSeq& bettiJ, const IntSeq& bettiJprime);

/// The displayed degree-l expression for beta_l of the reduced fiber product,
/// without clamping; exposed for identity tests.
Integer betti_tilde_term(int n_red, int nprime_red, const IntSeq& bettiJ,
                         const IntSeq& bettiJprime, long ell);

/// Betti numbers of the fiber product over the full power-series ring:
/// beta_0 = 1 and, for t >= 1,
/// beta_t = C(n+n', t+1) - C(n'+p+1, t+1) - C(n+q+1, t+1) + C(p+q+1, t+1)
///          + sum_{w+z=t} (beta_w(R/I) C(n', z) + C(n, z) beta_w(R/I')).
IntSeq betti_fiber(int n, int nprime, int p, int q, const IntSeq& bettiI,
                   const IntSeq& bettiIprime);

/// The displayed degree-t expression, without clamping or trimming.
Integer betti_fiber_term(int n, int nprime, int p, int q, const IntSeq& bettiI,
                         const IntSeq& bettiIprime, long t);

}  // namespace fp
