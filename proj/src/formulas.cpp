#include "formulas.hpp"

#include "error.hpp"

namespace fp {

Integer binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

namespace {

void require_betti_input(const IntSeq& b, const char* what) {
  if (!is_betti_sequence(b))
    throw Error(Errc::inconsistent,
                std::string(what) + " must be a Betti sequence starting with 1, got " +
                    seq_str(b));
}

}  // namespace

IntSeq betti_convolution(int p, const IntSeq& bettiJ) {
  if (p < 0) throw Error(Errc::bad_argument, "p must be non-negative");
  require_betti_input(bettiJ, "betti_J");
  IntSeq out(p + bettiJ.size(), Integer(0));
  for (long ell = 0; ell < static_cast<long>(out.size()); ++ell)
    for (long i = 0; i <= ell; ++i) out[ell] += binom(p, ell - i) * seq_at(bettiJ, i);
  return trim_trailing_zeros(std::move(out));
}

Integer betti_tilde_term(int n_red, int nprime_red, const IntSeq& bettiJ,
                         const IntSeq& bettiJprime, long ell) {
  Integer v = binom(n_red + nprime_red, ell + 1) - binom(n_red + 1, ell + 1) -
              binom(nprime_red + 1, ell + 1);
  for (long i = 0; i <= ell; ++i) {
    long j = ell - i;
    v += seq_at(bettiJ, i) * binom(nprime_red, j) + binom(n_red, j) * seq_at(bettiJprime, i);
  }
  return v;
}

IntSeq betti_tilde(int n_red, int nprime_red, const IntSeq& bettiJ,
                   const IntSeq& bettiJprime) {
  if (n_red < 0 || nprime_red < 0)
    throw Error(Errc::bad_argument, "variable counts must be non-negative");
  require_betti_input(bettiJ, "betti_J");
  require_betti_input(bettiJprime, "betti_J'");
  IntSeq out;
  out.push_back(Integer(1));
  for (long ell = 1; ell <= n_red + nprime_red; ++ell) {
    Integer v = betti_tilde_term(n_red, nprime_red, bettiJ, bettiJprime, ell);
    if (v < 0)
      throw Error(Errc::inconsistent, "inconsistent Betti data: degree " +
                                          std::to_string(ell) + " of the reduced fiber product is " +
                                          v.get_str());
    out.push_back(std::move(v));
  }
  return trim_trailing_zeros(std::move(out));
}

Integer betti_fiber_term(int n, int nprime, int p, int q, const IntSeq& bettiI,
                         const IntSeq& bettiIprime, long t) {
  Integer v = binom(n + nprime, t + 1) - binom(nprime + p + 1, t + 1) -
              binom(n + q + 1, t + 1) + binom(p + q + 1, t + 1);
  for (long w = 0; w <= t; ++w) {
    long z = t - w;
    v += seq_at(bettiI, w) * binom(nprime, z) + binom(n, z) * seq_at(bettiIprime, w);
  }
  return v;
}

IntSeq betti_fiber(int n, int nprime, int p, int q, const IntSeq& bettiI,
                   const IntSeq& bettiIprime) {
  if (n < 1 || nprime < 1)
    throw Error(Errc::bad_argument, "the formula requires at least one variable on each side");
  if (p < 0 || p > n || q < 0 || q > nprime)
    throw Error(Errc::bad_argument, "need 0 <= p <= n and 0 <= q <= n'");
  require_betti_input(bettiI, "betti(R/I)");
  require_betti_input(bettiIprime, "betti(R/I')");
  IntSeq out;
  out.push_back(Integer(1));
  for (long t = 1; t <= n + nprime; ++t) {
    Integer v = betti_fiber_term(n, nprime, p, q, bettiI, bettiIprime, t);
    if (v < 0)
      throw Error(Errc::inconsistent, "inconsistent Betti data: degree " + std::to_string(t) +
                                          " of the fiber product is " + v.get_str());
    out.push_back(std::move(v));
  }
  return trim_trailing_zeros(std::move(out));
}

}  // namespace fp
